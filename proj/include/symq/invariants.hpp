#pragma once

#include <cstdint>
#include <vector>

#include "symq/diagram.hpp"

namespace symq {

using Coloring = std::vector<int>;  // semi-sheet index -> target element

/// Direct check of every A- and B-relation.
bool is_coloring(const Diagram& d, const SymmetricQuandleTable& target,
                 const Coloring& c);

/// Exact count by propagation and backtracking. Throws std::overflow_error
/// rather than wrapping.
std::uint64_t count_colorings(const Diagram& d,
                              const SymmetricQuandleTable& target);

struct ColoringList {
  std::vector<Coloring> colorings;  // lexicographic
  bool truncated = false;
};

ColoringList enumerate_colorings(const Diagram& d,
                                 const SymmetricQuandleTable& target,
                                 std::size_t limit);

/// count_colorings(d) == hom_count(presentation_from_diagram(d)).
bool coloring_hom_crosscheck(const Diagram& d,
                             const SymmetricQuandleTable& target);

struct KnotGroupResult {
  GroupPresentation group;
  std::vector<long long> invariant_factors;
};

/// Diagram -> presentation -> associated group -> abelianization.
KnotGroupResult knot_group_pipeline(const Diagram& d);

}  // namespace symq
