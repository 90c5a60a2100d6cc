#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symq/algebra.hpp"
#include "symq/fsr.hpp"

namespace symq {

enum class Flavor { rack, quandle, symmetric_rack, symmetric_quandle };

constexpr bool is_symmetric(Flavor f) {
  return f == Flavor::symmetric_rack || f == Flavor::symmetric_quandle;
}
constexpr bool has_idempotence(Flavor f) {
  return f == Flavor::quandle || f == Flavor::symmetric_quandle;
}
std::string to_string(Flavor f);
Flavor flavor_from_string(std::string_view s);

using Relation = std::pair<FsrElement, FsrElement>;

struct SymQuandlePresentation {
  GeneratorSet generators;
  std::vector<Relation> relations;
  Flavor flavor = Flavor::symmetric_quandle;
};

/// Index ranges, and no barred letters unless the flavor is symmetric.
void validate(const SymQuandlePresentation& p);

struct ClosureBudget {
  int max_word_length = 8;
  std::size_t max_pairs = 10000;
};

struct ClosureResult {
  std::vector<Relation> pairs;  // canonically oriented and sorted
  bool saturated = false;       // false when the pair budget was hit
};

/// Bounded saturation of the defining relations under the closure moves of
/// the presentation's flavor: pair symmetry and transitivity, the right
/// action by generators and their inverses, rack conjugation on both sides,
/// bar of both sides (symmetric flavors), and the diagonal idempotence
/// pairs (quandle flavors). Diagonal pairs (x, x) are treated as always
/// present rather than stored; any derived pair whose element words exceed
/// the length budget is discarded. Conjugation instantiates the elements
/// occurring in the set plus the generator atoms, shortest pairs first.
ClosureResult consequence_closure(const SymQuandlePresentation& p,
                                  const ClosureBudget& budget);

/// Membership modulo the virtual diagonal and pair orientation.
bool closure_contains(const ClosureResult& r, const FsrElement& lhs,
                      const FsrElement& rhs);

enum class ProofStatus { proven, unknown };

/// Semi-decision: proven iff (lhs, rhs) turns up in the bounded closure.
/// Never claims inequality.
ProofStatus prove_equal(const SymQuandlePresentation& p, const FsrElement& lhs,
                        const FsrElement& rhs, const ClosureBudget& budget);

/// Removes a generator defined by relation `defining` (one side a bare
/// generator or barred generator, the other side free of it), substituting
/// throughout. Presented object is unchanged.
SymQuandlePresentation eliminate_generator(const SymQuandlePresentation& p,
                                           int gen, std::size_t defining);

/// First (generator, relation) pair in solvable form, if any.
std::optional<std::pair<int, std::size_t>> find_eliminable(
    const SymQuandlePresentation& p);

/// Rewrites a relation into a solved form: bare unbarred right-hand side,
/// preferring a positive exponent word on the left.
Relation normalize_relation(const Relation& r, Flavor flavor);

/// normalize_relation everywhere, dropping diagonal and duplicate relations.
SymQuandlePresentation normalize_relations(const SymQuandlePresentation& p);

/// Renames generators: new index of old generator i is perm[i].
SymQuandlePresentation relabel_generators(const SymQuandlePresentation& p,
                                          const std::vector<int>& perm,
                                          const GeneratorSet& new_names);

struct GroupPresentation {
  GeneratorSet generators;
  std::vector<FreeWord> relators;
};

/// Group on the same generators; each relation (u, v) contributes the
/// relator augment(u) * augment(v)^-1, which turns x^y into y^-1 x y and
/// bars into inverses.
GroupPresentation associated_group(const SymQuandlePresentation& p);

/// Invariant factors of the abelianized group, divisibility order, one 0
/// per free rank. Exact integer arithmetic throughout.
std::vector<long long> abelianization(const GroupPresentation& g);

/// Value of an element under an assignment of target elements to
/// generators. `inv` is the target's op_inverse_table.
int eval_element(const FsrElement& e, const std::vector<int>& assignment,
                 const SymmetricQuandleTable& target,
                 const std::vector<int>& inv);

/// Every generator assignment satisfying all relations, in lexicographic
/// order. The target must verify as a symmetric quandle.
void for_each_hom(const SymQuandlePresentation& p,
                  const SymmetricQuandleTable& target,
                  const std::function<void(const std::vector<int>&)>& fn);

std::uint64_t hom_count(const SymQuandlePresentation& p,
                        const SymmetricQuandleTable& target);

}  // namespace symq
