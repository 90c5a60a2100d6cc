#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "symq/presentation.hpp"

namespace symq {

/// One double point stratum. The two upper semi-sheets run over the two
/// lower ones; `over` picks which upper semi-sheet the relation x_s^{x_over}
/// reads through, and (s, t) is ordered so that the normal of `over` points
/// from s to t. Coherence flags compare the normal vectors of each pair.
struct Stratum {
  int upper_i = 0, upper_j = 0;
  bool upper_coherent = true;
  int over = 0;  // upper_i or upper_j
  int lower_s = 0, lower_t = 0;
  bool lower_coherent = true;
  bool operator==(const Stratum&) const = default;
};

/// Combinatorial diagram of an n-manifold knot: semi-sheets plus double
/// point strata. `dimension` is carried as metadata only.
struct Diagram {
  int m = 0;
  std::vector<Stratum> strata;
  std::vector<std::string> labels;  // optional; size m when present
  int dimension = 1;
  bool operator==(const Diagram&) const = default;
};

void validate(const Diagram& d);

struct PdCrossing {
  std::array<int, 4> e;  // slots a, b, c, d counterclockwise from the
                         // incoming under edge; under runs a -> c
  bool positive = false;  // over strand runs d -> b
};

struct PdCode {
  int edges = 0;
  int loops = 0;  // crossingless closed components ('O' terms)
  std::vector<PdCrossing> crossings;
};

/// Whitespace-separated X[a,b,c,d] terms, plus 'O' for a crossingless
/// component. Validates arity, orientability and planarity; edges are
/// relabeled densely in sorted order of the input labels.
PdCode parse_pd(std::string_view text);

/// Signed Gauss code of a knot, e.g. "O1+U2+O3+U1+O2+U3+".
PdCode parse_gauss(std::string_view text);

/// Semi-sheets are the PD edges (the projection cut at every passage), one
/// stratum per crossing. Default normals are the tangent rotated a quarter
/// turn counterclockwise, which makes every coherence flag true; `flips`
/// post-composes flip_normal for the listed semi-sheets.
Diagram pd_to_diagram(const PdCode& pd, const std::vector<int>& flips = {});

/// Reverse the normal of one semi-sheet. Involutive.
Diagram flip_normal(Diagram d, int sheet);

/// Re-designate the over semi-sheet of a stratum; the lower pair swaps when
/// the two upper normals are incoherent.
Diagram set_over(Diagram d, std::size_t stratum, int sheet);

/// Generators are the semi-sheets; one A-relation and one B-relation per
/// stratum, with rho inserted where normals are incoherent.
SymQuandlePresentation presentation_from_diagram(const Diagram& d);

/// Requires every coherence flag true (orientation-induced normals). The
/// upper pairs merge into sheets and the B-relations become x_i^{x_j} = x_k;
/// quandle flavor.
SymQuandlePresentation oriented_presentation_from_diagram(const Diagram& d);

}  // namespace symq
