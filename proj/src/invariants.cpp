#include "symq/invariants.hpp"

#include <stdexcept>

namespace symq {

namespace {

void check_target(const SymmetricQuandleTable& target) {
  if (Verdict v = verify_quandle(target.quandle); !v)
    throw std::invalid_argument("coloring target: " + v.describe());
  if (Verdict v = verify_good_involution(target); !v)
    throw std::invalid_argument("coloring target: " + v.describe());
}

// A-relations copy a color across the over strand (through rho when the
// normals disagree); B-relations solve for the far lower sheet, or for the
// near one through the inverse operation. Branch only when nothing is
// forced.
struct ColorSearch {
  const Diagram& d;
  const SymmetricQuandleTable& X;
  std::vector<int> inv;
  std::vector<int> color;
  std::vector<int> trail;

  ColorSearch(const Diagram& dia, const SymmetricQuandleTable& x)
      : d(dia), X(x), inv(op_inverse_table(x.quandle)), color(dia.m, -1) {}

  bool assign(int sheet, int val, bool& changed) {
    if (color[sheet] == val) return true;
    if (color[sheet] != -1) return false;
    color[sheet] = val;
    trail.push_back(sheet);
    changed = true;
    return true;
  }

  bool propagate() {
    const int n = X.quandle.n;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Stratum& s : d.strata) {
        int ci = color[s.upper_i], cj = color[s.upper_j];
        if (ci != -1) {
          int want = s.upper_coherent ? ci : X.rho[ci];
          if (!assign(s.upper_j, want, changed)) return false;
        } else if (cj != -1) {
          int want = s.upper_coherent ? cj : X.rho[cj];
          if (!assign(s.upper_i, want, changed)) return false;
        }
        int cs = color[s.lower_s], co = color[s.over], ct = color[s.lower_t];
        if (cs != -1 && co != -1) {
          int v = X.quandle.at(cs, co);
          int want = s.lower_coherent ? v : X.rho[v];
          if (!assign(s.lower_t, want, changed)) return false;
        } else if (ct != -1 && co != -1) {
          int tt = s.lower_coherent ? ct : X.rho[ct];
          int want = inv[static_cast<std::size_t>(tt) * n + co];
          if (!assign(s.lower_s, want, changed)) return false;
        }
      }
    }
    return true;
  }

  template <typename Leaf>
  bool search(const Leaf& leaf) {  // false = stop early
    std::size_t mark = trail.size();
    if (propagate()) {
      int free = -1;
      for (int i = 0; i < d.m; ++i)
        if (color[i] == -1) {
          free = i;
          break;
        }
      if (free == -1) {
        if (!leaf(color)) {
          unwind(mark);
          return false;
        }
      } else {
        for (int v = 0; v < X.quandle.n; ++v) {
          std::size_t inner = trail.size();
          bool dummy = false;
          assign(free, v, dummy);
          if (!search(leaf)) {
            unwind(mark);
            return false;
          }
          unwind(inner);
        }
      }
    }
    unwind(mark);
    return true;
  }

  void unwind(std::size_t mark) {
    while (trail.size() > mark) {
      color[trail.back()] = -1;
      trail.pop_back();
    }
  }
};

}  // namespace

bool is_coloring(const Diagram& d, const SymmetricQuandleTable& target,
                 const Coloring& c) {
  validate(d);
  check_target(target);
  if (static_cast<int>(c.size()) != d.m) return false;
  for (int v : c)
    if (v < 0 || v >= target.quandle.n) return false;
  for (const Stratum& s : d.strata) {
    int rhs_a = s.upper_coherent ? c[s.upper_j] : target.rho[c[s.upper_j]];
    if (c[s.upper_i] != rhs_a) return false;
    int rhs_b = s.lower_coherent ? c[s.lower_t] : target.rho[c[s.lower_t]];
    if (target.quandle.at(c[s.lower_s], c[s.over]) != rhs_b) return false;
  }
  return true;
}

std::uint64_t count_colorings(const Diagram& d,
                              const SymmetricQuandleTable& target) {
  validate(d);
  check_target(target);
  ColorSearch search(d, target);
  std::uint64_t count = 0;
  search.search([&](const Coloring&) {
    if (count == UINT64_MAX)
      throw std::overflow_error("count_colorings: counter overflow");
    ++count;
    return true;
  });
  return count;
}

ColoringList enumerate_colorings(const Diagram& d,
                                 const SymmetricQuandleTable& target,
                                 std::size_t limit) {
  validate(d);
  check_target(target);
  ColorSearch search(d, target);
  ColoringList out;
  search.search([&](const Coloring& c) {
    if (out.colorings.size() >= limit) {
      out.truncated = true;
      return false;
    }
    out.colorings.push_back(c);
    return true;
  });
  return out;
}

bool coloring_hom_crosscheck(const Diagram& d,
                             const SymmetricQuandleTable& target) {
  return count_colorings(d, target) ==
         hom_count(presentation_from_diagram(d), target);
}

KnotGroupResult knot_group_pipeline(const Diagram& d) {
  KnotGroupResult res;
  res.group = associated_group(presentation_from_diagram(d));
  res.invariant_factors = abelianization(res.group);
  return res;
}

}  // namespace symq
