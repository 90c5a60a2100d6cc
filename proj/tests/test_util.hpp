#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "symq/algebra.hpp"
#include "symq/diagram.hpp"
#include "symq/invariants.hpp"
#include "symq/io.hpp"
#include "symq/presentation.hpp"

namespace testutil {

// deterministic rng for property tests
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % n); }
  bool coin() { return next() & 1; }
};

inline symq::FreeWord random_word(Rng& rng, int gens, int max_len) {
  symq::FreeWord w;
  int len = rng.below(max_len + 1);
  for (int i = 0; i < len; ++i)
    w.push({rng.below(gens), rng.coin() ? 1 : -1});
  return w;
}

inline symq::FsrElement random_element(Rng& rng, int gens, int max_len,
                                       bool allow_bar = true) {
  return {{rng.below(gens), allow_bar && rng.coin()}, random_word(rng, gens, max_len)};
}

// Alexander quandle x^y = t*x + (1-t)*y mod n, for gcd(t, n) = 1.
inline symq::QuandleTable alexander_quandle(int n, int t) {
  symq::QuandleTable q;
  q.n = n;
  q.op.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      q.at(x, y) = ((t * x + (1 - t) * y) % n + n) % n;
  return q;
}

// every labeled quandle table of the given (small) order
inline std::vector<symq::QuandleTable> all_quandles(int n) {
  std::vector<symq::QuandleTable> out;
  symq::QuandleTable t;
  t.n = n;
  t.op.assign(static_cast<std::size_t>(n) * n, 0);
  const std::size_t cells = t.op.size();
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells) {
      if (symq::verify_quandle(t)) out.push_back(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t.op[cell] = v;
      self(self, cell + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<symq::SymmetricQuandleTable> builtin_pool(int max_order) {
  std::vector<symq::SymmetricQuandleTable> out;
  for (const std::string& name : symq::builtin_target_names(max_order))
    out.push_back(symq::builtin_target(name));
  return out;
}

// multiset of relations, each canonicalized under side swap and bar-both
inline std::vector<symq::Relation> relation_multiset(
    const symq::SymQuandlePresentation& p) {
  using symq::FsrElement;
  using symq::Relation;
  std::vector<Relation> out;
  for (const Relation& r : p.relations) {
    Relation best = r;
    auto consider = [&](FsrElement a, FsrElement b) {
      if (b < a) std::swap(a, b);
      Relation cand{std::move(a), std::move(b)};
      if (cand < best) best = std::move(cand);
    };
    consider(r.first, r.second);
    if (symq::is_symmetric(p.flavor))
      consider(symq::fsr_rho(r.first), symq::fsr_rho(r.second));
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// structural equality up to a generator bijection; tries all of them
inline bool presentations_match(const symq::SymQuandlePresentation& a,
                                const symq::SymQuandlePresentation& b) {
  if (a.generators.size() != b.generators.size()) return false;
  if (a.relations.size() != b.relations.size()) return false;
  const int k = a.generators.size();
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  auto target = relation_multiset(b);
  do {
    auto relabeled = symq::relabel_generators(a, perm, b.generators);
    if (relation_multiset(relabeled) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Searches normal flips and over-sheet designations of the standard trefoil
// PD for a configuration whose presentation matches `target` up to a
// generator bijection; returns the relabeled presentation when found.
inline std::optional<symq::SymQuandlePresentation> match_trefoil_presentation(
    const symq::SymQuandlePresentation& target) {
  symq::Diagram base =
      symq::pd_to_diagram(symq::parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
  auto target_ms = relation_multiset(target);
  auto shape = [](const symq::SymQuandlePresentation& p) {
    std::vector<std::pair<std::size_t, bool>> s;
    for (const symq::Relation& r : p.relations)
      s.push_back({r.first.word.size(), r.second.letter.barred});
    std::sort(s.begin(), s.end());
    return s;
  };
  auto target_shape = shape(target);
  for (int flips = 0; flips < 64; ++flips) {
    symq::Diagram flipped = base;
    for (int k = 0; k < 6; ++k)
      if (flips & (1 << k)) flipped = symq::flip_normal(std::move(flipped), k);
    for (int overs = 0; overs < 8; ++overs) {
      symq::Diagram d = flipped;
      for (int k = 0; k < 3; ++k)
        if (overs & (1 << k)) {
          const symq::Stratum& s = d.strata[k];
          int other = s.over == s.upper_i ? s.upper_j : s.upper_i;
          d = symq::set_over(std::move(d), k, other);
        }
      symq::SymQuandlePresentation p = symq::presentation_from_diagram(d);
      if (shape(p) != target_shape) continue;
      std::vector<int> perm(6);
      for (int i = 0; i < 6; ++i) perm[i] = i;
      do {
        auto relabeled =
            symq::relabel_generators(p, perm, target.generators);
        if (relation_multiset(relabeled) == target_ms) return relabeled;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return std::nullopt;
}

// brute force over every assignment; the oracle for count_colorings
inline std::uint64_t brute_force_colorings(const symq::Diagram& d,
                                           const symq::SymmetricQuandleTable& x) {
  const int n = x.quandle.n;
  std::vector<int> c(d.m, 0);
  std::uint64_t count = 0;
  while (true) {
    if (symq::is_coloring(d, x, c)) ++count;
    int i = d.m - 1;
    while (i >= 0 && c[i] == n - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return count;
}

inline symq::Diagram random_diagram(Rng& rng, int max_sheets, int max_strata) {
  symq::Diagram d;
  d.m = 1 + rng.below(max_sheets);
  int strata = rng.below(max_strata + 1);
  for (int k = 0; k < strata; ++k) {
    symq::Stratum s;
    s.upper_i = rng.below(d.m);
    s.upper_j = rng.below(d.m);
    s.over = rng.coin() ? s.upper_i : s.upper_j;
    s.lower_s = rng.below(d.m);
    s.lower_t = rng.below(d.m);
    s.upper_coherent = rng.coin();
    s.lower_coherent = rng.coin();
    d.strata.push_back(s);
  }
  return d;
}

}  // namespace testutil
