#include "symq/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symq/errors.hpp"

namespace symq {

namespace {

Verdict fail(std::string law, int a = -1, int b = -1, int c = -1) {
  Verdict v;
  v.ok = false;
  v.law = std::move(law);
  v.witness = {a, b, c};
  return v;
}

Verdict check_table_shape(int n, const std::vector<int>& table) {
  if (n <= 0 || table.size() != static_cast<std::size_t>(n) * n)
    return fail("shape");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = table[static_cast<std::size_t>(x) * n + y];
      if (v < 0 || v >= n) return fail("entry-range", x, y);
    }
  return {};
}

}  // namespace

std::string Verdict::describe() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "fails " << law;
  bool first = true;
  for (int w : witness) {
    if (w < 0) continue;
    os << (first ? " at " : ", ") << w;
    first = false;
  }
  return os.str();
}

namespace {

// sink returns false to stop at the first violation
using Sink = bool (*)(std::vector<Verdict>&, Verdict);

bool scan_rack(const RackTable& t, std::vector<Verdict>& out, Sink sink) {
  if (Verdict v = check_table_shape(t.n, t.op); !v)
    return sink(out, std::move(v));  // no point scanning a malformed table
  std::vector<char> seen(t.n);
  for (int y = 0; y < t.n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < t.n; ++x) {
      int v = t.at(x, y);
      if (seen[v]) {
        if (!sink(out, fail("column-bijectivity", y))) return false;
        break;
      }
      seen[v] = 1;
    }
  }
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      for (int z = 0; z < t.n; ++z)
        if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z)))
          if (!sink(out, fail("self-distributivity", x, y, z))) return false;
  return true;
}

bool scan_quandle(const QuandleTable& t, std::vector<Verdict>& out, Sink sink) {
  if (!scan_rack(t, out, sink)) return false;
  if (!out.empty() && out.front().law == "shape") return true;
  if (!out.empty() && out.front().law == "entry-range") return true;
  for (int x = 0; x < t.n; ++x)
    if (t.at(x, x) != x)
      if (!sink(out, fail("idempotency", x))) return false;
  return true;
}

bool scan_good_involution(const SymmetricQuandleTable& s,
                          std::vector<Verdict>& out, Sink sink) {
  const QuandleTable& q = s.quandle;
  const int n = q.n;
  if (n <= 0 || static_cast<int>(s.rho.size()) != n)
    return sink(out, fail("rho-shape"));
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    int v = s.rho[x];
    if (v < 0 || v >= n || seen[v])
      return sink(out, fail("rho-not-permutation", x));
    seen[v] = 1;
  }
  for (int x = 0; x < n; ++x)
    if (s.rho[s.rho[x]] != x)
      if (!sink(out, fail("rho-not-involution", x))) return false;
  if (!out.empty()) return true;  // identities assume an involution
  std::vector<int> inv = op_inverse_table(q);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.rho[q.at(x, y)] != q.at(s.rho[x], y))
        if (!sink(out, fail("rho-equivariance", x, y))) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.at(x, s.rho[y]) != inv[static_cast<std::size_t>(x) * n + y])
        if (!sink(out, fail("rho-inverse-action", x, y))) return false;
  return true;
}

bool first_only(std::vector<Verdict>& out, Verdict v) {
  out.push_back(std::move(v));
  return false;
}

bool collect(std::vector<Verdict>& out, Verdict v) {
  out.push_back(std::move(v));
  return true;
}

template <typename Table, bool (*Scan)(const Table&, std::vector<Verdict>&, Sink)>
Verdict first_verdict(const Table& t) {
  std::vector<Verdict> out;
  Scan(t, out, first_only);
  return out.empty() ? Verdict{} : std::move(out.front());
}

}  // namespace

Verdict verify_rack(const RackTable& t) {
  return first_verdict<RackTable, scan_rack>(t);
}

Verdict verify_quandle(const QuandleTable& t) {
  return first_verdict<QuandleTable, scan_quandle>(t);
}

Verdict verify_good_involution(const SymmetricQuandleTable& s) {
  return first_verdict<SymmetricQuandleTable, scan_good_involution>(s);
}

std::vector<Verdict> verify_rack_verbose(const RackTable& t) {
  std::vector<Verdict> out;
  scan_rack(t, out, collect);
  return out;
}

std::vector<Verdict> verify_quandle_verbose(const QuandleTable& t) {
  std::vector<Verdict> out;
  scan_quandle(t, out, collect);
  return out;
}

std::vector<Verdict> verify_good_involution_verbose(
    const SymmetricQuandleTable& s) {
  std::vector<Verdict> out;
  scan_good_involution(s, out, collect);
  return out;
}

Verdict verify_group(const GroupTable& g) {
  if (Verdict v = check_table_shape(g.n, g.mul); !v) return v;
  if (g.identity < 0 || g.identity >= g.n) return fail("identity");
  if (static_cast<int>(g.inverse.size()) != g.n) return fail("inverse-shape");
  for (int x = 0; x < g.n; ++x)
    if (g.at(g.identity, x) != x || g.at(x, g.identity) != x)
      return fail("identity", x);
  for (int x = 0; x < g.n; ++x) {
    int ix = g.inverse[x];
    if (ix < 0 || ix >= g.n) return fail("inverse-shape", x);
    if (g.at(x, ix) != g.identity || g.at(ix, x) != g.identity)
      return fail("inverse", x);
  }
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      for (int z = 0; z < g.n; ++z)
        if (g.at(g.at(x, y), z) != g.at(x, g.at(y, z)))
          return fail("associativity", x, y, z);
  return {};
}

int op_inv(const RackTable& t, int x, int y) {
  for (int z = 0; z < t.n; ++z)
    if (t.at(z, y) == x) return z;
  throw std::invalid_argument("op_inv: column " + std::to_string(y) +
                              " is not a bijection");
}

std::vector<int> op_inverse_table(const RackTable& t) {
  std::vector<int> inv(static_cast<std::size_t>(t.n) * t.n, -1);
  for (int z = 0; z < t.n; ++z)
    for (int y = 0; y < t.n; ++y)
      inv[static_cast<std::size_t>(t.at(z, y)) * t.n + y] = z;
  for (int v : inv)
    if (v < 0)
      throw std::invalid_argument("op_inverse_table: columns are not bijective");
  return inv;
}

bool is_kei(const QuandleTable& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      if (t.at(t.at(x, y), y) != x) return false;
  return true;
}

InvolutionList enumerate_good_involutions(const QuandleTable& t,
                                          std::size_t limit, int size_guard) {
  if (t.n > size_guard)
    throw budget_error("enumerate_good_involutions: n=" + std::to_string(t.n) +
                       " exceeds the size guard " + std::to_string(size_guard));
  if (Verdict v = verify_quandle(t); !v)
    throw std::invalid_argument("enumerate_good_involutions: " + v.describe());
  InvolutionList out;
  SymmetricQuandleTable cand{t, std::vector<int>(t.n, -1)};
  std::vector<int>& perm = cand.rho;

  // Involutions in lexicographic order: the first unassigned position takes
  // the least available value (itself, then each larger partner).
  auto rec = [&](auto&& self, int pos) -> bool {
    while (pos < t.n && perm[pos] != -1) ++pos;
    if (pos == t.n) {
      if (verify_good_involution(cand)) {
        if (out.involutions.size() >= limit) {
          out.truncated = true;
          return false;
        }
        out.involutions.push_back(perm);
      }
      return true;
    }
    perm[pos] = pos;
    if (!self(self, pos + 1)) return false;
    perm[pos] = -1;
    for (int j = pos + 1; j < t.n; ++j) {
      if (perm[j] != -1) continue;
      perm[pos] = j;
      perm[j] = pos;
      if (!self(self, pos + 1)) return false;
      perm[pos] = -1;
      perm[j] = -1;
    }
    return true;
  };
  rec(rec, 0);
  return out;
}

QuandleTable dihedral_quandle(int n) {
  if (n <= 0) throw std::invalid_argument("dihedral_quandle: n must be >= 1");
  QuandleTable t;
  t.n = n;
  t.op.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.at(x, y) = ((2 * y - x) % n + n) % n;
  return t;
}

QuandleTable trivial_quandle(int n) {
  if (n <= 0) throw std::invalid_argument("trivial_quandle: n must be >= 1");
  QuandleTable t;
  t.n = n;
  t.op.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.at(x, y) = x;
  return t;
}

SymmetricQuandleTable conjugation_quandle(const GroupTable& g) {
  if (Verdict v = verify_group(g); !v)
    throw std::invalid_argument("conjugation_quandle: invalid group table (" +
                                v.describe() + ")");
  SymmetricQuandleTable s;
  s.quandle.n = g.n;
  s.quandle.op.resize(static_cast<std::size_t>(g.n) * g.n);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      s.quandle.at(x, y) = g.at(g.inverse[y], g.at(x, y));
  s.rho = g.inverse;
  return s;
}

SymmetricQuandleTable double_cover(const QuandleTable& t) {
  const int n = t.n;
  std::vector<int> inv = op_inverse_table(t);
  SymmetricQuandleTable s;
  s.quandle.n = 2 * n;
  s.quandle.op.resize(static_cast<std::size_t>(2 * n) * (2 * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = t.at(x, y);
      int xyi = inv[static_cast<std::size_t>(x) * n + y];
      s.quandle.at(x, y) = xy;
      s.quandle.at(x, n + y) = xyi;
      s.quandle.at(n + x, y) = n + xy;
      s.quandle.at(n + x, n + y) = n + xyi;
    }
  s.rho.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    s.rho[i] = n + i;
    s.rho[n + i] = i;
  }
  return s;
}

GroupTable cyclic_group(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic_group: n must be >= 1");
  GroupTable g;
  g.n = n;
  g.identity = 0;
  g.mul.resize(static_cast<std::size_t>(n) * n);
  g.inverse.resize(n);
  for (int x = 0; x < n; ++x) {
    g.inverse[x] = (n - x) % n;
    for (int y = 0; y < n; ++y)
      g.mul[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  }
  return g;
}

GroupTable symmetric_group(int k) {
  if (k <= 0 || k > 6)
    throw std::invalid_argument("symmetric_group: k must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());

  auto index_of = [&](const std::vector<int>& q) {
    auto it = std::lower_bound(perms.begin(), perms.end(), q);
    return static_cast<int>(it - perms.begin());
  };

  GroupTable g;
  g.n = n;
  g.identity = 0;  // identity permutation is lexicographically first
  g.mul.resize(static_cast<std::size_t>(n) * n);
  g.inverse.resize(n);
  std::vector<int> comp(k), inv(k);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < k; ++i) inv[perms[a][i]] = i;
    g.inverse[a] = index_of(inv);
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i) comp[i] = perms[b][perms[a][i]];
      g.mul[static_cast<std::size_t>(a) * n + b] = index_of(comp);
    }
  }
  return g;
}

}  // namespace symq
