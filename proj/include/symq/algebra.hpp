#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace symq {

/// Finite rack on {0, ..., n-1} stored as an operation table.
/// at(x, y) is x^y: the row is the operand, the column the acting element.
struct RackTable {
  int n = 0;
  std::vector<int> op;  // row-major, n*n entries

  int at(int x, int y) const { return op[static_cast<std::size_t>(x) * n + y]; }
  int& at(int x, int y) { return op[static_cast<std::size_t>(x) * n + y]; }
  bool operator==(const RackTable&) const = default;
};

/// Same data as RackTable; expected to satisfy x^x = x in addition.
struct QuandleTable : RackTable {};

/// A quandle together with an involution of its element set.
struct SymmetricQuandleTable {
  QuandleTable quandle;
  std::vector<int> rho;

  int size() const { return quandle.n; }
  bool operator==(const SymmetricQuandleTable&) const = default;
};

/// Finite group as a multiplication table; input side for conjugation
/// quandles.
struct GroupTable {
  int n = 0;
  std::vector<int> mul;  // row-major
  int identity = 0;
  std::vector<int> inverse;

  int at(int x, int y) const { return mul[static_cast<std::size_t>(x) * n + y]; }
  bool operator==(const GroupTable&) const = default;
};

/// Outcome of a table verification: ok, or the first violated law together
/// with a witness. Malformed tables report "shape" / "entry-range" so they
/// are distinguishable from genuine axiom failures.
struct Verdict {
  bool ok = true;
  std::string law;
  std::array<int, 3> witness{-1, -1, -1};

  explicit operator bool() const { return ok; }
  std::string describe() const;
};

Verdict verify_rack(const RackTable& t);
Verdict verify_quandle(const QuandleTable& t);
Verdict verify_good_involution(const SymmetricQuandleTable& s);
Verdict verify_group(const GroupTable& g);

/// Full scans: every violation, not just the first (empty when ok).
std::vector<Verdict> verify_rack_verbose(const RackTable& t);
std::vector<Verdict> verify_quandle_verbose(const QuandleTable& t);
std::vector<Verdict> verify_good_involution_verbose(
    const SymmetricQuandleTable& s);

/// The unique z with z^y = x. Requires the column of y to be a bijection.
int op_inv(const RackTable& t, int x, int y);

/// Whole inverse table at once: entry [x*n + y] = x^{y^-1}.
std::vector<int> op_inverse_table(const RackTable& t);

/// (x^y)^y = x for all x, y.
bool is_kei(const QuandleTable& t);

struct InvolutionList {
  std::vector<std::vector<int>> involutions;  // lexicographic order
  bool truncated = false;
};

/// All good involutions of t (the identity included when it qualifies), in
/// lexicographic order of the permutation, truncated at `limit` with a flag.
/// Refuses with budget_error when t.n exceeds size_guard.
InvolutionList enumerate_good_involutions(
    const QuandleTable& t,
    std::size_t limit = std::numeric_limits<std::size_t>::max(),
    int size_guard = 12);

/// x^y = (2y - x) mod n.
QuandleTable dihedral_quandle(int n);

/// x^y = x for all x, y.
QuandleTable trivial_quandle(int n);

/// Conjugation quandle x^y = y^-1 x y of a group, paired with inversion.
SymmetricQuandleTable conjugation_quandle(const GroupTable& g);

/// Double cover D(X): X plus a barred copy, the involution swapping the
/// halves. Indices 0..n-1 are X, n..2n-1 the barred copy.
SymmetricQuandleTable double_cover(const QuandleTable& t);

GroupTable cyclic_group(int n);

/// Permutations of {0..k-1} in lexicographic order; mul(p, q) applies p
/// first, then q.
GroupTable symmetric_group(int k);

}  // namespace symq
