#include "symq/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace symq {

namespace {

long long mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("smith: multiplication overflow");
  return r;
}

long long sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("smith: subtraction overflow");
  return r;
}

long long add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("smith: addition overflow");
  return r;
}

}  // namespace

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("smith: ragged matrix");

  auto swap_rows = [&](std::size_t i, std::size_t j) { std::swap(a[i], a[j]); };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
  };

  std::vector<long long> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry of the working submatrix becomes the pivot
    std::size_t pi = t, pj = t;
    long long best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
          best = std::llabs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    // euclidean elimination of row t and column t
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j)
          a[i][j] = sub(a[i][j], mul(q, a[t][j]));
        if (a[i][t] != 0) {  // remainder is smaller; make it the pivot
          swap_rows(i, t);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i)
          a[i][j] = sub(a[i][j], mul(q, a[i][t]));
        if (a[t][j] != 0) {
          swap_cols(j, t);
          dirty = true;
        }
      }
    }

    // the pivot must divide every remaining entry; if not, fold the
    // offending row in and redo this position (pivot shrinks to a gcd)
    long long p = std::llabs(a[t][t]);
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % p != 0) {
          for (std::size_t jj = t; jj < cols; ++jj)
            a[t][jj] = add(a[t][jj], a[i][jj]);
          divides = false;
        }
    if (!divides) continue;
    diag.push_back(p);
    ++t;
  }
  return diag;
}

}  // namespace symq
