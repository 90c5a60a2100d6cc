#pragma once

#include <vector>

namespace symq {

/// Nonzero diagonal of the Smith normal form of an integer matrix, in
/// divisibility order d1 | d2 | ... Exact; throws std::overflow_error if an
/// intermediate value leaves the long long range.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

}  // namespace symq
