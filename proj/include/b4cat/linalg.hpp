#pragma once

#include <cstdint>
#include <vector>

/// Exact ranks of sparse integer matrices, for boundary-map homology.

namespace b4cat {

struct Triplet {
  int row = 0;
  int col = 0;
  std::int64_t value = 0;
};

/// Rank over the rationals, via fraction-free sparse elimination with
/// arbitrary-precision integers (no overflow, no rounding).
int rank_rational(int rows, int cols, const std::vector<Triplet>& entries);

/// Rank over the two-element field.
int rank_mod2(int rows, int cols, const std::vector<Triplet>& entries);

}  // namespace b4cat
