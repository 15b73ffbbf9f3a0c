#include "b4cat/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>

namespace b4cat {

namespace {

using Int = boost::multiprecision::cpp_int;
using SparseRow = std::map<int, Int>;

std::vector<SparseRow> gather_rows(int rows, const std::vector<Triplet>& entries) {
  std::vector<SparseRow> r(static_cast<std::size_t>(rows));
  for (const Triplet& t : entries) {
    if (t.value == 0) continue;
    Int& cell = r[static_cast<std::size_t>(t.row)][t.col];
    cell += t.value;
    if (cell == 0) r[static_cast<std::size_t>(t.row)].erase(t.col);
  }
  return r;
}

void divide_by_content(SparseRow& row) {
  Int g = 0;
  for (const auto& [col, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [col, v] : row) v /= g;
}

}  // namespace

int rank_rational(int rows, int cols, const std::vector<Triplet>& entries) {
  (void)cols;
  std::vector<SparseRow> r = gather_rows(rows, entries);
  int rank = 0;
  for (;;) {
    // Pivot choice: smallest |value|, breaking ties by sparsest row, keeps
    // the integer entries from growing.
    int pr = -1, pc = -1;
    Int best_abs = 0;
    std::size_t best_nnz = 0;
    for (int i = 0; i < rows; ++i) {
      for (const auto& [col, v] : r[static_cast<std::size_t>(i)]) {
        const Int a = abs(v);
        const std::size_t nnz = r[static_cast<std::size_t>(i)].size();
        if (pr < 0 || a < best_abs || (a == best_abs && nnz < best_nnz)) {
          pr = i;
          pc = col;
          best_abs = a;
          best_nnz = nnz;
        }
      }
      if (pr >= 0 && best_abs == 1 && best_nnz <= 3) break;
    }
    if (pr < 0) break;
    ++rank;

    const SparseRow pivot_row = std::move(r[static_cast<std::size_t>(pr)]);
    r[static_cast<std::size_t>(pr)].clear();
    const Int p = pivot_row.at(pc);
    for (int i = 0; i < rows; ++i) {
      SparseRow& row = r[static_cast<std::size_t>(i)];
      const auto it = row.find(pc);
      if (it == row.end()) continue;
      const Int factor = it->second;
      SparseRow updated;
      auto a = row.begin();
      auto b = pivot_row.begin();
      while (a != row.end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
          updated[a->first] = p * a->second;
          ++a;
        } else if (a == row.end() || b->first < a->first) {
          updated[b->first] = -factor * b->second;
          ++b;
        } else {
          Int v = p * a->second - factor * b->second;
          if (v != 0) updated[a->first] = std::move(v);
          ++a;
          ++b;
        }
      }
      updated.erase(pc);
      divide_by_content(updated);
      row = std::move(updated);
    }
  }
  return rank;
}

int rank_mod2(int rows, int cols, const std::vector<Triplet>& entries) {
  const std::size_t words = (static_cast<std::size_t>(cols) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m(
      static_cast<std::size_t>(rows), std::vector<std::uint64_t>(words, 0));
  for (const Triplet& t : entries) {
    if (t.value % 2 == 0) continue;
    m[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col) / 64] ^=
        std::uint64_t{1} << (t.col % 64);
  }
  int rank = 0;
  std::size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    const std::size_t w = static_cast<std::size_t>(col) / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = row;
    while (pivot < m.size() && !(m[pivot][w] & bit)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != row && (m[i][w] & bit)) {
        for (std::size_t k = 0; k < words; ++k) m[i][k] ^= m[row][k];
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace b4cat
