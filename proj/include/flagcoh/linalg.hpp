#pragma once

// Exact linear algebra over Q: dense reduced row echelon form and an
// incrementally built sparse reduced echelon basis.

#include <flagcoh/rational.hpp>

#include <algorithm>
#include <map>
#include <vector>

namespace flagcoh {

using DenseMatrix = std::vector<std::vector<Rational>>;

struct RowReduction {
  DenseMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form. Pivots are taken left to right; within a
/// column the first nonzero row (after the current pivot row) is used.
inline RowReduction row_reduce(DenseMatrix m) {
  RowReduction out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (const auto& r : m)
    if (r.size() != cols) throw InputError("ragged matrix");
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (m[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    std::swap(m[pivot_row], m[found]);
    Rational inv = 1 / m[pivot_row][col];
    for (std::size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[pivot_row][c];
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t matrix_rank(const DenseMatrix& m) { return row_reduce(m).rank(); }

/// Sparse vector: (column, value) pairs sorted by column, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

inline SparseVector axpy(const SparseVector& x, const Rational& a, const SparseVector& y) {
  // x + a*y
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Subspace of Q^columns kept in fully reduced echelon form: every basis row
/// has leading coefficient 1 at its pivot (its smallest column) and zeros at
/// every other pivot column.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t columns = 0) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_of_.count(col) > 0; }
  const std::map<std::size_t, std::size_t>& pivots() const { return pivot_of_; }
  const SparseVector& row(std::size_t k) const { return rows_[k]; }

  /// Canonical representative of v modulo the span: zero at every pivot column.
  SparseVector reduce(SparseVector v) const {
    // Rows have no entries at other pivots, so one pass over v's pivot
    // entries (collected up front) suffices.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [col, val] : v) {
      auto it = pivot_of_.find(col);
      if (it != pivot_of_.end()) hits.emplace_back(it->second, val);
    }
    for (const auto& [row, val] : hits) v = axpy(v, -val, rows_[row]);
    return v;
  }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(SparseVector v) {
    for (const auto& e : v)
      if (e.first >= columns_) throw InputError("vector entry outside basis columns");
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational inv = 1 / v.front().second;
    for (auto& e : v) e.second *= inv;
    const std::size_t pivot = v.front().first;
    for (auto& r : rows_) {
      auto it = std::lower_bound(r.begin(), r.end(), pivot,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != r.end() && it->first == pivot) {
        Rational f = it->second;
        r = axpy(r, -f, v);
      }
    }
    pivot_of_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  /// Columns that are not pivots, ascending.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < columns_; ++c)
      if (!is_pivot(c)) out.push_back(c);
    return out;
  }

 private:
  std::size_t columns_;
  std::vector<SparseVector> rows_;
  std::map<std::size_t, std::size_t> pivot_of_;
};

/// Rank by fraction-free (Bareiss) elimination over the integers; used as an
/// independent check of row_reduce. Entries must be integers.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        found = r;
        break;
      }
    if (found == rows) continue;
    std::swap(m[rank], m[found]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace flagcoh
