#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "excol/error.hpp"

namespace excol::lin {

// Sparse vector: (index, value) pairs, strictly increasing index, no zeros.
template <class Field>
using SparseVector = std::vector<std::pair<std::size_t, typename Field::Element>>;

// y += a * x, keeping y sorted and free of zeros.
template <class Field>
void axpy(const Field& k, SparseVector<Field>& y, const typename Field::Element& a,
          const SparseVector<Field>& x) {
  if (k.is_zero(a) || x.empty()) return;
  SparseVector<Field> out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, k.mul(a, ix->second));
      ++ix;
    } else {
      auto v = std::move(iy->second);
      k.add_mul(v, a, ix->second);
      if (!k.is_zero(v)) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

template <class Field>
void scale(const Field& k, SparseVector<Field>& v, const typename Field::Element& a) {
  for (auto& e : v) e.second = k.mul(e.second, a);
}

// Value at index i, or zero.
template <class Field>
typename Field::Element coeff(const Field& k, const SparseVector<Field>& v, std::size_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const auto& e, std::size_t idx) { return e.first < idx; });
  if (it != v.end() && it->first == i) return it->second;
  return k.zero();
}

// Row-major sparse matrix over an exact field.
template <class Field>
class SparseMatrix {
 public:
  using Element = typename Field::Element;
  using Row = SparseVector<Field>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(const Field& k, std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, k.one());
    return m;
  }

  static SparseMatrix from_dense(const Field& k, const std::vector<std::vector<Element>>& dense,
                                 std::size_t cols) {
    SparseMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (dense[r].size() != cols) throw Error("from_dense: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) {
        if (!k.is_zero(dense[r][c])) m.rows_[r].emplace_back(c, dense[r][c]);
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const Row& row(std::size_t r) const { return rows_.at(r); }

  // Replaces row r. The row must be sorted, zero-free and in bounds.
  void set_row(const Field& k, std::size_t r, Row v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].first >= cols_ || k.is_zero(v[i].second) ||
          (i > 0 && v[i - 1].first >= v[i].first)) {
        throw Error("set_row: malformed sparse row");
      }
    }
    rows_.at(r) = std::move(v);
  }

  Element at(const Field& k, std::size_t r, std::size_t c) const { return coeff(k, rows_.at(r), c); }

  std::size_t nnz() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
    }
    return t;
  }

  // this * x for a sparse column vector x of length cols().
  Row apply(const Field& k, const Row& x) const {
    Row out;
    for (std::size_t r = 0; r < rows(); ++r) {
      Element acc = k.zero();
      auto it = x.begin();
      for (const auto& [c, v] : rows_[r]) {
        while (it != x.end() && it->first < c) ++it;
        if (it == x.end()) break;
        if (it->first == c) k.add_mul(acc, v, it->second);
      }
      if (!k.is_zero(acc)) out.emplace_back(r, std::move(acc));
    }
    return out;
  }

  // Submatrix on the half-open row range and column range; columns are
  // renumbered from zero.
  SparseMatrix block(std::size_t row_begin, std::size_t row_end, std::size_t col_begin,
                     std::size_t col_end) const {
    SparseMatrix b(row_end - row_begin, col_end - col_begin);
    for (std::size_t r = row_begin; r < row_end; ++r) {
      for (const auto& [c, v] : rows_[r]) {
        if (c >= col_begin && c < col_end) b.rows_[r - row_begin].emplace_back(c - col_begin, v);
      }
    }
    return b;
  }

  bool equals(const Field& k, const SparseMatrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) return false;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (rows_[r].size() != o.rows_[r].size()) return false;
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        if (rows_[r][i].first != o.rows_[r][i].first ||
            !k.equal(rows_[r][i].second, o.rows_[r][i].second)) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

// Accumulates (row, col, value) triplets; duplicates are summed and zeros
// dropped on build().
template <class Field>
class TripletBuilder {
 public:
  using Element = typename Field::Element;

  TripletBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  void add(std::size_t r, std::size_t c, Element v) {
    if (r >= rows_ || c >= cols_) throw Error("TripletBuilder: index out of bounds");
    triplets_.emplace_back(r, c, std::move(v));
  }

  SparseMatrix<Field> build(const Field& k) {
    std::sort(triplets_.begin(), triplets_.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    SparseMatrix<Field> m(rows_, cols_);
    std::size_t i = 0;
    while (i < triplets_.size()) {
      const std::size_t r = std::get<0>(triplets_[i]);
      typename SparseMatrix<Field>::Row row;
      while (i < triplets_.size() && std::get<0>(triplets_[i]) == r) {
        const std::size_t c = std::get<1>(triplets_[i]);
        Element acc = k.zero();
        while (i < triplets_.size() && std::get<0>(triplets_[i]) == r &&
               std::get<1>(triplets_[i]) == c) {
          acc = k.add(acc, std::get<2>(triplets_[i]));
          ++i;
        }
        if (!k.is_zero(acc)) row.emplace_back(c, std::move(acc));
      }
      m.set_row(k, r, std::move(row));
    }
    triplets_.clear();
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::tuple<std::size_t, std::size_t, Element>> triplets_;
};

template <class Field>
SparseMatrix<Field> multiply(const Field& k, const SparseMatrix<Field>& a,
                             const SparseMatrix<Field>& b) {
  if (a.cols() != b.rows()) throw Error("multiply: dimension mismatch");
  SparseMatrix<Field> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector<Field> acc;
    for (const auto& [mid, v] : a.row(r)) axpy(k, acc, v, b.row(mid));
    out.set_row(k, r, std::move(acc));
  }
  return out;
}

template <class Field>
struct RrefResult {
  SparseMatrix<Field> matrix;       // same shape as the input; zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of row i, increasing
};

// Incremental Gauss-Jordan basis: keeps its rows in reduced row-echelon form
// (each pivot is 1 and is the only nonzero in its column). Shared by rref()
// and Subspace.
template <class Field>
class EchelonBasis {
 public:
  using Element = typename Field::Element;
  using Row = SparseVector<Field>;

  explicit EchelonBasis(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return rows_.size(); }

  // Remainder of v after subtracting its components along the basis. Since
  // every basis row vanishes on all other pivots, the coefficient to remove
  // is just v's own entry in that pivot column.
  Row reduce(const Field& k, Row v) const {
    std::vector<std::pair<std::size_t, Element>> hits;
    for (const auto& [c, val] : v) {
      auto it = pivot_index_.find(c);
      if (it != pivot_index_.end()) hits.emplace_back(it->second, val);
    }
    for (const auto& [idx, val] : hits) axpy(k, v, k.neg(val), rows_[idx]);
    return v;
  }

  // Adds v to the span. Returns false if v was already in it.
  bool insert(const Field& k, Row v) {
    v = reduce(k, std::move(v));
    if (v.empty()) return false;
    const std::size_t lead = v.front().first;
    scale(k, v, k.inv(v.front().second));
    for (auto& r : rows_) {
      Element c = coeff(k, r, lead);
      if (!k.is_zero(c)) axpy(k, r, k.neg(c), v);
    }
    pivot_index_.emplace(lead, rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  // Rows sorted by pivot column.
  std::vector<Row> sorted_rows() const {
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (const auto& [col, idx] : pivot_index_) out.push_back(rows_[idx]);
    return out;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [col, idx] : pivot_index_) out.push_back(col);
    return out;
  }

 private:
  std::size_t width_;
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivot_index_;  // pivot column -> row
};

template <class Field>
RrefResult<Field> rref(const Field& k, const SparseMatrix<Field>& m) {
  EchelonBasis<Field> basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(k, m.row(r));
  RrefResult<Field> out;
  out.matrix = SparseMatrix<Field>(m.rows(), m.cols());
  auto rows = basis.sorted_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) out.matrix.set_row(k, i, std::move(rows[i]));
  out.rank = basis.size();
  out.pivots = basis.pivots();
  return out;
}

template <class Field>
std::size_t rank(const Field& k, const SparseMatrix<Field>& m) {
  EchelonBasis<Field> basis(m.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) r += basis.insert(k, m.row(i)) ? 1 : 0;
  return r;
}

}  // namespace excol::lin
