#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vermalab/exactla/scalar.hpp"

namespace vermalab {

/// Sparse vector of fixed dimension. Stored entries are always nonzero.
template <class F>
class SparseVec {
 public:
  using Traits = FieldTraits<F>;
  using Storage = std::map<std::size_t, F>;

  SparseVec() = default;
  explicit SparseVec(std::size_t dim) : dim_(dim) {}
  SparseVec(std::size_t dim, const std::vector<F>& dense) : dim_(dim) {
    if (dense.size() != dim) throw std::invalid_argument("SparseVec: dense size mismatch");
    for (std::size_t i = 0; i < dim; ++i)
      if (!Traits::is_zero(dense[i])) entries_.emplace(i, dense[i]);
  }

  static SparseVec unit(std::size_t dim, std::size_t i) {
    SparseVec v(dim);
    v.set(i, Traits::one());
    return v;
  }

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const Storage& entries() const { return entries_; }

  F get(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Traits::zero() : it->second;
  }

  void set(std::size_t i, const F& v) {
    check(i);
    if (Traits::is_zero(v))
      entries_.erase(i);
    else
      entries_[i] = v;
  }

  void add(std::size_t i, const F& v) {
    check(i);
    if (Traits::is_zero(v)) return;
    auto it = entries_.find(i);
    if (it == entries_.end()) {
      entries_.emplace(i, v);
      return;
    }
    it->second = it->second + v;
    if (Traits::is_zero(it->second)) entries_.erase(it);
  }

  /// this += c * other
  void axpy(const F& c, const SparseVec& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("SparseVec: dimension mismatch");
    if (Traits::is_zero(c)) return;
    for (const auto& [i, v] : other.entries_) add(i, c * v);
  }

  std::vector<F> dense() const {
    std::vector<F> out(dim_, Traits::zero());
    for (const auto& [i, v] : entries_) out[i] = v;
    return out;
  }

  SparseVec& operator+=(const SparseVec& o) {
    axpy(Traits::one(), o);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    axpy(Traits::zero() - Traits::one(), o);
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const F& c, const SparseVec& v) {
    SparseVec out(v.dim_);
    if (Traits::is_zero(c)) return out;
    for (const auto& [i, x] : v.entries_) out.entries_.emplace(i, c * x);
    return out;
  }
  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    for (; ia != a.entries_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

 private:
  void check(std::size_t i) const {
    if (i >= dim_) throw std::out_of_range("SparseVec index " + std::to_string(i) + " >= " + std::to_string(dim_));
  }

  std::size_t dim_ = 0;
  Storage entries_;
};

/// Sparse matrix stored by columns; zeros are never stored.
template <class F>
class SparseMat {
 public:
  using Traits = FieldTraits<F>;
  using Vec = SparseVec<F>;

  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols, Vec(rows)) {}

  static SparseMat identity(std::size_t n) {
    SparseMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Traits::one());
    return m;
  }

  static SparseMat from_dense(const std::vector<std::vector<F>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    SparseMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("from_dense: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  static SparseMat from_columns(std::size_t rows, const std::vector<Vec>& columns) {
    SparseMat m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].dim() != rows) throw std::invalid_argument("from_columns: column dimension mismatch");
      m.cols_[j] = columns[j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  bool is_square() const { return rows_ == cols_.size(); }

  F get(std::size_t r, std::size_t c) const { return column(c).get(r); }
  void set(std::size_t r, std::size_t c, const F& v) { column_mut(c).set(r, v); }
  void add(std::size_t r, std::size_t c, const F& v) { column_mut(c).add(r, v); }

  const Vec& column(std::size_t c) const {
    if (c >= cols_.size()) throw std::out_of_range("SparseMat column out of range");
    return cols_[c];
  }
  void set_column(std::size_t c, Vec v) {
    if (v.dim() != rows_) throw std::invalid_argument("set_column: dimension mismatch");
    column_mut(c) = std::move(v);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.nnz();
    return n;
  }
  bool is_zero() const { return nnz() == 0; }

  /// Row-major list of (row, col, value) for every stored entry.
  std::vector<std::tuple<std::size_t, std::size_t, F>> triplets() const {
    std::vector<std::tuple<std::size_t, std::size_t, F>> out;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (const auto& [r, v] : cols_[c].entries()) out.emplace_back(r, c, v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    return out;
  }

  /// Rows of the matrix as sparse maps (used by elimination).
  std::vector<std::map<std::size_t, F>> row_maps() const {
    std::vector<std::map<std::size_t, F>> out(rows_);
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (const auto& [r, v] : cols_[c].entries()) out[r].emplace(c, v);
    return out;
  }

  Vec apply(const Vec& x) const {
    if (x.dim() != cols_.size()) throw std::invalid_argument("SparseMat::apply: dimension mismatch");
    Vec out(rows_);
    for (const auto& [j, xj] : x.entries()) out.axpy(xj, cols_[j]);
    return out;
  }

  SparseMat transpose() const {
    SparseMat t(cols_.size(), rows_);
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (const auto& [r, v] : cols_[c].entries()) t.cols_[r].set(c, v);
    return t;
  }

  /// Submatrix with the given row and column index lists (in that order).
  SparseMat select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    std::map<std::size_t, std::size_t> row_pos;
    for (std::size_t i = 0; i < row_idx.size(); ++i) row_pos.emplace(row_idx[i], i);
    SparseMat out(row_idx.size(), col_idx.size());
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      for (const auto& [r, v] : column(col_idx[j]).entries()) {
        auto it = row_pos.find(r);
        if (it != row_pos.end()) out.cols_[j].set(it->second, v);
      }
    return out;
  }

  /// Keep only the first `rows` rows.
  SparseMat truncate_rows(std::size_t rows) const {
    std::vector<std::size_t> r(rows), c(cols_.size());
    for (std::size_t i = 0; i < rows; ++i) r[i] = i;
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = j;
    return select(r, c);
  }

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    if (a.cols() != b.rows_) throw std::invalid_argument("SparseMat product: dimension mismatch");
    SparseMat out(a.rows_, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) out.cols_[j] = a.apply(b.cols_[j]);
    return out;
  }
  friend SparseMat operator+(SparseMat a, const SparseMat& b) {
    a.require_same_shape(b);
    for (std::size_t j = 0; j < b.cols(); ++j) a.cols_[j] += b.cols_[j];
    return a;
  }
  friend SparseMat operator-(SparseMat a, const SparseMat& b) {
    a.require_same_shape(b);
    for (std::size_t j = 0; j < b.cols(); ++j) a.cols_[j] -= b.cols_[j];
    return a;
  }
  friend SparseMat operator*(const F& c, const SparseMat& m) {
    SparseMat out(m.rows_, m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out.cols_[j] = c * m.cols_[j];
    return out;
  }
  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
  }

  SparseMat power(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("SparseMat::power: matrix not square");
    SparseMat out = identity(rows_);
    for (unsigned i = 0; i < k; ++i) out = *this * out;
    return out;
  }

 private:
  Vec& column_mut(std::size_t c) {
    if (c >= cols_.size()) throw std::out_of_range("SparseMat column out of range");
    return cols_[c];
  }
  void require_same_shape(const SparseMat& b) const {
    if (rows_ != b.rows_ || cols() != b.cols()) throw std::invalid_argument("SparseMat: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::vector<Vec> cols_;
};

using QVec = SparseVec<Rational>;
using QMat = SparseMat<Rational>;

/// Block matrix assembled from a grid of blocks; empty blocks are zero.
template <class F>
SparseMat<F> block_matrix(const std::vector<std::size_t>& row_dims, const std::vector<std::size_t>& col_dims,
                          const std::vector<std::vector<const SparseMat<F>*>>& blocks) {
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> row_off, col_off;
  for (auto d : row_dims) row_off.push_back(std::exchange(rows, rows + d));
  for (auto d : col_dims) col_off.push_back(std::exchange(cols, cols + d));
  SparseMat<F> out(rows, cols);
  for (std::size_t bi = 0; bi < row_dims.size(); ++bi)
    for (std::size_t bj = 0; bj < col_dims.size(); ++bj) {
      const SparseMat<F>* b = blocks.at(bi).at(bj);
      if (b == nullptr) continue;
      if (b->rows() != row_dims[bi] || b->cols() != col_dims[bj])
        throw std::invalid_argument("block_matrix: block shape mismatch");
      for (const auto& [r, c, v] : b->triplets()) out.set(row_off[bi] + r, col_off[bj] + c, v);
    }
  return out;
}

/// Kronecker product; with column-major vec, vec(L X R) = kron(R^T, L) vec(X).
template <class F>
SparseMat<F> kron(const SparseMat<F>& a, const SparseMat<F>& b) {
  SparseMat<F> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [ra, ca, va] : a.triplets())
    for (const auto& [rb, cb, vb] : b.triplets()) out.set(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
  return out;
}

}  // namespace vermalab
