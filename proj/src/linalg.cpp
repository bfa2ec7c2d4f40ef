#include "kvlab/linalg.hpp"

#include "kvlab/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace kvlab {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count " + std::to_string(entries_.size()) +
                         " does not match shape " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return RatVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const { return kvlab::is_zero(entries_); }

RatVector RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) {
    throw DimensionError("cannot apply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " matrix to vector of length " + std::to_string(v.size()));
  }
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference shape mismatch");
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return RatMatrix(a.rows(), a.cols(), std::move(e));
}

// Gauss-Jordan with first-nonzero pivoting. Sizes here stay small
// (at most a few dozen rows), so plain rational elimination is fine.
EchelonForm echelon(const RatMatrix& m) {
  EchelonForm out{m, {}};
  RatMatrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot_row, j));
    const Rational inv = 1 / a(pivot_row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(pivot_row, j) != 0) a(i, j) -= factor * a(pivot_row, j);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  return out;
}

RatMatrix rref(const RatMatrix& m) { return echelon(m).reduced; }

std::size_t rank(const RatMatrix& m) { return echelon(m).pivots.size(); }

LinearSubspace::LinearSubspace(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

LinearSubspace::LinearSubspace(std::size_t ambient_dim, RatMatrix basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

LinearSubspace LinearSubspace::row_space(const RatMatrix& m) {
  const EchelonForm e = echelon(m);
  const std::size_t r = e.pivots.size();
  std::vector<Rational> entries(e.reduced.entries().begin(),
                                e.reduced.entries().begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  return LinearSubspace(m.cols(), RatMatrix(r, m.cols(), std::move(entries)));
}

LinearSubspace LinearSubspace::span(std::size_t ambient_dim, const std::vector<RatVector>& vectors) {
  return row_space(RatMatrix::from_rows(vectors, ambient_dim));
}

LinearSubspace LinearSubspace::full(std::size_t ambient_dim) {
  return LinearSubspace(ambient_dim, RatMatrix::identity(ambient_dim));
}

std::vector<RatVector> LinearSubspace::basis_vectors() const {
  std::vector<RatVector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool LinearSubspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw DimensionError("vector length does not match ambient dimension");
  // Reduce v against the echelon basis; v is inside iff it reduces to 0.
  RatVector rest(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t pivot = 0;
    while (basis_(r, pivot) == 0) ++pivot;
    if (rest[pivot] == 0) continue;
    const Rational factor = rest[pivot];
    for (std::size_t j = pivot; j < ambient_dim_; ++j)
      if (basis_(r, j) != 0) rest[j] -= factor * basis_(r, j);
  }
  return is_zero(rest);
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

LinearSubspace nullspace(const RatMatrix& m) {
  const EchelonForm e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    vectors.push_back(std::move(v));
  }
  return LinearSubspace::span(m.cols(), vectors);
}

LinearSubspace column_space(const RatMatrix& m) { return LinearSubspace::row_space(m.transpose()); }

LinearSubspace sum(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch in subspace sum");
  auto vectors = a.basis_vectors();
  auto more = b.basis_vectors();
  vectors.insert(vectors.end(), more.begin(), more.end());
  return LinearSubspace::span(a.ambient_dim(), vectors);
}

LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("cannot intersect subspaces of ambient dimensions " +
                         std::to_string(a.ambient_dim()) + " and " + std::to_string(b.ambient_dim()));
  }
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da == 0 || db == 0) return LinearSubspace(n);
  // x = A^T s = B^T t  <=>  [A^T | -B^T] (s, t) = 0
  RatMatrix system(n, da + db);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < da; ++r) system(i, r) = a.basis()(r, i);
    for (std::size_t r = 0; r < db; ++r) system(i, da + r) = -b.basis()(r, i);
  }
  std::vector<RatVector> vectors;
  for (const auto& st : nullspace(system).basis_vectors()) {
    RatVector x(n);
    for (std::size_t r = 0; r < da; ++r)
      if (st[r] != 0)
        for (std::size_t i = 0; i < n; ++i) x[i] += st[r] * a.basis()(r, i);
    vectors.push_back(std::move(x));
  }
  return LinearSubspace::span(n, vectors);
}

}  // namespace kvlab
