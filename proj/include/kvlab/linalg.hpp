#pragma once

#include "kvlab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace kvlab {

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;
  bool is_zero() const;

  RatVector apply(std::span<const Rational> v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);

struct EchelonForm {
  RatMatrix reduced;                 // full reduced row-echelon form, zero rows kept
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

EchelonForm echelon(const RatMatrix& m);

// Reduced row-echelon form (pivots normalized to 1), same shape as m.
RatMatrix rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Subspace of Q^n stored as the nonzero rows of its reduced echelon basis,
// so equal subspaces have identical representations.
class LinearSubspace {
 public:
  explicit LinearSubspace(std::size_t ambient_dim);  // {0}

  static LinearSubspace span(std::size_t ambient_dim, const std::vector<RatVector>& vectors);
  static LinearSubspace row_space(const RatMatrix& m);
  static LinearSubspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  std::vector<RatVector> basis_vectors() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const LinearSubspace& other) const;

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

 private:
  LinearSubspace(std::size_t ambient_dim, RatMatrix basis);

  std::size_t ambient_dim_;
  RatMatrix basis_;
};

// {v : m v = 0}
LinearSubspace nullspace(const RatMatrix& m);
// span of the columns of m
LinearSubspace column_space(const RatMatrix& m);
LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b);
LinearSubspace sum(const LinearSubspace& a, const LinearSubspace& b);

}  // namespace kvlab
