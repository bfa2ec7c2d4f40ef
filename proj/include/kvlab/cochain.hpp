#pragma once

#include "kvlab/rational.hpp"

#include <cstddef>
#include <vector>

namespace kvlab {

using Vector = RatVector;

/** Standard basis vector e_{index} (0-based) of Q^n. */
Vector basis_vector(std::size_t n, std::size_t index);

/**
 * A q-linear map A^q -> A on an n-dimensional algebra, stored as a dense
 * coefficient tensor c[i1..iq][k] with f(e_i1, ..., e_iq) = sum_k c e_k.
 *
 * Flattening is lexicographic on (i1, ..., iq) followed by the output index
 * k, i.e. flat = ((i1*n + i2)*n + ... + iq)*n + k. Every matrix produced by
 * the library uses this order.
 */
class Cochain {
 public:
  Cochain(std::size_t degree, std::size_t dim);
  Cochain(std::size_t degree, std::size_t dim, RatVector coeffs);

  static Cochain zero(std::size_t degree, std::size_t dim) { return Cochain(degree, dim); }
  // Standard basis cochain whose only nonzero coefficient sits at `flat`.
  static Cochain basis(std::size_t degree, std::size_t dim, std::size_t flat);
  // Degree-0 cochain with value v.
  static Cochain constant(const Vector& v);
  static Cochain identity(std::size_t dim);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coeffs_.size(); }
  const RatVector& coeffs() const { return coeffs_; }

  // Flat position of the coefficient for argument tuple `args` and output k.
  std::size_t flat_index(const std::vector<std::size_t>& args, std::size_t k) const;

  Rational& at(const std::vector<std::size_t>& args, std::size_t k) { return coeffs_[flat_index(args, k)]; }
  const Rational& at(const std::vector<std::size_t>& args, std::size_t k) const {
    return coeffs_[flat_index(args, k)];
  }

  // Value on a tuple of basis vectors (0-based indices).
  Vector value_on_basis(const std::vector<std::size_t>& args) const;
  // Multilinear evaluation on arbitrary vectors.
  Vector evaluate(const std::vector<Vector>& args) const;

  bool is_zero() const { return kvlab::is_zero(coeffs_); }

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Rational& s);

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::size_t degree_;
  std::size_t dim_;
  RatVector coeffs_;
};

Cochain operator+(Cochain a, const Cochain& b);
Cochain operator-(Cochain a, const Cochain& b);
Cochain operator*(const Rational& s, Cochain f);

/** All index tuples of length q over {0..n-1}, in lexicographic order. */
std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t q);

std::size_t int_pow(std::size_t base, std::size_t exp);

}  // namespace kvlab
