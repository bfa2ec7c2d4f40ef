#include "kvlab/cochain.hpp"

#include "kvlab/errors.hpp"

#include <string>
#include <utility>

namespace kvlab {

std::size_t int_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

Vector basis_vector(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionError("basis index out of range");
  Vector v(n);
  v[index] = 1;
  return v;
}

std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(int_pow(n, q));
  std::vector<std::size_t> t(q, 0);
  if (n == 0 && q > 0) return out;
  while (true) {
    out.push_back(t);
    std::size_t pos = q;
    while (pos > 0) {
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
      if (pos == 0) return out;
    }
    if (q == 0) return out;
  }
}

Cochain::Cochain(std::size_t degree, std::size_t dim)
    : degree_(degree), dim_(dim), coeffs_(int_pow(dim, degree + 1)) {
  if (dim == 0) throw DimensionError("cochain dimension must be positive");
}

Cochain::Cochain(std::size_t degree, std::size_t dim, RatVector coeffs)
    : degree_(degree), dim_(dim), coeffs_(std::move(coeffs)) {
  if (dim == 0) throw DimensionError("cochain dimension must be positive");
  if (coeffs_.size() != int_pow(dim, degree + 1)) {
    throw DimensionError("degree-" + std::to_string(degree) + " cochain on dimension " +
                         std::to_string(dim) + " needs " + std::to_string(int_pow(dim, degree + 1)) +
                         " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

Cochain Cochain::basis(std::size_t degree, std::size_t dim, std::size_t flat) {
  Cochain c(degree, dim);
  if (flat >= c.size()) throw DimensionError("basis cochain index out of range");
  c.coeffs_[flat] = 1;
  return c;
}

Cochain Cochain::constant(const Vector& v) { return Cochain(0, v.size(), v); }

Cochain Cochain::identity(std::size_t dim) {
  Cochain c(1, dim);
  for (std::size_t i = 0; i < dim; ++i) c.at({i}, i) = 1;
  return c;
}

std::size_t Cochain::flat_index(const std::vector<std::size_t>& args, std::size_t k) const {
  if (args.size() != degree_) throw DimensionError("wrong number of cochain arguments");
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= dim_) throw DimensionError("cochain argument index out of range");
    idx = idx * dim_ + a;
  }
  if (k >= dim_) throw DimensionError("cochain output index out of range");
  return idx * dim_ + k;
}

Vector Cochain::value_on_basis(const std::vector<std::size_t>& args) const {
  const std::size_t base = flat_index(args, 0);
  return Vector(coeffs_.begin() + static_cast<std::ptrdiff_t>(base),
                coeffs_.begin() + static_cast<std::ptrdiff_t>(base + dim_));
}

Vector Cochain::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != degree_) throw DimensionError("wrong number of cochain arguments");
  for (const auto& a : args)
    if (a.size() != dim_) throw DimensionError("cochain argument has wrong length");
  Vector out(dim_);
  const auto tuples = index_tuples(dim_, degree_);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    Rational weight = 1;
    for (std::size_t p = 0; p < degree_ && weight != 0; ++p) weight *= args[p][tuples[t][p]];
    if (weight == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) {
      const Rational& c = coeffs_[t * dim_ + k];
      if (c != 0) out[k] += weight * c;
    }
  }
  return out;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (other.degree_ != degree_ || other.dim_ != dim_) throw DimensionError("cochain shape mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  if (other.degree_ != degree_ || other.dim_ != dim_) throw DimensionError("cochain shape mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cochain& Cochain::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
Cochain operator*(const Rational& s, Cochain f) { return f *= s; }

}  // namespace kvlab
