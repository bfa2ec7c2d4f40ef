#pragma once

#include "kvlab/cochain.hpp"
#include "kvlab/linalg.hpp"
#include "kvlab/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace kvlab {

/**
 * Finite-dimensional algebra given by structure constants:
 * e_i * e_j = sum_k gamma(i, j, k) e_k (0-based indices).
 *
 * The tensor is stored with the same flattening as a degree-2 cochain,
 * so the product is literally the cochain mu.
 */
class KvAlgebra {
 public:
  explicit KvAlgebra(std::size_t dim);
  KvAlgebra(std::size_t dim, RatVector gamma);

  // Two-dimensional algebra from its slice matrices: slice k holds
  // gamma(i, j, k) at row i, column j.
  static KvAlgebra from_slices(const RatMatrix& gamma1, const RatMatrix& gamma2);
  static KvAlgebra from_cochain(const Cochain& mu);

  std::size_t dim() const { return dim_; }
  const RatVector& gamma() const { return gamma_; }
  const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }
  Rational& gamma(std::size_t i, std::size_t j, std::size_t k) { return gamma_[(i * dim_ + j) * dim_ + k]; }

  RatMatrix slice(std::size_t k) const;
  Cochain as_cochain() const { return Cochain(2, dim_, gamma_); }

  // Values keyed "Gij_k" (1-based), e.g. G12_1 = gamma(0, 1, 0). Requires dim <= 9.
  std::map<std::string, Rational> named_constants() const;

  friend bool operator==(const KvAlgebra&, const KvAlgebra&) = default;

 private:
  std::size_t dim_;
  RatVector gamma_;
};

Vector multiply(const KvAlgebra& alg, const Vector& u, const Vector& v);
Vector associator(const KvAlgebra& alg, const Vector& u, const Vector& v, const Vector& w);
// Ass(u,v,w) - Ass(v,u,w)
Vector kv_anomaly(const KvAlgebra& alg, const Vector& u, const Vector& v, const Vector& w);
Cochain kv_anomaly_tensor(const KvAlgebra& alg);

bool is_kv(const KvAlgebra& alg);

/**
 * The four classical polynomial conditions characterizing two-dimensional
 * KV structures, evaluated on alg's constants in their customary order.
 */
std::array<Rational, 4> kv_condition_residual(const KvAlgebra& alg);

/** J(A) = { xi : Ass(u, v, xi) = 0 for all u, v }. */
LinearSubspace jspace(const KvAlgebra& alg);

bool is_symmetric(const KvAlgebra& alg);
// Every slice bilinear form is invertible.
bool is_nondegenerate(const KvAlgebra& alg);
bool is_hessian(const KvAlgebra& alg);

/**
 * Class label for two-dimensional KV algebras (nullopt when not KV):
 * 1 degenerate, 2 degenerate symmetric, 3 non-degenerate, 4 non-degenerate
 * symmetric, 5 mixed, 6 mixed symmetric. "Mixed" means exactly one slice is
 * invertible.
 */
std::optional<int> classify(const KvAlgebra& alg);

/** Relabels the basis by a permutation: new e_i = old e_{perm[i]}. */
KvAlgebra permute_basis(const KvAlgebra& alg, const std::vector<std::size_t>& perm);

}  // namespace kvlab
