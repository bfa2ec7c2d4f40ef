#include "kvlab/kv_algebra.hpp"

#include "kvlab/errors.hpp"
#include "kvlab/printed_systems.hpp"

#include <string>
#include <utility>

namespace kvlab {

namespace {

void require_dim(const KvAlgebra& alg, const Vector& v) {
  if (v.size() != alg.dim()) {
    throw DimensionError("vector of length " + std::to_string(v.size()) + " used with a " +
                         std::to_string(alg.dim()) + "-dimensional algebra");
  }
}

Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

KvAlgebra::KvAlgebra(std::size_t dim) : dim_(dim), gamma_(dim * dim * dim) {
  if (dim == 0) throw DimensionError("algebra dimension must be positive");
}

KvAlgebra::KvAlgebra(std::size_t dim, RatVector gamma) : dim_(dim), gamma_(std::move(gamma)) {
  if (dim == 0) throw DimensionError("algebra dimension must be positive");
  if (gamma_.size() != dim * dim * dim) {
    throw DimensionError("structure tensor for dimension " + std::to_string(dim) + " needs " +
                         std::to_string(dim * dim * dim) + " entries, got " + std::to_string(gamma_.size()));
  }
}

KvAlgebra KvAlgebra::from_slices(const RatMatrix& gamma1, const RatMatrix& gamma2) {
  for (const RatMatrix* m : {&gamma1, &gamma2})
    if (m->rows() != 2 || m->cols() != 2) throw DimensionError("slice matrices must be 2x2");
  KvAlgebra alg(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      alg.gamma(i, j, 0) = gamma1(i, j);
      alg.gamma(i, j, 1) = gamma2(i, j);
    }
  return alg;
}

KvAlgebra KvAlgebra::from_cochain(const Cochain& mu) {
  if (mu.degree() != 2) throw DimensionError("a product is a degree-2 cochain");
  return KvAlgebra(mu.dim(), mu.coeffs());
}

RatMatrix KvAlgebra::slice(std::size_t k) const {
  if (k >= dim_) throw DimensionError("slice index out of range");
  RatMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = gamma(i, j, k);
  return m;
}

std::map<std::string, Rational> KvAlgebra::named_constants() const {
  if (dim_ > 9) throw UnsupportedError("named constants need dim <= 9");
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        out["G" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k + 1)] = gamma(i, j, k);
  return out;
}

Vector multiply(const KvAlgebra& alg, const Vector& u, const Vector& v) {
  require_dim(alg, u);
  require_dim(alg, v);
  const std::size_t n = alg.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const Rational w = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (alg.gamma(i, j, k) != 0) out[k] += w * alg.gamma(i, j, k);
    }
  }
  return out;
}

Vector associator(const KvAlgebra& alg, const Vector& u, const Vector& v, const Vector& w) {
  return sub(multiply(alg, multiply(alg, u, v), w), multiply(alg, u, multiply(alg, v, w)));
}

Vector kv_anomaly(const KvAlgebra& alg, const Vector& u, const Vector& v, const Vector& w) {
  return sub(associator(alg, u, v, w), associator(alg, v, u, w));
}

Cochain kv_anomaly_tensor(const KvAlgebra& alg) {
  const std::size_t n = alg.dim();
  Cochain out(3, n);
  for (const auto& t : index_tuples(n, 3)) {
    const Vector value =
        kv_anomaly(alg, basis_vector(n, t[0]), basis_vector(n, t[1]), basis_vector(n, t[2]));
    for (std::size_t k = 0; k < n; ++k) out.at(t, k) = value[k];
  }
  return out;
}

bool is_kv(const KvAlgebra& alg) { return kv_anomaly_tensor(alg).is_zero(); }

std::array<Rational, 4> kv_condition_residual(const KvAlgebra& alg) {
  if (alg.dim() != 2) throw UnsupportedError("the polynomial KV conditions are stated for dimension 2 only");
  const RatMatrix values = instantiate(printed_system("kv_condition"), alg);
  return {values(0, 0), values(1, 0), values(2, 0), values(3, 0)};
}

LinearSubspace jspace(const KvAlgebra& alg) {
  const std::size_t n = alg.dim();
  // Row (i, j, k), column l: component k of Ass(e_i, e_j, e_l).
  RatMatrix system(n * n * n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const Vector el = basis_vector(n, l);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector a = associator(alg, basis_vector(n, i), basis_vector(n, j), el);
        for (std::size_t k = 0; k < n; ++k) system((i * n + j) * n + k, l) = a[k];
      }
  }
  return nullspace(system);
}

bool is_symmetric(const KvAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (alg.gamma(i, j, k) != alg.gamma(j, i, k)) return false;
  return true;
}

namespace {

std::size_t invertible_slices(const KvAlgebra& alg) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < alg.dim(); ++k)
    if (rank(alg.slice(k)) == alg.dim()) ++count;
  return count;
}

}  // namespace

bool is_nondegenerate(const KvAlgebra& alg) { return invertible_slices(alg) == alg.dim(); }

bool is_hessian(const KvAlgebra& alg) { return is_symmetric(alg) && is_nondegenerate(alg); }

std::optional<int> classify(const KvAlgebra& alg) {
  if (alg.dim() != 2) throw UnsupportedError("classification is defined for dimension 2 only");
  if (!is_kv(alg)) return std::nullopt;
  const std::size_t inv = invertible_slices(alg);
  const int base = inv == 0 ? 1 : inv == 2 ? 3 : 5;
  return base + (is_symmetric(alg) ? 1 : 0);
}

KvAlgebra permute_basis(const KvAlgebra& alg, const std::vector<std::size_t>& perm) {
  const std::size_t n = alg.dim();
  if (perm.size() != n) throw DimensionError("permutation length does not match dimension");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw DimensionError("not a permutation");
    seen[p] = true;
  }
  KvAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.gamma(i, j, k) = alg.gamma(perm[i], perm[j], perm[k]);
  return out;
}

}  // namespace kvlab
