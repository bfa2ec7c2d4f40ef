#include "kvlab/cohomology.hpp"

#include "kvlab/cochain_complex.hpp"
#include "kvlab/errors.hpp"

namespace kvlab {

LinearSubspace kernel(const KvAlgebra& alg, std::size_t q) { return nullspace(coboundary_matrix(alg, q)); }

LinearSubspace image(const KvAlgebra& alg, int q) {
  if (q < -1) throw UnsupportedError("image degree must be at least -1");
  if (q == -1) return LinearSubspace(jspace(alg).dim());
  return column_space(coboundary_matrix(alg, static_cast<std::size_t>(q)));
}

CohomologyResult cohomology(const KvAlgebra& alg, std::size_t q) {
  CohomologyResult r;
  r.q = q;
  r.kernel = kernel(alg, q);
  r.image_prev = image(alg, static_cast<int>(q) - 1);
  const LinearSubspace common = intersect(r.kernel, r.image_prev);
  r.dim_ker = r.kernel.dim();
  r.dim_im_prev = r.image_prev.dim();
  r.dim_intersection = common.dim();
  r.inclusion_holds = r.dim_intersection == r.dim_im_prev;
  r.dim_h = r.dim_ker - r.dim_intersection;

  const std::size_t n = alg.dim();
  const std::vector<RatVector> j_basis = q == 0 ? jspace(alg).basis_vectors() : std::vector<RatVector>{};
  std::vector<RatVector> spanning = common.basis_vectors();
  for (const auto& v : r.kernel.basis_vectors()) {
    if (LinearSubspace::span(r.kernel.ambient_dim(), spanning).contains(v)) continue;
    spanning.push_back(v);
    if (q == 0) {
      RatVector xi(n);
      for (std::size_t b = 0; b < v.size(); ++b)
        for (std::size_t k = 0; k < n; ++k) xi[k] += v[b] * j_basis[b][k];
      r.representatives.push_back(Cochain::constant(xi));
    } else {
      r.representatives.emplace_back(q, n, v);
    }
  }
  return r;
}

}  // namespace kvlab
