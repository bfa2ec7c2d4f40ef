#pragma once

#include "kvlab/cochain.hpp"
#include "kvlab/kv_algebra.hpp"
#include "kvlab/linalg.hpp"

#include <cstddef>
#include <vector>

namespace kvlab {

struct CohomologyResult {
  std::size_t q = 0;
  std::size_t dim_ker = 0;
  std::size_t dim_im_prev = 0;
  bool inclusion_holds = true;  // Im delta^{q-1} is contained in Ker delta^q
  std::size_t dim_intersection = 0;
  std::size_t dim_h = 0;  // dim_ker - dim_intersection
  LinearSubspace kernel{0};
  LinearSubspace image_prev{0};
  // Completion of the echelon basis of Ker n Im to one of Ker, as cochains.
  std::vector<Cochain> representatives;
};

/**
 * Ker delta^q in cochain coordinates (for q = 0: coordinates relative to the
 * echelon basis of J(A)).
 */
LinearSubspace kernel(const KvAlgebra& alg, std::size_t q);

/** Im delta^q inside the degree-(q+1) cochains; q = -1 gives {0} in C^0 = J(A). */
LinearSubspace image(const KvAlgebra& alg, int q);

CohomologyResult cohomology(const KvAlgebra& alg, std::size_t q);

}  // namespace kvlab
