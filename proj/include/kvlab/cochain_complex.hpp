#pragma once

#include "kvlab/cochain.hpp"
#include "kvlab/kv_algebra.hpp"
#include "kvlab/linalg.hpp"

#include <cstddef>

namespace kvlab {

constexpr std::size_t kDefaultDegreeBound = 4;

/**
 * Largest output degree q+1 the coboundary operators accept: the value of
 * KVLAB_MAX_DEGREE when set (a positive integer), else 4.
 */
std::size_t coboundary_degree_bound();

/** (a f)(a1..aq) = a f(a1..aq) - sum_j f(a1, .., a a_j, .., aq) */
Cochain left_action(const KvAlgebra& alg, const Vector& a, const Cochain& f);
/** (f a)(a1..aq) = f(a1..aq) a */
Cochain right_action(const KvAlgebra& alg, const Cochain& f, const Vector& a);
/** Inserts a at argument position rho (1-based): degree q -> q-1. */
Cochain insert(const Cochain& f, std::size_t rho, const Vector& a);

/**
 * The KV coboundary delta^q f. Degree 0 uses delta xi (u) = -u xi + xi u and
 * requires xi in J(A); degree q >= 1 uses
 *   sum_{j=1..q} (-1)^j [ (a_j f)(.., ^a_j, ..) + (e_q(a_j)(f a_{q+1}))(.., ^a_j, .., ^a_{q+1}) ].
 */
Cochain coboundary(const KvAlgebra& alg, const Cochain& f);

/** Direct expansion of the low-degree formulas (q <= 2); independent of coboundary(). */
Cochain coboundary_explicit(const KvAlgebra& alg, const Cochain& f);

/**
 * Matrix of delta^q in standard cochain coordinates: n^{q+2} rows and n^{q+1}
 * columns; for q = 0 the columns follow the echelon basis of J(A).
 */
RatMatrix coboundary_matrix(const KvAlgebra& alg, std::size_t q);

/** xi -> -u xi + xi u on all of A (n^2 x n), without restricting to J(A). */
RatMatrix unrestricted_delta0_matrix(const KvAlgebra& alg);

}  // namespace kvlab
