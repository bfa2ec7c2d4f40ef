#pragma once

#include "kvlab/cochain.hpp"
#include "kvlab/kv_algebra.hpp"
#include "kvlab/linalg.hpp"
#include "kvlab/report.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace kvlab {

constexpr std::size_t kMaxDeformationOrder = 8;

/** mu_t = mu + sum_{s=1..N} t^s nu_s, truncated at order N. */
class TruncatedDeformation {
 public:
  explicit TruncatedDeformation(KvAlgebra base, std::vector<Cochain> directions = {});

  const KvAlgebra& base() const { return base_; }
  const std::vector<Cochain>& directions() const { return directions_; }
  std::size_t order() const { return directions_.size(); }

 private:
  KvAlgebra base_;
  std::vector<Cochain> directions_;
};

/** Coefficients of the KV anomaly of mu_t as a polynomial in t, powers 0..2N. */
struct AnomalyExpansion {
  std::vector<Cochain> coefficients;

  const Cochain& at(std::size_t power) const { return coefficients.at(power); }
  std::size_t max_power() const { return coefficients.size() - 1; }
};

KvAlgebra evaluate_at(const TruncatedDeformation& def, const Rational& t);

/**
 * Mixed anomaly of two products m1, m2 (degree-2 cochains):
 * m1(m2(u,v),w) - m1(u,m2(v,w)) - m1(m2(v,u),w) + m1(v,m2(u,w)).
 * mixed_anomaly(mu, mu) is the KV anomaly of mu.
 */
Cochain mixed_anomaly(const Cochain& m1, const Cochain& m2);

/** The eight-term linearization d_mu nu of the anomaly at mu. */
Cochain linear_obstruction(const KvAlgebra& mu, const Cochain& nu);

/**
 * Exact expansion: the t^p coefficient is d_mu nu_p plus the sum of
 * mixed_anomaly(nu_i, nu_j) over ordered pairs i + j = p, i, j >= 1.
 */
AnomalyExpansion anomaly_expansion(const TruncatedDeformation& def);

/** First-order deformation directions Ker delta^2; throws DomainError if mu is not KV. */
LinearSubspace deformation_space(const KvAlgebra& mu);

/**
 * Member of the five-parameter deformation family of the Hessian fixture
 * F(a, b). params = (a11_1, a12_1, a22_1, a11_2, a21_2); the remaining
 * entries follow the family constraints
 *   a21_1 = a12_1, a22_2 = a12_1, a12_2 = a21_2 + a12_1 / 2.
 * Requires a != 0, b != 0, a != b (DomainError otherwise).
 */
Cochain hessian_deformation_family(const Rational& a, const Rational& b, const std::array<Rational, 5>& params);

/** Compares the span of the family with deformation_space(F(a, b)). */
ClaimReport verify_family(const Rational& a, const Rational& b);

}  // namespace kvlab
