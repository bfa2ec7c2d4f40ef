#include "kvlab/deformation.hpp"

#include "kvlab/catalog.hpp"
#include "kvlab/cochain_complex.hpp"
#include "kvlab/cohomology.hpp"
#include "kvlab/errors.hpp"

#include <string>
#include <utility>

namespace kvlab {

namespace {

void require_product(const Cochain& m, std::size_t n) {
  if (m.degree() != 2) throw DimensionError("deformation directions must be degree-2 cochains");
  if (m.dim() != n) throw DimensionError("deformation direction has the wrong dimension");
}

}  // namespace

TruncatedDeformation::TruncatedDeformation(KvAlgebra base, std::vector<Cochain> directions)
    : base_(std::move(base)), directions_(std::move(directions)) {
  if (directions_.size() > kMaxDeformationOrder) {
    throw UnsupportedError("truncation order is capped at " + std::to_string(kMaxDeformationOrder));
  }
  for (const auto& d : directions_) require_product(d, base_.dim());
}

KvAlgebra evaluate_at(const TruncatedDeformation& def, const Rational& t) {
  Cochain mu = def.base().as_cochain();
  Rational power = 1;
  for (const auto& nu : def.directions()) {
    power *= t;
    mu += power * nu;
  }
  return KvAlgebra::from_cochain(mu);
}

Cochain mixed_anomaly(const Cochain& m1, const Cochain& m2) {
  require_product(m1, m1.dim());
  require_product(m2, m1.dim());
  const std::size_t n = m1.dim();
  Cochain out(3, n);
  for (const auto& t : index_tuples(n, 3)) {
    const Vector u = basis_vector(n, t[0]);
    const Vector v = basis_vector(n, t[1]);
    const Vector w = basis_vector(n, t[2]);
    Vector value = m1.evaluate({m2.evaluate({u, v}), w});
    const Vector b = m1.evaluate({u, m2.evaluate({v, w})});
    const Vector c = m1.evaluate({m2.evaluate({v, u}), w});
    const Vector d = m1.evaluate({v, m2.evaluate({u, w})});
    for (std::size_t k = 0; k < n; ++k) {
      value[k] += d[k] - b[k] - c[k];
      out.at(t, k) = value[k];
    }
  }
  return out;
}

Cochain linear_obstruction(const KvAlgebra& mu, const Cochain& nu) {
  require_product(nu, mu.dim());
  const std::size_t n = mu.dim();
  const auto m = [&](const Vector& x, const Vector& y) { return multiply(mu, x, y); };
  const auto s = [&](const Vector& x, const Vector& y) { return nu.evaluate({x, y}); };
  Cochain out(3, n);
  for (const auto& t : index_tuples(n, 3)) {
    const Vector u = basis_vector(n, t[0]);
    const Vector v = basis_vector(n, t[1]);
    const Vector w = basis_vector(n, t[2]);
    const Vector terms[8] = {s(m(u, v), w), m(s(u, v), w), s(u, m(v, w)), m(u, s(v, w)),
                             s(m(v, u), w), m(s(v, u), w), s(v, m(u, w)), m(v, s(u, w))};
    const int signs[8] = {1, 1, -1, -1, -1, -1, 1, 1};
    for (std::size_t k = 0; k < n; ++k) {
      Rational acc = 0;
      for (int term = 0; term < 8; ++term) acc += signs[term] * terms[term][k];
      out.at(t, k) = acc;
    }
  }
  return out;
}

AnomalyExpansion anomaly_expansion(const TruncatedDeformation& def) {
  const std::size_t n = def.base().dim();
  const std::size_t order = def.order();
  AnomalyExpansion out;
  out.coefficients.assign(2 * order + 1, Cochain(3, n));
  out.coefficients[0] = kv_anomaly_tensor(def.base());
  const auto& nu = def.directions();
  for (std::size_t p = 1; p <= order; ++p) out.coefficients[p] += linear_obstruction(def.base(), nu[p - 1]);
  for (std::size_t i = 1; i <= order; ++i)
    for (std::size_t j = 1; j <= order; ++j) out.coefficients[i + j] += mixed_anomaly(nu[i - 1], nu[j - 1]);
  return out;
}

LinearSubspace deformation_space(const KvAlgebra& mu) {
  if (!is_kv(mu)) throw DomainError("deformation space requested for a base that is not KV");
  return kernel(mu, 2);
}

Cochain hessian_deformation_family(const Rational& a, const Rational& b, const std::array<Rational, 5>& params) {
  if (a == 0 || b == 0 || a == b) throw DomainError("the deformation family requires a != b, a != 0, b != 0");
  const auto& [a111, a121, a221, a112, a212] = params;
  Cochain nu(2, 2);
  nu.at({0, 0}, 0) = a111;
  nu.at({0, 1}, 0) = a121;
  nu.at({1, 0}, 0) = a121;
  nu.at({1, 1}, 0) = a221;
  const Rational off = a212 + a121 / 2;
  nu.at({0, 0}, 1) = a112;
  nu.at({0, 1}, 1) = off;
  nu.at({1, 0}, 1) = off;
  nu.at({1, 1}, 1) = a121;
  return nu;
}

ClaimReport verify_family(const Rational& a, const Rational& b) {
  const KvAlgebra f = hessian_fixture(a, b);
  static const char* kNames[5] = {"a11_1", "a12_1", "a22_1", "a11_2", "a21_2"};
  std::vector<RatVector> generators;
  for (std::size_t p = 0; p < 5; ++p) {
    std::array<Rational, 5> params{};
    params[p] = 1;
    generators.push_back(hessian_deformation_family(a, b, params).coeffs());
  }
  const LinearSubspace family = LinearSubspace::span(8, generators);
  const LinearSubspace space = deformation_space(f);
  const bool family_in_space = space.contains(family);
  const bool space_in_family = family.contains(space);
  const RatMatrix delta2 = coboundary_matrix(f, 2);

  ClaimReport r;
  r.claim = "C14";
  r.location = "Hessian deformation family theorem";
  r.computed = Json{{"a", to_json(a)},
                    {"b", to_json(b)},
                    {"dim_deformation_space", count_json(space.dim())},
                    {"family_within_space", family_in_space},
                    {"space_within_family", space_in_family},
                    {"deformation_space", to_json(space)}};
  r.printed = Json{{"dim_family", count_json(family.dim())}, {"family", to_json(family)}};
  if (family_in_space && space_in_family) {
    r.status = ClaimStatus::Confirmed;
    return r;
  }
  r.status = (family_in_space || space_in_family) ? ClaimStatus::Partial : ClaimStatus::Refuted;
  if (!family_in_space) {
    for (std::size_t p = 0; p < 5; ++p) {
      if (space.contains(generators[p])) continue;
      r.witness = Json{{"kind", "family member outside the deformation space"},
                       {"parameter", kNames[p]},
                       {"nu", to_json(Cochain(2, 2, generators[p]))},
                       {"delta2_residual", to_json(delta2.apply(generators[p]))}};
      break;
    }
  } else {
    for (const auto& v : space.basis_vectors()) {
      if (family.contains(v)) continue;
      r.witness = Json{{"kind", "deformation direction outside the family"},
                       {"nu", to_json(Cochain(2, 2, v))},
                       {"delta2_residual", to_json(delta2.apply(v))}};
      break;
    }
  }
  return r;
}

}  // namespace kvlab
