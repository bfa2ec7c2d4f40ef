#include "kvlab/catalog.hpp"
#include "kvlab/cochain_complex.hpp"
#include "kvlab/cohomology.hpp"
#include "kvlab/deformation.hpp"
#include "kvlab/errors.hpp"
#include "kvlab/random.hpp"

#include <catch_amalgamated.hpp>

using namespace kvlab;

namespace {

KvAlgebra fixture() { return hessian_fixture(1, 2); }

Cochain direction(std::size_t i, std::size_t j, std::size_t k) {
  Cochain nu(2, 2);
  nu.at({i, j}, k) = 1;
  return nu;
}

}  // namespace

TEST_CASE("evaluation of truncated deformations") {
  const KvAlgebra f = fixture();
  CHECK(evaluate_at(TruncatedDeformation(f, {direction(0, 0, 0)}), 0) == f);
  const KvAlgebra g = evaluate_at(TruncatedDeformation(f, {direction(0, 0, 0)}), 1);
  CHECK(g == KvAlgebra::from_slices(RatMatrix{{1, 1}, {1, 0}}, RatMatrix{{2, 0}, {0, 1}}));
  RationalSampler s(1);
  const Cochain n1 = s.cochain(2, 2), n2 = s.cochain(2, 2);
  const KvAlgebra h = evaluate_at(TruncatedDeformation(f, {n1, n2}), Rational(1, 2));
  CHECK(h.as_cochain() == f.as_cochain() + Rational(1, 2) * n1 + Rational(1, 4) * n2);
  CHECK_THROWS_AS(TruncatedDeformation(f, std::vector<Cochain>(9, n1)), UnsupportedError);
  CHECK_THROWS_AS(TruncatedDeformation(f, {Cochain(1, 2)}), DimensionError);
}

TEST_CASE("linear obstruction examples") {
  const KvAlgebra f = fixture();
  CHECK(linear_obstruction(f, Cochain(2, 2)).is_zero());
  CHECK(linear_obstruction(f, coboundary(f, Cochain::basis(1, 2, 2))).is_zero());
  // Frozen from an independent eight-term expansion: nu(e1, e1) = e2 is a cocycle.
  CHECK(linear_obstruction(f, direction(0, 0, 1)).is_zero());
  const RatVector expected = {0, 0, 0, 0, 0, 2, 1, 0, 0, -2, -1, 0, 0, 0, 0, 0};
  CHECK(linear_obstruction(f, direction(0, 1, 0)).coeffs() == expected);
  CHECK(mixed_anomaly(f.as_cochain(), f.as_cochain()) == kv_anomaly_tensor(f));
}

TEST_CASE("anomaly expansion examples") {
  const KvAlgebra f = fixture();
  const AnomalyExpansion plain = anomaly_expansion(TruncatedDeformation(f));
  REQUIRE(plain.coefficients.size() == 1);
  CHECK(plain.at(0).is_zero());

  const auto ker = deformation_space(f).basis_vectors();
  for (const auto& v : ker) {
    const Cochain nu(2, 2, v);
    const AnomalyExpansion e = anomaly_expansion(TruncatedDeformation(f, {nu}));
    REQUIRE(e.coefficients.size() == 3);
    CHECK(e.at(1).is_zero());
    CHECK(e.at(2) == kv_anomaly_tensor(KvAlgebra::from_cochain(nu)));
  }
}

TEST_CASE("deformation space") {
  CHECK(deformation_space(fixture()) == kernel(fixture(), 2));
  const KvAlgebra n = KvAlgebra::from_slices(RatMatrix{{0, 1}, {0, 0}}, RatMatrix(2, 2));
  CHECK_THROWS_AS(deformation_space(n), DomainError);
  const LinearSubspace space = deformation_space(fixture());
  for (const auto& c : image(fixture(), 1).basis_vectors()) CHECK(space.contains(c));
}

TEST_CASE("deformation family") {
  CHECK(hessian_deformation_family(1, 2, {0, 0, 0, 0, 0}).is_zero());
  const Cochain nu = hessian_deformation_family(1, 2, {0, 2, 0, 0, 0});
  CHECK(nu.evaluate({{1, 0}, {0, 1}}) == Vector{2, 1});
  CHECK(nu.evaluate({{0, 1}, {1, 0}}) == Vector{2, 1});
  CHECK(nu.evaluate({{0, 1}, {0, 1}}) == Vector{0, 2});
  // Frozen from an independent symbolic computation: at (a, b) = (1, 2) the
  // residual of a family member is proportional to a12_1 - 4 a22_1 + 2 a21_2.
  CHECK_FALSE(deformation_space(fixture()).contains(nu.coeffs()));
  CHECK(deformation_space(fixture()).contains(hessian_deformation_family(1, 2, {0, 4, 1, 0, 0}).coeffs()));
  CHECK_THROWS_AS(hessian_deformation_family(1, 1, {0, 0, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(hessian_deformation_family(0, 1, {0, 0, 0, 0, 0}), DomainError);
}

TEST_CASE("family audit") {
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 2}, {1, -1}}) {
    const ClaimReport r = verify_family(a, b);
    CHECK(r.status == ClaimStatus::Partial);
    CHECK(r.computed["dim_deformation_space"] == "4");
    CHECK(r.printed["dim_family"] == "5");
    CHECK(r.computed["family_within_space"] == false);
    CHECK(r.computed["space_within_family"] == true);
    REQUIRE(r.witness.is_object());
    const RatVector nu = rat_vector_from_json(r.witness["nu"]["coeffs"]);
    const RatVector residual = rat_vector_from_json(r.witness["delta2_residual"]);
    CHECK_FALSE(is_zero(residual));
    CHECK(coboundary_matrix(hessian_fixture(a, b), 2).apply(nu) == residual);
  }
  CHECK_THROWS_AS(verify_family(2, 2), DomainError);
}

TEST_CASE("first-order coefficient detects cocycles") {
  RationalSampler s(21);
  const KvAlgebra f = fixture();
  const LinearSubspace space = deformation_space(f);
  for (int rep = 0; rep < 40; ++rep) {
    Cochain nu = s.cochain(2, 2);
    if (rep % 2 == 0) {
      RatVector v(8);
      for (const auto& b : space.basis_vectors()) {
        const Rational c = s.rational();
        for (std::size_t i = 0; i < 8; ++i) v[i] += c * b[i];
      }
      nu = Cochain(2, 2, v);
    }
    const AnomalyExpansion e = anomaly_expansion(TruncatedDeformation(f, {nu}));
    REQUIRE(e.at(1).is_zero() == space.contains(nu.coeffs()));
  }
}

TEST_CASE("first-order deformations are KV up to t squared") {
  RationalSampler s(22);
  const KvAlgebra f = fixture();
  const auto basis = deformation_space(f).basis_vectors();
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Cochain> dirs;
    for (int d = 0; d < 2; ++d) {
      RatVector v(8);
      for (const auto& b : basis) {
        const Rational c = s.rational();
        for (std::size_t i = 0; i < 8; ++i) v[i] += c * b[i];
      }
      dirs.emplace_back(2, 2, v);
    }
    const TruncatedDeformation def(f, dirs);
    const AnomalyExpansion e = anomaly_expansion(def);
    REQUIRE(e.at(0).is_zero());
    REQUIRE(e.at(1).is_zero());
    // anomaly(mu_t) / t^2 equals the sum of the remaining coefficients times t^(p-2).
    for (const Rational t : {Rational(1, 3), Rational(2), Rational(-5, 7)}) {
      const Cochain actual = kv_anomaly_tensor(evaluate_at(def, t));
      Cochain predicted(3, 2);
      Rational power = 1;
      for (std::size_t p = 2; p <= e.max_power(); ++p, power *= t) predicted += power * e.at(p);
      REQUIRE(actual == t * t * predicted);
    }
  }
}
