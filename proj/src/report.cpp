#include "kvlab/report.hpp"

#include "kvlab/errors.hpp"

namespace kvlab {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Confirmed: return "CONFIRMED";
    case ClaimStatus::Refuted: return "REFUTED";
    case ClaimStatus::Partial: return "PARTIAL";
  }
  return "UNKNOWN";
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const LinearSubspace& s) {
  return Json{{"ambient_dim", count_json(s.ambient_dim())},
              {"dim", count_json(s.dim())},
              {"basis", to_json(s.basis())}};
}

Json to_json(const Cochain& c) {
  return Json{{"degree", count_json(c.degree())}, {"dim", count_json(c.dim())}, {"coeffs", to_json(c.coeffs())}};
}

Json count_json(std::size_t n) { return std::to_string(n); }

Json gamma_json(const KvAlgebra& alg) {
  const std::size_t n = alg.dim();
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(to_string(alg.gamma(i, j, k)));
      row.push_back(std::move(cell));
    }
    out.push_back(std::move(row));
  }
  return out;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  RatVector out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("expected a rational string");
    out.push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

}  // namespace kvlab
