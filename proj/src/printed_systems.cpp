#include "kvlab/printed_systems.hpp"

#include "kvlab/errors.hpp"
#include "kvlab/polynomial.hpp"

#include <stdexcept>

namespace kvlab {

namespace {

const std::vector<std::string> kKvConditionRows = {
    "G21_1*(G12_2-G11_1-G21_2)+G12_1*(G11_1-G21_2)+G22_1*G11_2",
    "G22_1*(2*G12_2-G11_1-G21_2)+G12_1*(G12_1-G22_2)",
    "G11_2*(G12_1-2*G21_1+G22_2)+G21_2*(G11_1-G21_2)",
    "G12_2*(G12_1-G21_1+G22_2)+G21_2*(G12_1-G22_2)-G11_2*G22_1",
};

const std::vector<std::string> kDelta0Rows = {
    "(G21_1-G12_1)*xi2",
    "(G12_1-G21_1)*xi1",
    "(G21_2-G12_2)*xi2",
    "(G12_2-G21_2)*xi1",
};

const std::vector<std::string> kDelta1Rows = {
    "-G11_1*alpha+G11_2*beta-(G12_1+G21_1)*gamma",
    "(G12_2-G11_1)*beta-G22_1*gamma-G12_1*lambda",
    "(G11_2-G11_1)*beta-G22_1*gamma-G21_1*lambda",
    "G22_1*alpha+(G22_2-G12_1-G21_1)*beta-2*G22_1*lambda",
    "-2*G11_2*alpha+(G11_1-G12_2-G21_2)*gamma+G11_2*lambda",
    "-G12_2*alpha-G11_2*beta+(G12_1-G22_2)*gamma",
    "-G21_2*alpha-G11_2*beta+(G21_1-G22_2)*gamma",
    "-(G21_2+G12_2)*beta+G22_1*gamma-G22_2*lambda",
};

const std::vector<std::string> kDelta2Rows = {
    "(G12_1-G21_1)*e+G22_1*i+(G11_1-G21_2)*f+G21_1*j+(G12_2-G11_1-G21_2)*g-(G12_1+G21_1)*k+G11_2*h",
    "G21_2*e+(G12_1-2*G21_1+G22_2)*i+G11_2*f-2*G11_2*g+(G11_1-2*G21_2)*k+G11_2*l",
    "-G22_1*e+(2*G12_1-G22_2)*f+2*G22_1*j-G22_1*k+(2*G12_2-G11_1-G21_2)*h-G12_1*l",
    "-G22_1*i+(G12_2+G21_2)*f+(G12_1-G21_1+G22_2)*j-G12_1*g+(G12_1-G22_2)*k-G11_2*h+(G12_2-G21_2)*l",
};

const std::vector<std::string> kDeformationRows = {
    "(G12_1-G21_1)*a11_1+G22_1*a11_2+(G11_1-G21_2)*a12_1+G21_1*a12_2+(G12_2-G11_1-G21_2)*a21_1-(G12_1+G21_1)*a21_2+G11_2*a22_1",
    "G21_2*a11_1+(G12_1-2*G21_1+G22_2)*a11_2+G11_2*a12_1-2*G11_2*a21_1+(G11_1-2*G21_2)*a21_2+G11_2*a22_2",
    "-G22_1*a11_1+(2*G12_1-G22_2)*a12_1+2*G22_1*a12_2-G22_1*a21_2+(2*G12_2-G11_1-G21_2)*a22_1-G12_1*a22_2",
    "-G22_1*a11_2+(G12_2+G21_2)*a12_1+(G12_1-G21_1+G22_2)*a12_2-G12_1*a21_1+(G12_1-G22_2)*a21_2-G11_2*a22_1+(G12_2-G21_2)*a22_2",
};

std::vector<PrintedSystem> build() {
  // Degree-1 unknowns: f(e1) = (alpha, gamma), f(e2) = (beta, lambda).
  // Degree-2 unknowns: f(ei, ej) = (C_ij, D_ij), C = (e f; g h), D = (i j; k l).
  const std::vector<std::string> d2_unknowns = {"e", "f", "g", "h", "i", "j", "k", "l"};
  const std::vector<std::size_t> d2_coords = {0, 2, 4, 6, 1, 3, 5, 7};
  const std::vector<std::string> nu_unknowns = {"a11_1", "a12_1", "a21_1", "a22_1",
                                                "a11_2", "a12_2", "a21_2", "a22_2"};
  using K = PrintedSystem::Kind;
  return {
      {"kv_condition", "polynomial KV conditions on the structure constants", K::Condition, -1, {}, {},
       kKvConditionRows, {4, 6, 5, 7}, {}},
      {"ker_delta0", "cocycle conditions in degree 0", K::Kernel, 0, {"xi1", "xi2"}, {0, 1}, kDelta0Rows,
       {0, 2, 1, 3}, {}},
      {"ker_delta1", "cocycle conditions in degree 1", K::Kernel, 1, {"alpha", "beta", "gamma", "lambda"},
       {0, 2, 1, 3}, kDelta1Rows, {0, 2, 4, 6, 1, 3, 5, 7}, {}},
      {"ker_delta2", "cocycle conditions in degree 2", K::Kernel, 2, d2_unknowns, d2_coords, kDelta2Rows,
       {4, 5, 6, 7}, {}},
      {"im_delta0", "coboundaries of degree 1", K::Image, 0, {"xi1", "xi2"}, {0, 1}, kDelta0Rows,
       {0, 2, 1, 3}, {"u11", "u12", "u21", "u22"}},
      {"im_delta1", "coboundaries of degree 2", K::Image, 1, {"alpha", "beta", "gamma", "lambda"},
       {0, 2, 1, 3}, kDelta1Rows, {0, 2, 4, 6, 1, 3, 5, 7},
       {"u11", "u12", "u21", "u22", "v11", "v12", "v21", "v22"}},
      {"deformation_cocycle", "first-order deformation conditions", K::Kernel, 2, nu_unknowns, d2_coords,
       kDeformationRows, {4, 5, 6, 7}, {}},
  };
}

}  // namespace

const std::vector<PrintedSystem>& printed_systems() {
  static const std::vector<PrintedSystem> systems = build();
  return systems;
}

const PrintedSystem& printed_system(std::string_view id) {
  for (const auto& s : printed_systems())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown printed system '" + std::string(id) + "'");
}

RatMatrix instantiate(const PrintedSystem& sys, const KvAlgebra& alg) {
  if (alg.dim() != 2) throw UnsupportedError("printed systems are only defined for two-dimensional algebras");
  const auto constants = alg.named_constants();
  if (sys.kind == PrintedSystem::Kind::Condition) {
    RatMatrix out(sys.rows.size(), 1);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      const Polynomial p = Polynomial::parse(sys.rows[r]).substitute(constants);
      if (!p.is_constant()) throw ParseError("condition row has free variables: " + sys.rows[r]);
      out(r, 0) = p.constant_term();
    }
    return out;
  }
  const std::size_t cols = sys.unknowns.size();
  RatMatrix out(sys.rows.size(), cols);
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const RatVector coeffs = Polynomial::parse(sys.rows[r]).substitute(constants).linear_coefficients(sys.unknowns);
    for (std::size_t u = 0; u < cols; ++u) out(r, sys.unknown_coords[u]) = coeffs[u];
  }
  return out;
}

}  // namespace kvlab
