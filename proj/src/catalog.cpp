#include "kvlab/catalog.hpp"

#include "kvlab/errors.hpp"
#include "kvlab/polynomial.hpp"

#include <algorithm>
#include <string>

namespace kvlab {

namespace {

struct RawFamily {
  int class_id;
  int family_index;
  std::array<std::string, 8> pattern;
};

// Gamma_1 (g11 g12 g21 g22), then Gamma_2 (g11 g12 g21 g22).
const std::vector<RawFamily> kFamilies = {
    {1, 1, {"0", "0", "G21_1", "G22_1", "0", "0", "0", "G22_2"}},
    {1, 2, {"0", "G22_2", "0", "G22_2", "0", "0", "0", "G22_2"}},
    {1, 3, {"0", "0", "G21_1", "G22_1", "0", "0", "0", "0"}},
    {1, 4, {"G11_1", "0", "G22_2", "0", "0", "G11_1", "0", "G22_2"}},
    {1, 5, {"G11_1", "G22_2", "0", "0", "0", "0", "G11_1", "G22_2"}},
    {1, 6, {"G11_1", "0", "0", "0", "0", "0", "G11_1", "0"}},
    {1, 7, {"0", "0", "0", "0", "0", "G12_2", "0", "0"}},
    {1, 8, {"0", "0", "G21_1", "0", "0", "0", "0", "0"}},
    {1, 9, {"G11_1", "0", "0", "0", "G11_2", "G12_2", "0", "0"}},
    {1, 10, {"G11_1", "0", "0", "0", "0", "G12_2", "0", "0"}},
    {1, 11, {"0", "G22_2", "0", "0", "0", "0", "0", "G22_2"}},
    {1, 12, {"0", "0", "G21_1", "0", "0", "0", "0", "G22_2"}},
    {1, 13, {"0", "0", "G21_1", "0", "G11_2", "G12_2", "0", "0"}},
    {1, 14, {"0", "0", "0", "0", "G11_2", "G12_2", "0", "0"}},
    {2, 1, {"0", "0", "0", "G22_1", "0", "0", "0", "G22_2"}},
    {2, 2, {"0", "0", "0", "G22_1", "0", "0", "0", "0"}},
    {2, 3, {"0", "0", "0", "0", "0", "0", "0", "G22_2"}},
    {2, 4, {"G11_1", "0", "0", "0", "0", "0", "0", "G22_2"}},
    {2, 5, {"0", "0", "0", "0", "G11_2", "0", "0", "0"}},
    {3, 1, {"G11_1", "G22_2", "2*G22_2", "0", "0", "2*G11_1", "G11_1", "G22_2"}},
    {3, 2, {"G11_1", "G12_1", "G21_1", "G22_1", "G11_2", "G12_2", "G21_2", "G22_2"}},
    {4, 1, {"0", "G22_2", "G22_2", "0", "G11_2", "0", "0", "G22_2"}},
    {4, 2, {"G11_1", "0", "0", "G22_1", "0", "G11_1", "G11_1", "G22_2"}},
    {4, 3, {"G11_1", "0", "0", "G22_1", "G11_2", "0", "0", "G22_2"}},
    {4, 4, {"G11_1", "G22_2", "G22_2", "0", "G11_2", "0", "0", "G22_2"}},
    {4, 5, {"G11_1", "0", "0", "G22_1", "0", "G11_1", "G11_1", "0"}},
    {5, 1, {"0", "G22_2", "G21_1", "0", "0", "0", "0", "G22_2"}},
    {5, 2, {"0", "G22_2", "G21_1", "G22_1", "0", "0", "0", "G22_2"}},
    {5, 3, {"2*G12_2", "G22_2", "2*G22_2", "0", "0", "G12_2", "0", "G22_2"}},
    {5, 4, {"G11_1", "0", "0", "0", "G11_2", "G12_2", "G11_1", "0"}},
    {5, 5, {"G11_1", "0", "0", "0", "0", "G12_2", "G11_1", "0"}},
    {5, 6, {"G11_1", "0", "G21_1", "0", "0", "2*G11_1", "G11_1", "2*G21_1"}},
    {6, 1, {"G11_1", "0", "0", "0", "0", "G11_1", "G11_1", "G22_2"}},
    {6, 2, {"G11_1", "G22_2", "G22_2", "0", "0", "0", "0", "G22_2"}},
    {6, 3, {"G11_1", "0", "0", "G22_1", "G11_2", "0", "0", "0"}},
    {6, 4, {"0", "0", "0", "G22_1", "G11_2", "0", "0", "G22_2"}},
};

CatalogFamily expand(const RawFamily& raw) {
  CatalogFamily fam{raw.class_id, raw.family_index, raw.pattern, {}, {}};
  for (const auto& cell : raw.pattern) {
    const Polynomial p = Polynomial::parse(cell);
    for (const auto& [mono, coeff] : p.terms())
      for (const auto& var : mono)
        if (std::find(fam.parameters.begin(), fam.parameters.end(), var) == fam.parameters.end())
          fam.parameters.push_back(var);
  }
  if (raw.class_id == 3 && raw.family_index == 2) {
    // The general non-symmetric family only asks for G12_k != G21_k; these
    // defaults are a small integer KV solution with both slices invertible.
    fam.defaults = {1, 1, 3, 1, 0, 2, 1, 3};
  } else {
    for (std::size_t p = 0; p < fam.parameters.size(); ++p) fam.defaults.emplace_back(static_cast<long>(p + 1));
  }
  return fam;
}

void check_side_conditions(const CatalogFamily& fam, const std::map<std::string, Rational>& v) {
  if (fam.class_id == 4 && fam.family_index == 1) {
    const Rational& a = v.at("G22_2");
    const Rational& b = v.at("G11_2");
    if (a == 0 || b == 0 || a == b) throw DomainError("class 4 family 1 requires a != b, a != 0, b != 0");
  }
  if (fam.class_id == 3 && fam.family_index == 2) {
    if (v.at("G12_1") == v.at("G21_1") || v.at("G12_2") == v.at("G21_2"))
      throw DomainError("class 3 family 2 requires G12_1 != G21_1 and G12_2 != G21_2");
  }
}

}  // namespace

const std::vector<CatalogFamily>& catalog_families() {
  static const std::vector<CatalogFamily> families = [] {
    std::vector<CatalogFamily> out;
    for (const auto& raw : kFamilies) out.push_back(expand(raw));
    return out;
  }();
  return families;
}

CatalogEntry catalog_entry(int class_id, int family_index, const std::map<std::string, Rational>& overrides) {
  const auto& fams = catalog_families();
  auto it = std::find_if(fams.begin(), fams.end(), [&](const CatalogFamily& f) {
    return f.class_id == class_id && f.family_index == family_index;
  });
  if (it == fams.end()) {
    throw DomainError("no catalog family " + std::to_string(class_id) + "." + std::to_string(family_index));
  }
  std::map<std::string, Rational> values;
  for (std::size_t p = 0; p < it->parameters.size(); ++p) values[it->parameters[p]] = it->defaults[p];
  for (const auto& [name, value] : overrides) {
    if (!values.contains(name)) throw DomainError("family has no parameter '" + name + "'");
    values[name] = value;
  }
  check_side_conditions(*it, values);

  CatalogEntry entry{class_id, family_index, {}, KvAlgebra(2)};
  for (const auto& name : it->parameters) entry.parameters.emplace_back(name, values[name]);
  for (std::size_t cell = 0; cell < 8; ++cell) {
    const Polynomial p = Polynomial::parse(it->pattern[cell]).substitute(values);
    const std::size_t k = cell / 4;
    const std::size_t i = (cell % 4) / 2;
    const std::size_t j = cell % 2;
    entry.algebra.gamma(i, j, k) = p.constant_term();
  }
  return entry;
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& fam : catalog_families()) out.push_back(catalog_entry(fam.class_id, fam.family_index));
  return out;
}

std::string class_description(int class_id) {
  switch (class_id) {
    case 1: return "degenerate";
    case 2: return "degenerate and symmetric";
    case 3: return "non-degenerate";
    case 4: return "non-degenerate and symmetric";
    case 5: return "mixed";
    case 6: return "mixed and symmetric";
    default: throw DomainError("class id must be in 1..6");
  }
}

KvAlgebra hessian_fixture(const Rational& a, const Rational& b) {
  return catalog_entry(4, 1, {{"G22_2", a}, {"G11_2", b}}).algebra;
}

}  // namespace kvlab
