#pragma once

#include "kvlab/kv_algebra.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kvlab {

/**
 * One printed family of two-dimensional KV structures. The pattern lists
 * the eight entries of Gamma_1 then Gamma_2 (each row-major) as linear
 * expressions in the family parameters, e.g. "2*G22_2" or "0".
 */
struct CatalogFamily {
  int class_id;
  int family_index;
  std::array<std::string, 8> pattern;
  std::vector<std::string> parameters;  // in order of first appearance
  std::vector<Rational> defaults;
};

struct CatalogEntry {
  int class_id;
  int family_index;
  std::vector<std::pair<std::string, Rational>> parameters;
  KvAlgebra algebra;
};

const std::vector<CatalogFamily>& catalog_families();

/** Every family instantiated at its default parameters (36 entries). */
std::vector<CatalogEntry> catalog();

/**
 * Instantiates one family. Parameters not overridden keep their defaults.
 * Unknown parameter names and violated side conditions throw DomainError.
 */
CatalogEntry catalog_entry(int class_id, int family_index, const std::map<std::string, Rational>& overrides = {});

/** Heading of a class: "degenerate", "degenerate and symmetric", ... */
std::string class_description(int class_id);

/** Hessian fixture of class 4, family 1: Gamma_1 = (0 a; a 0), Gamma_2 = (b 0; 0 a). */
KvAlgebra hessian_fixture(const Rational& a, const Rational& b);

}  // namespace kvlab
