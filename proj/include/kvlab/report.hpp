#pragma once

#include "kvlab/cochain.hpp"
#include "kvlab/kv_algebra.hpp"
#include "kvlab/linalg.hpp"
#include "kvlab/rational.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kvlab {

using Json = nlohmann::ordered_json;

enum class ClaimStatus { Confirmed, Refuted, Partial };

std::string_view to_string(ClaimStatus s);

/**
 * Outcome of auditing one published claim. `computed` and `printed` hold
 * the two sides being compared; `witness` is null for confirmed claims and
 * carries exact data otherwise. All scalars are "p/q" strings.
 */
struct ClaimReport {
  std::string claim;
  std::string location;
  ClaimStatus status = ClaimStatus::Confirmed;
  Json computed = Json::object();
  Json printed = Json::object();
  Json witness;  // null when confirmed
};

// Exact JSON encodings shared by reports and the CLI.
Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const LinearSubspace& s);
Json to_json(const Cochain& c);
Json count_json(std::size_t n);
// Nested [i][j][k] structure-constant array.
Json gamma_json(const KvAlgebra& alg);

RatVector rat_vector_from_json(const Json& j);

}  // namespace kvlab
