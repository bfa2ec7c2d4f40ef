#include "kvlab/algebra_io.hpp"

#include "kvlab/errors.hpp"

#include <fstream>
#include <sstream>

namespace kvlab {

namespace {

Rational scalar_from_json(const Json& x) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) {
    return x.is_number_unsigned() ? Rational(x.get<std::uint64_t>()) : Rational(x.get<std::int64_t>());
  }
  throw ParseError("scalars must be \"p/q\" strings or integers, got " + x.dump());
}

std::size_t count_from_json(const Json& x, const char* what) {
  if (x.is_number_unsigned()) return x.get<std::size_t>();
  if (x.is_number_integer() && x.get<std::int64_t>() >= 0) return static_cast<std::size_t>(x.get<std::int64_t>());
  if (x.is_string()) {
    const Rational r = parse_rational(x.get<std::string>());
    if (denominator(r) == 1 && r >= 0) return numerator(r).convert_to<std::size_t>();
  }
  throw ParseError(std::string("'") + what + "' must be a non-negative integer");
}

const Json& require_array(const Json& x, std::size_t n, const char* what) {
  if (!x.is_array()) throw DimensionError(std::string(what) + " must be an array");
  if (x.size() != n) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(n));
  }
  return x;
}

}  // namespace

KvAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  if (!doc.contains("dim")) throw ParseError("algebra document lacks 'dim'");
  if (!doc.contains("gamma")) throw ParseError("algebra document lacks 'gamma'");
  const std::size_t n = count_from_json(doc.at("dim"), "dim");
  if (n == 0) throw DimensionError("'dim' must be positive");
  if (n > 16) throw DimensionError("'dim' larger than 16 is not supported");
  KvAlgebra alg(n);
  const Json& g = require_array(doc.at("gamma"), n, "gamma");
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = require_array(g[i], n, "gamma[i]");
    for (std::size_t j = 0; j < n; ++j) {
      const Json& cell = require_array(row[j], n, "gamma[i][j]");
      for (std::size_t k = 0; k < n; ++k) alg.gamma(i, j, k) = scalar_from_json(cell[k]);
    }
  }
  return alg;
}

KvAlgebra parse_algebra(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

KvAlgebra parse_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

Json algebra_to_json(const KvAlgebra& alg) { return Json{{"dim", alg.dim()}, {"gamma", gamma_json(alg)}}; }

std::string serialize_algebra(const KvAlgebra& alg) { return algebra_to_json(alg).dump(2) + "\n"; }

Cochain cochain_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("dim") || !doc.contains("coeffs")) {
    throw ParseError("cochain document needs 'degree', 'dim' and 'coeffs'");
  }
  const std::size_t q = count_from_json(doc.at("degree"), "degree");
  const std::size_t n = count_from_json(doc.at("dim"), "dim");
  if (n == 0 || n > 16 || q > 8) throw DimensionError("cochain shape out of range");
  const Json& c = doc.at("coeffs");
  if (!c.is_array()) throw DimensionError("'coeffs' must be an array");
  RatVector coeffs;
  for (const auto& x : c) coeffs.push_back(scalar_from_json(x));
  return Cochain(q, n, std::move(coeffs));
}

}  // namespace kvlab
