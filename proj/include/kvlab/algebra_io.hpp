#pragma once

#include "kvlab/kv_algebra.hpp"
#include "kvlab/report.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace kvlab {

/**
 * Algebra documents: {"dim": n, "gamma": [[[g_ij^k ...]]]} indexed
 * [i][j][k], each scalar a "p/q" string, an integer string or a JSON integer.
 * Malformed JSON and bad scalars throw ParseError (ValueError for a zero
 * denominator); wrong shapes throw DimensionError.
 */
KvAlgebra algebra_from_json(const Json& doc);
KvAlgebra parse_algebra(std::string_view text);
KvAlgebra parse_algebra_file(const std::filesystem::path& path);

Json algebra_to_json(const KvAlgebra& alg);
/** Canonical text form: normalized rationals as strings, two-space indent, trailing newline. */
std::string serialize_algebra(const KvAlgebra& alg);

Cochain cochain_from_json(const Json& doc);

}  // namespace kvlab
