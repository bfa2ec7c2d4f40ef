#pragma once

#include "kvlab/kv_algebra.hpp"
#include "kvlab/linalg.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kvlab {

/**
 * A coefficient system exactly as it appears in the literature, kept as
 * expression strings over the constants Gij_k and named unknowns. Each row
 * is paired with the coordinate of the structural object it transcribes so
 * the audit can compare row by row as well as by solution set.
 */
struct PrintedSystem {
  enum class Kind {
    Condition,  // no unknowns; rows are polynomial conditions on the constants
    Kernel,     // rows = 0 cut out the solution set
    Image,      // rows give the coordinates of the attained values
  };

  std::string id;
  std::string title;
  Kind kind;
  // Degree q of the coboundary the rows transcribe; -1 for the KV anomaly.
  int degree;
  std::vector<std::string> unknowns;
  // Flat cochain coordinate of each unknown (degree q coefficients).
  std::vector<std::size_t> unknown_coords;
  std::vector<std::string> rows;
  // Flat coordinate of the structural output each row corresponds to.
  std::vector<std::size_t> row_coords;
  // Names of the value coordinates of an Image system.
  std::vector<std::string> value_names;
};

const std::vector<PrintedSystem>& printed_systems();
const PrintedSystem& printed_system(std::string_view id);

/**
 * Printed rows instantiated on a two-dimensional algebra: one row per
 * printed row, columns in cochain coordinate order (not printed order).
 * For Condition systems the single column holds the row values.
 */
RatMatrix instantiate(const PrintedSystem& sys, const KvAlgebra& alg);

}  // namespace kvlab
