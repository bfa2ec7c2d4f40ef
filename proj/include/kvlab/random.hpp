#pragma once

#include "kvlab/cochain.hpp"
#include "kvlab/kv_algebra.hpp"
#include "kvlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace kvlab {

/** Deterministic source of small random rationals and derived objects. */
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  // p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(int num_bound = 3, int den_bound = 3);
  // Integer in [-bound, bound]; zero with probability zero_prob first.
  Rational sparse_integer(int bound, double zero_prob);
  RatVector vector(std::size_t n);
  KvAlgebra algebra(std::size_t n);
  Cochain cochain(std::size_t degree, std::size_t n);
  // Rejection sampling over sparse small-integer structure constants.
  std::optional<KvAlgebra> kv_algebra(std::size_t n, std::size_t max_tries = 100000);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kvlab
