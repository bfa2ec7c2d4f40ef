#include "kvlab/random.hpp"

namespace kvlab {

Rational RationalSampler::rational(int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  const int p = num(rng_);
  const int q = den(rng_);
  return Rational(p, q);
}

Rational RationalSampler::sparse_integer(int bound, double zero_prob) {
  std::bernoulli_distribution zero(zero_prob);
  if (zero(rng_)) return 0;
  std::uniform_int_distribution<int> v(-bound, bound);
  return v(rng_);
}

RatVector RationalSampler::vector(std::size_t n) {
  RatVector v(n);
  for (auto& x : v) x = rational();
  return v;
}

KvAlgebra RationalSampler::algebra(std::size_t n) { return KvAlgebra(n, vector(n * n * n)); }

Cochain RationalSampler::cochain(std::size_t degree, std::size_t n) {
  return Cochain(degree, n, vector(int_pow(n, degree + 1)));
}

std::optional<KvAlgebra> RationalSampler::kv_algebra(std::size_t n, std::size_t max_tries) {
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    RatVector g(n * n * n);
    for (auto& x : g) x = sparse_integer(2, 0.6);
    if (is_zero(g)) continue;
    KvAlgebra alg(n, std::move(g));
    if (is_kv(alg)) return alg;
  }
  return std::nullopt;
}

}  // namespace kvlab
