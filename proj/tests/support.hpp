#pragma once

#include <random>
#include <vector>

#include "wgo/plucker.hpp"

namespace wgo::test {

inline Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> terms(0, max_terms), deg(0, max_degree), var(1, nvars), coef(-9, 9),
      den(1, 4);
  Polynomial p;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Polynomial m(Rational(coef(rng), den(rng)));
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) m *= Polynomial::y(var(rng));
    p += m;
  }
  return p;
}

// b from a random (W, a); retries until every entry is positive.
inline WeightVector random_valid_weights(const PluckerSpace& space, std::mt19937_64& rng, int spread = 6) {
  std::uniform_int_distribution<int> w(-spread, spread), a(1, space.k());
  for (;;) {
    WASolution wa;
    wa.a = a(rng);
    for (int s = 0; s < space.n(); ++s) wa.W.push_back(w(rng));
    WeightVector b = space.weights_from_wa(wa);
    bool positive = true;
    for (const auto& x : b) positive = positive && x > 0;
    if (positive) return b;
  }
}

// C(n, k) with 64-bit arithmetic; exact for the small cases used in tests.
inline long long binomial(int n, int k) {
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Coefficients of the Gaussian binomial [n choose k]_t from
// [n, k] = [n-1, k-1] + t^k [n-1, k].
inline std::vector<long long> gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  auto a = gaussian_binomial(n - 1, k - 1);
  auto b = gaussian_binomial(n - 1, k);
  std::vector<long long> out(static_cast<std::size_t>(k * (n - k)) + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + static_cast<std::size_t>(k)] += b[i];
  return out;
}

}  // namespace wgo::test
