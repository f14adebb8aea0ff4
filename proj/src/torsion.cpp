#include "wgo/torsion.hpp"

#include <algorithm>
#include <set>

namespace wgo {

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::set<Integer>& out) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.insert(Integer(p));
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out.insert(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

Integer lcm_of(std::initializer_list<Integer> xs) {
  Integer l = 1;
  for (const auto& x : xs) l = lcm(l, x);
  return l;
}

}  // namespace

bool is_prime(const Integer& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

std::vector<Integer> prime_factors(const Integer& x) {
  std::set<Integer> out;
  factor_into(abs(x), out);
  return {out.begin(), out.end()};
}

std::vector<Integer> prime_factors(std::span<const Integer> xs) {
  std::set<Integer> out;
  for (const auto& x : xs) factor_into(abs(x), out);
  return {out.begin(), out.end()};
}

unsigned long p_exponent(const Integer& x, const Integer& p) {
  if (x == 0) throw ParameterError("p-content of zero is undefined");
  Integer r;
  return mpz_remove(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

Integer p_content(const Integer& x, const Integer& p) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), p_exponent(x, p));
  return out;
}

Integer l_e(std::span<const Integer> weights, std::size_t e) {
  if (e < 1 || e > weights.size()) throw ParameterError("l_e: e out of range");
  Integer out = 1;
  for (const auto& p : prime_factors(weights)) {
    std::vector<Integer> contents;
    for (const auto& w : weights) contents.push_back(p_content(w, p));
    std::sort(contents.begin(), contents.end(), std::greater<>());
    for (std::size_t s = 0; s < e; ++s) out *= contents[s];
  }
  return out;
}

CohomologyGroups lens_cohomology(const LensSpec& spec) {
  const std::size_t t = spec.weights.size();
  if (t < 1) throw ParameterError("lens space needs at least one weight");
  if (spec.order < 1 || std::any_of(spec.weights.begin(), spec.weights.end(), [](const Integer& w) { return w < 1; })) {
    throw ParameterError("lens data must be positive");
  }
  CohomologyGroups out;
  out[0].rank = 1;
  out[static_cast<int>(2 * t - 1)].rank += 1;
  std::vector<Integer> closed = spec.weights;
  closed.push_back(spec.order);
  for (std::size_t e = 1; e + 1 <= t; ++e) {
    Integer mu = l_e(closed, e) / l_e(spec.weights, e);
    if (mu > 1) out[static_cast<int>(2 * e)].torsion.push_back(mu);
  }
  return out;
}

std::vector<BuildingStage> building_sequence(const PluckerSpace& space, std::span<const Integer> b) {
  space.require_valid(b);
  std::vector<BuildingStage> out;
  const auto& lat = space.lattice();
  for (std::size_t i = 1; i < space.size(); ++i) {
    LensSpec lens{b[i], {}};
    for (std::size_t j : lat.reversal_set(i)) lens.weights.push_back(b[j]);
    out.push_back({i, lat.dim(i), std::move(lens)});
  }
  return out;
}

bool certificate_holds(const PluckerSpace& space, std::span<const Integer> b, const Integer& p,
                       std::span<const std::size_t> sigma) {
  const auto& lat = space.lattice();
  for (std::size_t j = 3; j < space.size(); ++j) {
    Integer c = p_content(b[sigma[j]], p);
    int hits = 0;
    for (std::size_t l : lat.reversal_set(j)) {
      if (mpz_divisible_p(b[sigma[l]].get_mpz_t(), c.get_mpz_t())) ++hits;
    }
    if (hits < lat.dim(j) - 1) return false;
  }
  return true;
}

std::optional<Permutation> no_p_torsion_certificate(const PluckerSpace& space, std::span<const Integer> b,
                                                    const Integer& p, PermutationScope scope) {
  space.require_valid(b);
  if (!is_prime(p)) throw ParameterError("certificate needs a prime");
  const auto& order = space.search_order();
  for (const auto& sigma : order) {
    if (scope == PermutationScope::kIdentity && &sigma != &order.front()) break;
    if (certificate_holds(space, b, p, sigma)) return sigma;
  }
  if (scope == PermutationScope::kFull && !space.full_scope_allowed()) {
    throw CapacityError("full permutation scope not available at this size");
  }
  return std::nullopt;
}

Gr24TorsionReport gr24_torsion_report(const PluckerSpace& space, std::span<const Integer> b) {
  if (space.k() != 2 || space.n() != 4) throw ParameterError("report is specific to (k, n) = (2, 4)");
  space.require_valid(b);
  Gr24TorsionReport report;
  report.special_rule = b[1] == b[2] && gcd(b[0], b[5]) == 1;
  const auto& perms = space.search_order();
  for (const auto& p : prime_factors(b)) {
    std::vector<unsigned long> r;
    for (const auto& x : b) r.push_back(p_exponent(x, p));
    unsigned long rmin = *std::min_element(r.begin(), r.end());
    bool certified = false;
    for (const auto& sigma : perms) {
      if (r[sigma[5]] != rmin) continue;
      if (r[sigma[4]] > std::min({r[sigma[1]], r[sigma[2]], r[sigma[3]]})) continue;
      WeightVector c = apply_permutation(sigma, b);
      Integer base = lcm_of({c[0], c[1]});
      Integer eta = lcm_of({c[0], c[1], c[3]}) / base;
      Integer eta_prime = lcm_of({c[0], c[1], c[2]}) / base;
      Integer g = gcd(eta, eta_prime);
      certified = certified || !mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t());
      report.candidates.push_back({p, sigma, eta, eta_prime});
    }
    if (!certified) certified = no_p_torsion_certificate(space, b, p, PermutationScope::kFull).has_value();
    (certified ? report.certified_primes : report.uncertified_primes).push_back(p);
  }
  report.middle_torsion_free = report.special_rule || report.uncertified_primes.empty();
  return report;
}

Integer local_group_order(const PluckerSpace& space, std::span<const Integer> b, std::size_t i) {
  space.require_valid(b);
  if (!is_primitive(b)) throw InvalidWeightVector("local group order requires a primitive weight vector");
  if (i >= space.size()) throw ParameterError("symbol index out of range");
  return b[i];
}

}  // namespace wgo
