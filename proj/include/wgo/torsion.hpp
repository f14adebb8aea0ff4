#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wgo/plucker.hpp"

namespace wgo {

// Distinct prime factors in increasing order.
std::vector<Integer> prime_factors(const Integer& x);
std::vector<Integer> prime_factors(std::span<const Integer> xs);
bool is_prime(const Integer& p);
// Largest power of p dividing x.
Integer p_content(const Integer& x, const Integer& p);
unsigned long p_exponent(const Integer& x, const Integer& p);

// Product over primes of the e largest p-contents among the weights; 1 <= e <= weights.size().
Integer l_e(std::span<const Integer> weights, std::size_t e);

struct LensSpec {
  Integer order;
  std::vector<Integer> weights;
};

struct CohomologyGroup {
  long rank = 0;
  std::vector<Integer> torsion;
  friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

using CohomologyGroups = std::map<int, CohomologyGroup>;

CohomologyGroups lens_cohomology(const LensSpec& spec);

struct BuildingStage {
  std::size_t index;
  int dim;
  LensSpec lens;
};

std::vector<BuildingStage> building_sequence(const PluckerSpace& space, std::span<const Integer> b);

// Searches a Plücker permutation sigma such that for every j >= 3 the p-content of b_{sigma(j)}
// divides at least d(j) - 1 of the b_{sigma(l)} with lambda^l in R(lambda^j).
std::optional<Permutation> no_p_torsion_certificate(const PluckerSpace& space, std::span<const Integer> b,
                                                    const Integer& p, PermutationScope scope);
bool certificate_holds(const PluckerSpace& space, std::span<const Integer> b, const Integer& p,
                       std::span<const std::size_t> sigma);

struct Gr24Candidate {
  Integer prime;
  Permutation sigma;
  Integer eta, eta_prime;
};

struct Gr24TorsionReport {
  bool torsion_free_outside_middle = true;
  bool middle_torsion_free = false;
  bool special_rule = false;
  std::vector<Gr24Candidate> candidates;
  std::vector<Integer> certified_primes;
  std::vector<Integer> uncertified_primes;
};

Gr24TorsionReport gr24_torsion_report(const PluckerSpace& space, std::span<const Integer> b);

// Order of the local group at the fixed point lambda^i, from the top lens group of its neighbourhood.
Integer local_group_order(const PluckerSpace& space, std::span<const Integer> b, std::size_t i);

}  // namespace wgo
