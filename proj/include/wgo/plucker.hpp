#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wgo/combinatorics.hpp"
#include "wgo/exactpoly.hpp"

namespace wgo {

class InvalidWeightVector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedWeightVector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using WeightVector = std::vector<Integer>;
using Permutation = std::vector<std::size_t>;

struct RelationTerm {
  int sign;
  std::size_t r, s;  // r < s
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

struct PluckerRelation {
  std::vector<RelationTerm> terms;
  std::vector<int> fixed;  // i_1 < ... < i_{k-1}
  std::vector<int> free;   // l_0 < ... < l_k

  std::string to_string() const;
  Integer evaluate(std::span<const Integer> z) const;
  Rational evaluate(std::span<const Rational> z) const;
};

struct SignedPermutation {
  Permutation sigma;
  std::vector<int> signs;
};

enum class PermutationScope { kIdentity, kSnInduced, kFull };

PermutationScope parse_scope(const std::string& name);
std::string scope_name(PermutationScope scope);

std::vector<PluckerRelation> generate_relations(int k, int n);

struct WASolution {
  std::vector<Integer> W;
  int a;
};

// Lattice, relations and sampled points for one (k, n); built once and shared read-only.
class PluckerSpace {
 public:
  static constexpr std::size_t kFullScopeLimit = 9;
  static constexpr int kSampleCount = 50;

  PluckerSpace(int k, int n);

  int k() const { return lattice_.k(); }
  int n() const { return lattice_.n(); }
  std::size_t size() const { return lattice_.size(); }
  const SymbolLattice& lattice() const { return lattice_; }
  const std::vector<PluckerRelation>& relations() const { return relations_; }

  bool is_plucker_point(std::span<const Rational> z) const;
  std::vector<Integer> sample_plucker_point(uint64_t seed) const;

  bool validate(std::span<const Integer> b) const;
  // Throws InvalidWeightVector with a reason when b is not a Plücker weight vector.
  void require_valid(std::span<const Integer> b) const;
  WASolution solve_wa(std::span<const Integer> b) const;
  WeightVector weights_from_wa(const WASolution& wa) const;

  std::optional<SignedPermutation> is_plucker_permutation(std::span<const std::size_t> sigma) const;
  std::vector<SignedPermutation> enumerate_permutations(PermutationScope scope, int jobs = 1) const;
  bool full_scope_allowed() const { return size() <= kFullScopeLimit; }
  // Candidate permutations for certificate searches: identity, then S_n-induced, then full when allowed.
  // Ordered by number of moved points, then lexicographically, within each stage.
  const std::vector<Permutation>& search_order() const;

  std::vector<Permutation> sn_induced_permutations() const;

 private:
  bool screen(std::span<const std::size_t> sigma, std::vector<int>& signs) const;
  bool confirm(std::span<const std::size_t> sigma, std::span<const int> signs) const;

  SymbolLattice lattice_;
  std::vector<PluckerRelation> relations_;
  std::vector<std::vector<Integer>> samples_;
  // Row echelon basis of the relation span over the z_a z_b monomials.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> span_rows_;
  std::vector<std::size_t> span_pivots_;
  mutable std::vector<Permutation> search_order_;
  mutable bool search_ready_ = false;
};

Integer gcd_of(std::span<const Integer> b);
bool is_primitive(std::span<const Integer> b);

WeightVector apply_permutation(std::span<const std::size_t> sigma, std::span<const Integer> b);
WeightVector apply_plucker_permutation(const PluckerSpace& space, std::span<const std::size_t> sigma,
                                       std::span<const Integer> b);

// Returns sigma with b_{sigma(i)} | b_{sigma(i-1)} for all i.
std::optional<Permutation> is_divisive(const PluckerSpace& space, std::span<const Integer> b);
bool is_descending_chain(std::span<const Integer> b);

WeightVector normalize(std::span<const Integer> b);
bool is_normalized(std::span<const Integer> b);

struct Equivalence {
  Permutation sigma;
  Rational scale;
};
// Searches c = r * sigma(b) over the certificate search order.
std::optional<Equivalence> equivalence(const PluckerSpace& space, std::span<const Integer> b,
                                       std::span<const Integer> c);

// Weight vector with cached metadata.
class PluckerWeightVector {
 public:
  PluckerWeightVector(const PluckerSpace& space, WeightVector b);

  const WeightVector& values() const { return b_; }
  const Integer& operator[](std::size_t i) const { return b_[i]; }
  std::size_t size() const { return b_.size(); }
  bool valid() const { return valid_; }
  bool primitive() const { return primitive_; }
  bool normalized() const { return normalized_; }
  const std::optional<Permutation>& divisive_witness() const;

 private:
  const PluckerSpace* space_;
  WeightVector b_;
  bool valid_, primitive_, normalized_;
  mutable std::optional<std::optional<Permutation>> witness_;
};

std::string permutation_string(std::span<const std::size_t> sigma);

}  // namespace wgo
