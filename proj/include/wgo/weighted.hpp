#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wgo/puzzle.hpp"

namespace wgo {

struct PieceWeightData {
  int u, v;          // sigma_r weight y_u - y_v, u < v
  Integer bp;        // w_u - w_v
  Rational ratio;    // bp / b_0
  Polynomial bwt;    // y_u - y_v - ratio * Y_{lambda^0}
};

using OrdinaryRow = std::map<std::size_t, Rational>;

class OrdinaryTable {
 public:
  explicit OrdinaryTable(std::size_t size = 0) : size_(size), rows_(size * size) {}
  std::size_t size() const { return size_; }
  OrdinaryRow& at(std::size_t i, std::size_t j) { return rows_[i * size_ + j]; }
  const OrdinaryRow& at(std::size_t i, std::size_t j) const { return rows_[i * size_ + j]; }
  friend bool operator==(const OrdinaryTable&, const OrdinaryTable&) = default;

 private:
  std::size_t size_;
  std::vector<OrdinaryRow> rows_;
};

// Weighted structure constants of a divisive weighted Grassmann orbifold.
// All indices refer to the divisive presentation graph().weights().
class WeightedRing {
 public:
  WeightedRing(const PluckerSpace& space, std::span<const Integer> b, int jobs = 1);

  const PluckerSpace& space() const { return *space_; }
  const SymbolLattice& lattice() const { return space_->lattice(); }
  const GKMGraph& graph() const { return graph_; }
  const WeightVector& weights() const { return graph_.weights(); }
  const WASolution& wa() const { return wa_; }
  std::size_t size() const { return lattice().size(); }

  // w_u - w_v, checked against every symbol pair realising y_u - y_v.
  Integer piece_weight(int u, int v) const;
  std::vector<PieceWeightData> piece_data(const Puzzle& puzzle) const;
  // Saturated chains l = l_0 -> l_1 -> ... -> l_r = q.
  const std::vector<std::vector<std::size_t>>& chains(std::size_t l, std::size_t q) const;

  StructureRow pieri_power_constants(std::size_t q, int s) const;
  StructureRow equivariant_constants(std::size_t i, std::size_t j) const;
  StructureTable equivariant_table(int jobs = 1) const;
  OrdinaryRow ordinary_constants(std::size_t i, std::size_t j) const;
  OrdinaryTable ordinary_table(int jobs = 1) const;

  // Restrictions of the weighted basis and the oracle table from them.
  const RestrictionMatrix& restrictions() const;
  StructureTable oracle_table(int jobs = 1) const;

  // Generators g_q = y_q - y_{q+1} - ((w_q - w_{q+1}) / b_0) Y_{lambda^0}, q = 1..n-1, then Y_{lambda^0}.
  std::vector<Polynomial> positivity_basis() const;

 private:
  const std::vector<Puzzle>& puzzles(std::size_t i, std::size_t j, std::size_t q) const;

  const PluckerSpace* space_;
  int jobs_;
  GKMGraph graph_;
  WASolution wa_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> chain_cache_;
  mutable std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<Puzzle>> puzzle_cache_;
  mutable std::unique_ptr<RestrictionMatrix> restrictions_;
};

// Rewrites p in the coordinates of ring.positivity_basis(): y_t stands for g_t (t < n), y_n for Y_{lambda^0}.
Polynomial change_basis_positivity(const Polynomial& p, const WeightedRing& ring);

struct VerificationResult {
  bool ok = true;
  std::string counterexample;
};

VerificationResult verify_integrality(const StructureTable& table);
VerificationResult verify_integrality(const OrdinaryTable& table);
VerificationResult verify_positivity(const StructureTable& table, const WeightedRing& ring);

}  // namespace wgo
