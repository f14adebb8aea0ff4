#pragma once

#include <map>
#include <vector>

#include "wgo/plucker.hpp"

namespace wgo {

class InconsistentComputation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Vertex-indexed restrictions of an equivariant class.
using EquivariantClass = std::vector<Polynomial>;
// Row i holds the class indexed by lambda^i, column j its restriction to lambda^j.
using RestrictionMatrix = std::vector<EquivariantClass>;
// Coefficients l -> polynomial of a product in the Schubert basis.
using StructureRow = std::map<std::size_t, Polynomial>;

class StructureTable {
 public:
  explicit StructureTable(std::size_t size = 0) : size_(size), rows_(size * size) {}
  std::size_t size() const { return size_; }
  StructureRow& at(std::size_t i, std::size_t j) { return rows_[i * size_ + j]; }
  const StructureRow& at(std::size_t i, std::size_t j) const { return rows_[i * size_ + j]; }
  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t size_;
  std::vector<StructureRow> rows_;
};

struct GKMEdge {
  std::size_t lo, hi;  // lambda^lo in R(lambda^hi)
  Integer ratio;       // b_lo / b_hi
  Polynomial label;    // Y_lo - ratio * Y_hi
};

class GKMGraph {
 public:
  // b must already be presented as a divisibility-descending chain.
  GKMGraph(const PluckerSpace& space, WeightVector presented);
  // Finds a divisive presentation of b; throws UnsupportedWeightVector if none is found.
  static GKMGraph build(const PluckerSpace& space, std::span<const Integer> b);

  const PluckerSpace& space() const { return *space_; }
  const SymbolLattice& lattice() const { return space_->lattice(); }
  std::size_t size() const { return lattice().size(); }
  const WeightVector& weights() const { return b_; }
  const Permutation& presentation() const { return presentation_; }
  const std::vector<GKMEdge>& edges() const { return edges_; }
  // Edges whose upper end is vertex j, ordered like reversal_set(j).
  const std::vector<std::size_t>& down_edges(std::size_t j) const { return down_[j]; }
  const Polynomial& Y(std::size_t i) const { return Y_[i]; }
  Polynomial diagonal(std::size_t i) const;
  bool unweighted() const;

 private:
  const PluckerSpace* space_;
  WeightVector b_;
  Permutation presentation_;
  std::vector<GKMEdge> edges_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<Polynomial> Y_;
};

bool is_class(const GKMGraph& graph, const EquivariantClass& candidate);

// Basis classes pinned by support, diagonal and degree, solved vertex by vertex.
RestrictionMatrix interpolate_restrictions(const GKMGraph& graph, int jobs = 1);
// Unweighted basis (b = 1).
RestrictionMatrix kt_restrictions(const PluckerSpace& space, int jobs = 1);
// Weighted basis from the unweighted one by y_s -> y_s - (w_s / b_j) Y_j at each vertex j.
RestrictionMatrix weighted_restrictions(const GKMGraph& graph, const RestrictionMatrix& kt);

StructureRow localize_product(const RestrictionMatrix& basis, const SymbolLattice& lattice, std::size_t i,
                              std::size_t j);
StructureTable localize_table(const RestrictionMatrix& basis, const SymbolLattice& lattice, int jobs = 1);

}  // namespace wgo
