#include "wgo/gkm.hpp"

#include <numeric>

#include "wgo/parallel.hpp"

namespace wgo {

namespace {

// Reduction modulo a linear form: eliminate one variable with nonzero coefficient.
struct LinearQuotient {
  int var;
  Polynomial image;

  explicit LinearQuotient(const Polynomial& form) {
    var = -1;
    Rational c;
    for (const auto& [m, coef] : form.terms()) {
      if (m.degree() != 1) throw InconsistentComputation("edge label is not a linear form");
      for (int v = 0; v < kMaxVars; ++v) {
        if (m.exp[v]) {
          var = v;
          c = coef;
        }
      }
    }
    if (var < 0) throw InconsistentComputation("edge label is zero");
    Monomial x;
    x.exp[static_cast<std::size_t>(var)] = 1;
    image = Polynomial::monomial(x, 1) - form * Rational(1 / c);
  }

  Polynomial reduce(const Polynomial& f) const { return f.substitute(var, image); }
};

// Unique homogeneous polynomial of degree `degree` congruent to values[t] modulo labels[t].
Polynomial interpolate(const std::vector<const Polynomial*>& labels, const std::vector<const Polynomial*>& values,
                       int degree) {
  const std::size_t needed = static_cast<std::size_t>(degree) + 1;
  if (labels.size() < needed) throw InconsistentComputation("not enough neighbours to interpolate");
  Polynomial p, prefix(1);
  for (std::size_t t = 0; t < needed; ++t) {
    LinearQuotient q(*labels[t]);
    Polynomial residual = q.reduce(*values[t] - p);
    Polynomial modulus = q.reduce(prefix);
    auto step = divide_exact(residual, modulus);
    if (!step) throw InconsistentComputation("interpolation step not divisible");
    p += prefix * *step;
    prefix *= *labels[t];
  }
  for (std::size_t t = needed; t < labels.size(); ++t) {
    if (!divide_exact(*values[t] - p, *labels[t])) throw InconsistentComputation("interpolation does not fit all edges");
  }
  return p;
}

}  // namespace

GKMGraph::GKMGraph(const PluckerSpace& space, WeightVector presented) : space_(&space), b_(std::move(presented)) {
  space.require_valid(b_);
  if (space.n() > kMaxY) throw CapacityError("polynomial variables limited to n <= 15");
  if (!is_descending_chain(b_)) throw UnsupportedWeightVector("weights are not in divisive presentation");
  presentation_.resize(size());
  std::iota(presentation_.begin(), presentation_.end(), 0);
  const auto& lat = lattice();
  for (std::size_t i = 0; i < size(); ++i) Y_.push_back(linear_form_Y(lat[i]));
  down_.resize(size());
  for (std::size_t hi = 0; hi < size(); ++hi) {
    for (std::size_t lo : lat.reversal_set(hi)) {
      Integer ratio = b_[lo] / b_[hi];
      down_[hi].push_back(edges_.size());
      edges_.push_back({lo, hi, ratio, Y_[lo] - Y_[hi] * Rational(ratio)});
    }
  }
}

GKMGraph GKMGraph::build(const PluckerSpace& space, std::span<const Integer> b) {
  auto witness = is_divisive(space, b);
  if (!witness) {
    throw UnsupportedWeightVector("ring computation requires divisive weight vector: no divisive Plücker permutation found");
  }
  GKMGraph g(space, apply_permutation(*witness, b));
  g.presentation_ = *witness;
  return g;
}

Polynomial GKMGraph::diagonal(std::size_t i) const {
  Polynomial p(1);
  for (std::size_t e : down_[i]) p *= edges_[e].label;
  return p;
}

bool GKMGraph::unweighted() const {
  return std::all_of(b_.begin(), b_.end(), [&](const Integer& x) { return x == b_[0]; });
}

bool is_class(const GKMGraph& graph, const EquivariantClass& candidate) {
  if (candidate.size() != graph.size()) return false;
  for (const auto& e : graph.edges()) {
    if (!divide_exact(candidate[e.hi] - candidate[e.lo], e.label)) return false;
  }
  return true;
}

RestrictionMatrix interpolate_restrictions(const GKMGraph& graph, int jobs) {
  const std::size_t m = graph.size();
  const auto& lat = graph.lattice();
  RestrictionMatrix out(m, EquivariantClass(m));
  parallel_for(m, jobs, [&](std::size_t i) {
    auto& row = out[i];
    for (std::size_t j = i; j < m; ++j) {
      if (j == i) {
        row[j] = graph.diagonal(i);
        continue;
      }
      if (!lat.precedes_eq(i, j)) continue;
      std::vector<const Polynomial*> labels, values;
      for (std::size_t e : graph.down_edges(j)) {
        labels.push_back(&graph.edges()[e].label);
        values.push_back(&row[graph.edges()[e].lo]);
      }
      row[j] = interpolate(labels, values, lat.dim(i));
    }
  });
  return out;
}

RestrictionMatrix kt_restrictions(const PluckerSpace& space, int jobs) {
  return interpolate_restrictions(GKMGraph(space, WeightVector(space.size(), 1)), jobs);
}

RestrictionMatrix weighted_restrictions(const GKMGraph& graph, const RestrictionMatrix& kt) {
  const std::size_t m = graph.size();
  const int n = graph.lattice().n();
  WASolution wa = graph.space().solve_wa(graph.weights());
  RestrictionMatrix out(m, EquivariantClass(m));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Polynomial> images;
    for (int s = 1; s <= n; ++s) {
      Rational shift(wa.W[static_cast<std::size_t>(s - 1)], graph.weights()[j]);
      shift.canonicalize();
      images.push_back(Polynomial::y(s) - graph.Y(j) * shift);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!kt[i][j].is_zero()) out[i][j] = kt[i][j].compose(images);
    }
  }
  return out;
}

StructureRow localize_product(const RestrictionMatrix& basis, const SymbolLattice& lattice, std::size_t i,
                              std::size_t j) {
  const std::size_t m = lattice.size();
  std::vector<Polynomial> residual(m);
  for (std::size_t v = 0; v < m; ++v) residual[v] = basis[i][v] * basis[j][v];
  StructureRow out;
  for (std::size_t l = 0; l < m; ++l) {
    if (residual[l].is_zero()) continue;
    auto c = divide_exact(residual[l], basis[l][l]);
    if (!c) throw InconsistentComputation("localized product not divisible by the diagonal");
    for (std::size_t v = l; v < m; ++v) {
      if (!basis[l][v].is_zero()) residual[v] -= *c * basis[l][v];
    }
    out.emplace(l, std::move(*c));
  }
  return out;
}

StructureTable localize_table(const RestrictionMatrix& basis, const SymbolLattice& lattice, int jobs) {
  const std::size_t m = lattice.size();
  StructureTable table(m);
  parallel_for(m * m, jobs, [&](std::size_t c) { table.at(c / m, c % m) = localize_product(basis, lattice, c / m, c % m); });
  return table;
}

}  // namespace wgo
