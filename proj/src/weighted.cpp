#include "wgo/weighted.hpp"

#include "wgo/parallel.hpp"

namespace wgo {

WeightedRing::WeightedRing(const PluckerSpace& space, std::span<const Integer> b, int jobs)
    : space_(&space), jobs_(jobs), graph_(GKMGraph::build(space, b)), wa_(space.solve_wa(graph_.weights())) {}

Integer WeightedRing::piece_weight(int u, int v) const {
  Integer w = wa_.W[static_cast<std::size_t>(u - 1)] - wa_.W[static_cast<std::size_t>(v - 1)];
  const auto& lat = lattice();
  const auto& b = weights();
  for (std::size_t f = 0; f < size(); ++f) {
    if (!lat[f].contains(v) || lat[f].contains(u)) continue;
    std::size_t e = lat.index_of(lat[f].replaced(v, u));
    if (b[e] - b[f] != w) throw InconsistentComputation("piece weight depends on the representative pair");
  }
  return w;
}

std::vector<PieceWeightData> WeightedRing::piece_data(const Puzzle& puzzle) const {
  std::vector<PieceWeightData> out;
  const Polynomial& y0 = graph_.Y(0);
  for (auto [u, v] : reflected_weight_pairs(puzzle)) {
    PieceWeightData d;
    d.u = u;
    d.v = v;
    d.bp = piece_weight(u, v);
    d.ratio = Rational(d.bp, weights()[0]);
    d.ratio.canonicalize();
    d.bwt = Polynomial::y(u) - Polynomial::y(v) - y0 * d.ratio;
    out.push_back(std::move(d));
  }
  return out;
}

const std::vector<std::vector<std::size_t>>& WeightedRing::chains(std::size_t l, std::size_t q) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = chain_cache_.find({l, q});
    if (it != chain_cache_.end()) return it->second;
  }
  const auto& lat = lattice();
  std::vector<std::vector<std::size_t>> found;
  if (lat.precedes_eq(q, l)) {
    std::vector<std::size_t> path{l};
    auto dfs = [&](auto&& self) -> void {
      std::size_t cur = path.back();
      if (lat.dim(cur) == lat.dim(q)) {
        if (cur == q) found.push_back(path);
        return;
      }
      for (std::size_t next : lat.arrows_down(cur)) {
        if (!lat.precedes_eq(q, next)) continue;
        path.push_back(next);
        self(self);
        path.pop_back();
      }
    };
    dfs(dfs);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return chain_cache_.emplace(std::make_pair(l, q), std::move(found)).first->second;
}

const std::vector<Puzzle>& WeightedRing::puzzles(std::size_t i, std::size_t j, std::size_t q) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = puzzle_cache_.find({i, j, q});
    if (it != puzzle_cache_.end()) return it->second;
  }
  const auto& lat = lattice();
  auto word = [&](std::size_t x) { return lat[lat.sigma_r(x)].word(); };
  auto found = enumerate_puzzles(word(i), word(j), word(q));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return puzzle_cache_.emplace(std::make_tuple(i, j, q), std::move(found)).first->second;
}

StructureRow WeightedRing::pieri_power_constants(std::size_t q, int s) const {
  const auto& lat = lattice();
  const auto& b = weights();
  const Polynomial& y0 = graph_.Y(0);
  auto c = [&](std::size_t x) {
    Rational ratio(b[0], b[x]);
    ratio.canonicalize();
    return y0 - graph_.Y(x) * ratio;
  };
  StructureRow out;
  for (std::size_t l = 0; l < size(); ++l) {
    if (!lat.precedes_eq(q, l)) continue;
    const int r = lat.dim(l) - lat.dim(q);
    if (r > s) continue;
    const int d = s - r;
    Polynomial total;
    for (const auto& chain : chains(l, q)) {
      // h_d(c_{l_0}, ..., c_{l_r}) by adding one variable at a time.
      std::vector<Polynomial> h(static_cast<std::size_t>(d) + 1);
      h[0] = 1;
      bool first = true;
      for (std::size_t x : chain) {
        Polynomial cx = c(x);
        if (first) {
          for (int e = 1; e <= d; ++e) h[static_cast<std::size_t>(e)] = h[static_cast<std::size_t>(e - 1)] * cx;
          first = false;
        } else {
          for (int e = 1; e <= d; ++e) h[static_cast<std::size_t>(e)] += h[static_cast<std::size_t>(e - 1)] * cx;
        }
      }
      Rational coef = 1;
      for (std::size_t t = 1; t < chain.size(); ++t) coef *= Rational(b[0], b[chain[t]]);
      coef.canonicalize();
      total += h[static_cast<std::size_t>(d)] * coef;
    }
    if (!total.is_zero()) out.emplace(l, std::move(total));
  }
  return out;
}

StructureRow WeightedRing::equivariant_constants(std::size_t i, std::size_t j) const {
  const auto& lat = lattice();
  std::map<std::size_t, Polynomial> acc;
  std::map<std::pair<std::size_t, int>, StructureRow> pieri;
  for (std::size_t q = 0; q < size(); ++q) {
    if (!lat.precedes_eq(i, q) || !lat.precedes_eq(j, q)) continue;
    for (const auto& puzzle : puzzles(i, j, q)) {
      std::vector<std::pair<Polynomial, Rational>> factors;
      for (auto& d : piece_data(puzzle)) factors.emplace_back(std::move(d.bwt), d.ratio);
      auto alpha = expand_linear_product(factors);
      for (std::size_t s = 0; s < alpha.size(); ++s) {
        if (alpha[s].is_zero()) continue;
        auto key = std::make_pair(q, static_cast<int>(s));
        auto it = pieri.find(key);
        if (it == pieri.end()) it = pieri.emplace(key, pieri_power_constants(q, static_cast<int>(s))).first;
        for (const auto& [l, coef] : it->second) acc[l] += alpha[s] * coef;
      }
    }
  }
  StructureRow out;
  for (auto& [l, p] : acc) {
    if (!p.is_zero()) out.emplace(l, std::move(p));
  }
  return out;
}

StructureTable WeightedRing::equivariant_table(int jobs) const {
  const std::size_t m = size();
  StructureTable table(m);
  parallel_for(m * m, jobs, [&](std::size_t c) { table.at(c / m, c % m) = equivariant_constants(c / m, c % m); });
  return table;
}

OrdinaryRow WeightedRing::ordinary_constants(std::size_t i, std::size_t j) const {
  const auto& lat = lattice();
  const auto& b = weights();
  OrdinaryRow out;
  for (std::size_t l = 0; l < size(); ++l) {
    if (lat.dim(l) != lat.dim(i) + lat.dim(j)) continue;
    Rational total = 0;
    for (std::size_t q = 0; q < size(); ++q) {
      if (!lat.precedes_eq(i, q) || !lat.precedes_eq(j, q) || !lat.precedes_eq(q, l)) continue;
      Integer puzzle_sum = 0;
      for (const auto& puzzle : puzzles(i, j, q)) {
        Integer prod = 1;
        for (auto [u, v] : reflected_weight_pairs(puzzle)) prod *= piece_weight(u, v);
        puzzle_sum += prod;
      }
      if (puzzle_sum == 0) continue;
      for (const auto& chain : chains(l, q)) {
        Rational term(puzzle_sum);
        for (std::size_t t = 1; t < chain.size(); ++t) term /= Rational(b[chain[t]]);
        total += term;
      }
    }
    if (total.get_den() != 1) throw InconsistentComputation("non-integral ordinary structure constant");
    if (total != 0) out.emplace(l, total);
  }
  return out;
}

OrdinaryTable WeightedRing::ordinary_table(int jobs) const {
  const std::size_t m = size();
  OrdinaryTable table(m);
  parallel_for(m * m, jobs, [&](std::size_t c) { table.at(c / m, c % m) = ordinary_constants(c / m, c % m); });
  return table;
}

const RestrictionMatrix& WeightedRing::restrictions() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!restrictions_) {
    auto kt = kt_restrictions(*space_, jobs_);
    restrictions_ = std::make_unique<RestrictionMatrix>(weighted_restrictions(graph_, kt));
  }
  return *restrictions_;
}

StructureTable WeightedRing::oracle_table(int jobs) const { return localize_table(restrictions(), lattice(), jobs); }

std::vector<Polynomial> WeightedRing::positivity_basis() const {
  const int n = lattice().n();
  std::vector<Polynomial> basis;
  for (int q = 1; q < n; ++q) {
    Rational ratio(wa_.W[static_cast<std::size_t>(q - 1)] - wa_.W[static_cast<std::size_t>(q)], weights()[0]);
    ratio.canonicalize();
    basis.push_back(Polynomial::y(q) - Polynomial::y(q + 1) - graph_.Y(0) * ratio);
  }
  basis.push_back(graph_.Y(0));
  return basis;
}

Polynomial change_basis_positivity(const Polynomial& p, const WeightedRing& ring) {
  auto basis = ring.positivity_basis();
  return rewrite_in_basis(p, basis, ring.lattice().n());
}

VerificationResult verify_integrality(const StructureTable& table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      for (const auto& [l, p] : table.at(i, j)) {
        if (!p.is_integral()) {
          return {false, std::to_string(i) + "," + std::to_string(j) + " -> " + std::to_string(l) + ": " + p.to_string()};
        }
      }
    }
  }
  return {};
}

VerificationResult verify_integrality(const OrdinaryTable& table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      for (const auto& [l, c] : table.at(i, j)) {
        if (c.get_den() != 1) {
          return {false, std::to_string(i) + "," + std::to_string(j) + " -> " + std::to_string(l) + ": " + c.get_str()};
        }
      }
    }
  }
  return {};
}

VerificationResult verify_positivity(const StructureTable& table, const WeightedRing& ring) {
  const int y0_index = ring.lattice().n() - 1;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      for (const auto& [l, p] : table.at(i, j)) {
        Polynomial g = change_basis_positivity(p, ring);
        bool ok = g.degree_in(y0_index) == 0;
        for (const auto& [m, c] : g.terms()) ok = ok && c >= 0;
        if (!ok) {
          return {false, std::to_string(i) + "," + std::to_string(j) + " -> " + std::to_string(l) + ": " + g.to_string()};
        }
      }
    }
  }
  return {};
}

}  // namespace wgo
