#include "wgo/plucker.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <numeric>
#include <random>
#include <set>

#include "wgo/parallel.hpp"

namespace wgo {

namespace {

std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Integer determinant(std::vector<std::vector<Integer>> a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (a[c][c] == 0) {
      std::size_t r = c + 1;
      while (r < n && a[r][c] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
      }
    }
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t pair_id(std::size_t a, std::size_t b, std::size_t m) {
  if (a > b) std::swap(a, b);
  return a * m + b;
}

using SparseRow = std::map<std::size_t, Rational>;

int moved_points(const Permutation& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] != i;
  return c;
}

void sort_by_support(std::vector<Permutation>& perms) {
  std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
    int ma = moved_points(a), mb = moved_points(b);
    return ma != mb ? ma < mb : a < b;
  });
}

}  // namespace

PermutationScope parse_scope(const std::string& name) {
  if (name == "identity") return PermutationScope::kIdentity;
  if (name == "sn" || name == "sn-induced" || name == "S_n") return PermutationScope::kSnInduced;
  if (name == "full") return PermutationScope::kFull;
  throw ParameterError("unknown permutation scope: " + name);
}

std::string scope_name(PermutationScope scope) {
  switch (scope) {
    case PermutationScope::kIdentity: return "identity";
    case PermutationScope::kSnInduced: return "sn-induced";
    case PermutationScope::kFull: return "full";
  }
  return "?";
}

std::string PluckerRelation::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " ";
    out += t.sign > 0 ? "+" : "-";
    if (std::abs(t.sign) != 1) out += std::to_string(std::abs(t.sign)) + "*";
    out += "z" + std::to_string(t.r) + "*z" + std::to_string(t.s);
  }
  return out;
}

Integer PluckerRelation::evaluate(std::span<const Integer> z) const {
  Integer v = 0;
  for (const auto& t : terms) v += t.sign * z[t.r] * z[t.s];
  return v;
}

Rational PluckerRelation::evaluate(std::span<const Rational> z) const {
  Rational v = 0;
  for (const auto& t : terms) v += t.sign * z[t.r] * z[t.s];
  return v;
}

std::vector<PluckerRelation> generate_relations(int k, int n) {
  SymbolLattice lattice(k, n);
  std::vector<PluckerRelation> out;
  std::set<std::vector<std::tuple<int, std::size_t, std::size_t>>> seen;
  for (const auto& fixed : subsets(n, k - 1)) {
    for (const auto& free : subsets(n, k + 1)) {
      std::map<std::pair<std::size_t, std::size_t>, int> merged;
      for (int j = 0; j <= k; ++j) {
        int lj = free[static_cast<std::size_t>(j)];
        if (std::find(fixed.begin(), fixed.end(), lj) != fixed.end()) continue;
        std::vector<int> left = fixed;
        left.push_back(lj);
        int above = static_cast<int>(std::count_if(fixed.begin(), fixed.end(), [&](int x) { return x > lj; }));
        std::sort(left.begin(), left.end());
        std::vector<int> right;
        for (int x : free) {
          if (x != lj) right.push_back(x);
        }
        std::size_t r = lattice.index_of(SchubertSymbol(left, n));
        std::size_t s = lattice.index_of(SchubertSymbol(right, n));
        int sign = ((j + above) % 2 == 0) ? 1 : -1;
        merged[{std::min(r, s), std::max(r, s)}] += sign;
      }
      PluckerRelation rel;
      for (const auto& [pair, c] : merged) {
        if (c != 0) rel.terms.push_back({c, pair.first, pair.second});
      }
      if (rel.terms.empty()) continue;
      if (rel.terms.front().sign < 0) {
        for (auto& t : rel.terms) t.sign = -t.sign;
      }
      std::vector<std::tuple<int, std::size_t, std::size_t>> key;
      for (const auto& t : rel.terms) key.emplace_back(t.sign, t.r, t.s);
      if (!seen.insert(key).second) continue;
      rel.fixed = fixed;
      rel.free = free;
      out.push_back(std::move(rel));
    }
  }
  return out;
}

PluckerSpace::PluckerSpace(int k, int n) : lattice_(k, n), relations_(generate_relations(k, n)) {
  for (int seed = 1; seed <= kSampleCount; ++seed) samples_.push_back(sample_plucker_point(static_cast<uint64_t>(seed)));
  const std::size_t m = size();
  // Reduced row echelon form of the relation span.
  std::vector<SparseRow> rows;
  for (const auto& rel : relations_) {
    SparseRow row;
    for (const auto& t : rel.terms) row[pair_id(t.r, t.s, m)] += t.sign;
    rows.push_back(std::move(row));
  }
  std::vector<SparseRow> basis;
  for (auto& row : rows) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto it = row.find(span_pivots_[b]);
      if (it == row.end()) continue;
      Rational f = it->second;
      for (const auto& [col, v] : basis[b]) {
        row[col] -= f * v;
        if (row[col] == 0) row.erase(col);
      }
    }
    if (row.empty()) continue;
    auto [pivot, pv] = *row.begin();
    Rational inv = 1 / pv;
    for (auto& [col, v] : row) v *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto it = basis[b].find(pivot);
      if (it == basis[b].end()) continue;
      Rational f = it->second;
      for (const auto& [col, v] : row) {
        basis[b][col] -= f * v;
        if (basis[b][col] == 0) basis[b].erase(col);
      }
    }
    basis.push_back(row);
    span_pivots_.push_back(pivot);
  }
  for (const auto& row : basis) span_rows_.emplace_back(row.begin(), row.end());
}

bool PluckerSpace::is_plucker_point(std::span<const Rational> z) const {
  if (z.size() != size()) throw ParameterError("coordinate vector has wrong length");
  if (std::all_of(z.begin(), z.end(), [](const Rational& x) { return x == 0; })) {
    throw ParameterError("zero vector is not a point");
  }
  return std::all_of(relations_.begin(), relations_.end(), [&](const PluckerRelation& r) { return r.evaluate(z) == 0; });
}

std::vector<Integer> PluckerSpace::sample_plucker_point(uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-6, 6);
  const auto kk = static_cast<std::size_t>(k());
  while (true) {
    std::vector<std::vector<Integer>> matrix(kk, std::vector<Integer>(static_cast<std::size_t>(n())));
    for (auto& row : matrix) {
      for (auto& x : row) x = dist(rng);
    }
    std::vector<Integer> z(size());
    bool nonzero = false;
    for (std::size_t i = 0; i < size(); ++i) {
      std::vector<std::vector<Integer>> minor(kk, std::vector<Integer>(kk));
      for (std::size_t r = 0; r < kk; ++r) {
        for (std::size_t c = 0; c < kk; ++c) minor[r][c] = matrix[r][static_cast<std::size_t>(lattice_[i][c] - 1)];
      }
      z[i] = determinant(std::move(minor));
      nonzero = nonzero || z[i] != 0;
    }
    if (nonzero) return z;
  }
}

bool PluckerSpace::validate(std::span<const Integer> b) const {
  if (b.size() != size()) return false;
  if (std::any_of(b.begin(), b.end(), [](const Integer& x) { return x < 1; })) return false;
  for (const auto& rel : relations_) {
    const auto& t0 = rel.terms.front();
    Integer sum = b[t0.r] + b[t0.s];
    for (const auto& t : rel.terms) {
      if (b[t.r] + b[t.s] != sum) return false;
    }
  }
  return true;
}

void PluckerSpace::require_valid(std::span<const Integer> b) const {
  if (b.size() != size()) {
    throw InvalidWeightVector("weight vector must have length " + std::to_string(size()));
  }
  for (const auto& x : b) {
    if (x < 1) throw InvalidWeightVector("weights must be positive integers");
  }
  for (const auto& rel : relations_) {
    const auto& t0 = rel.terms.front();
    for (const auto& t : rel.terms) {
      if (b[t.r] + b[t.s] != b[t0.r] + b[t0.s]) {
        throw InvalidWeightVector("pair sums differ on relation " + rel.to_string());
      }
    }
  }
}

WASolution PluckerSpace::solve_wa(std::span<const Integer> b) const {
  require_valid(b);
  const int kk = k(), nn = n();
  std::vector<int> base;  // (2, ..., k+1)
  for (int s = 2; s <= kk + 1; ++s) base.push_back(s);
  auto idx = [&](std::vector<int> e) {
    std::sort(e.begin(), e.end());
    return lattice_.index_of(SchubertSymbol(std::move(e), nn));
  };
  // diff[j] = w_1 - w_j from a symbol containing 1 but not j and its image under 1 -> j.
  std::vector<Integer> diff(static_cast<std::size_t>(nn) + 1, 0);
  for (int j = 2; j <= nn; ++j) {
    std::vector<int> rest;
    for (int s = 2; s <= kk + 1 && static_cast<int>(rest.size()) < kk - 1; ++s) {
      if (s != j) rest.push_back(s);
    }
    std::vector<int> with_one = rest, with_j = rest;
    with_one.push_back(1);
    with_j.push_back(j);
    diff[static_cast<std::size_t>(j)] = b[idx(with_one)] - b[idx(with_j)];
  }
  Integer rhs = b[idx(base)];
  for (int j = 2; j <= kk + 1; ++j) rhs += diff[static_cast<std::size_t>(j)];
  Integer r = rhs % kk;
  if (r < 0) r += kk;
  int a = r == 0 ? kk : static_cast<int>(r.get_si());
  WASolution sol;
  sol.a = a;
  Integer w1 = (rhs - a) / kk;
  sol.W.push_back(w1);
  for (int j = 2; j <= nn; ++j) sol.W.push_back(w1 - diff[static_cast<std::size_t>(j)]);
  if (weights_from_wa(sol) != WeightVector(b.begin(), b.end())) {
    throw InvalidWeightVector("no integral (W, a) reproduces the weight vector");
  }
  return sol;
}

WeightVector PluckerSpace::weights_from_wa(const WASolution& wa) const {
  WeightVector b(size());
  for (std::size_t i = 0; i < size(); ++i) {
    b[i] = wa.a;
    for (int s : lattice_[i].entries()) b[i] += wa.W[static_cast<std::size_t>(s - 1)];
  }
  return b;
}

bool PluckerSpace::screen(std::span<const std::size_t> sigma, std::vector<int>& signs) const {
  const std::size_t m = size();
  const std::size_t words = (m + 64) / 64;  // one extra bit column for the right-hand side
  std::vector<std::vector<uint64_t>> eqs;
  auto set_bit = [](std::vector<uint64_t>& row, std::size_t bit) { row[bit / 64] ^= uint64_t{1} << (bit % 64); };
  for (const auto& rel : relations_) {
    const std::size_t T = rel.terms.size();
    std::vector<std::vector<Integer>> values(samples_.size(), std::vector<Integer>(T));
    for (std::size_t p = 0; p < samples_.size(); ++p) {
      for (std::size_t j = 0; j < T; ++j) {
        const auto& t = rel.terms[j];
        values[p][j] = t.sign * samples_[p][sigma[t.r]] * samples_[p][sigma[t.s]];
      }
    }
    std::vector<uint64_t> patterns;
    for (uint64_t pat = 0; pat < (uint64_t{1} << (T - 1)); ++pat) {
      bool ok = true;
      for (std::size_t p = 0; p < samples_.size() && ok; ++p) {
        Integer sum = values[p][0];
        for (std::size_t j = 1; j < T; ++j) {
          if ((pat >> (j - 1)) & 1u) {
            sum -= values[p][j];
          } else {
            sum += values[p][j];
          }
        }
        ok = sum == 0;
      }
      if (ok) patterns.push_back(pat);
    }
    if (patterns.empty()) return false;
    if (patterns.size() > 1) continue;
    const auto& t0 = rel.terms[0];
    for (std::size_t j = 1; j < T; ++j) {
      const auto& t = rel.terms[j];
      std::vector<uint64_t> row(words, 0);
      set_bit(row, t.r);
      set_bit(row, t.s);
      set_bit(row, t0.r);
      set_bit(row, t0.s);
      if ((patterns[0] >> (j - 1)) & 1u) set_bit(row, m);
      eqs.push_back(std::move(row));
    }
  }
  // Gaussian elimination over GF(2).
  auto bit = [](const std::vector<uint64_t>& row, std::size_t b) { return (row[b / 64] >> (b % 64)) & 1u; };
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < eqs.size(); ++col) {
    std::size_t piv = rank;
    while (piv < eqs.size() && !bit(eqs[piv], col)) ++piv;
    if (piv == eqs.size()) continue;
    std::swap(eqs[piv], eqs[rank]);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      if (r != rank && bit(eqs[r], col)) {
        for (std::size_t w = 0; w < words; ++w) eqs[r][w] ^= eqs[rank][w];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < eqs.size(); ++r) {
    if (bit(eqs[r], m)) return false;
  }
  signs.assign(m, 1);
  for (std::size_t r = 0; r < rank; ++r) {
    if (bit(eqs[r], m)) signs[pivots[r]] = -1;
  }
  return true;
}

bool PluckerSpace::confirm(std::span<const std::size_t> sigma, std::span<const int> signs) const {
  const std::size_t m = size();
  for (const auto& rel : relations_) {
    SparseRow v;
    for (const auto& t : rel.terms) {
      std::size_t id = pair_id(sigma[t.r], sigma[t.s], m);
      v[id] += t.sign * signs[t.r] * signs[t.s];
      if (v[id] == 0) v.erase(id);
    }
    for (std::size_t b = 0; b < span_rows_.size() && !v.empty(); ++b) {
      auto it = v.find(span_pivots_[b]);
      if (it == v.end()) continue;
      Rational f = it->second;
      for (const auto& [col, x] : span_rows_[b]) {
        v[col] -= f * x;
        if (v[col] == 0) v.erase(col);
      }
    }
    if (!v.empty()) return false;
  }
  return true;
}

std::optional<SignedPermutation> PluckerSpace::is_plucker_permutation(std::span<const std::size_t> sigma) const {
  const std::size_t m = size();
  if (sigma.size() != m) throw ParameterError("permutation has wrong length");
  std::vector<bool> hit(m, false);
  for (std::size_t x : sigma) {
    if (x >= m || hit[x]) throw ParameterError("not a permutation");
    hit[x] = true;
  }
  std::vector<int> signs;
  if (!screen(sigma, signs)) return std::nullopt;
  if (!confirm(sigma, signs)) return std::nullopt;
  return SignedPermutation{Permutation(sigma.begin(), sigma.end()), std::move(signs)};
}

std::vector<Permutation> PluckerSpace::sn_induced_permutations() const {
  if (n() > 9) throw CapacityError("S_n-induced scope limited to n <= 9");
  std::vector<int> phi(static_cast<std::size_t>(n()));
  std::iota(phi.begin(), phi.end(), 1);
  std::set<Permutation> out;
  do {
    Permutation sigma(size());
    for (std::size_t i = 0; i < size(); ++i) {
      std::vector<int> img;
      for (int s : lattice_[i].entries()) img.push_back(phi[static_cast<std::size_t>(s - 1)]);
      std::sort(img.begin(), img.end());
      sigma[i] = lattice_.index_of(SchubertSymbol(std::move(img), n()));
    }
    out.insert(std::move(sigma));
  } while (std::next_permutation(phi.begin(), phi.end()));
  return {out.begin(), out.end()};
}

std::vector<SignedPermutation> PluckerSpace::enumerate_permutations(PermutationScope scope, int jobs) const {
  std::vector<SignedPermutation> out;
  const std::size_t m = size();
  if (scope == PermutationScope::kIdentity) {
    Permutation id(m);
    std::iota(id.begin(), id.end(), 0);
    out.push_back(*is_plucker_permutation(id));
    return out;
  }
  if (scope == PermutationScope::kSnInduced) {
    auto cands = sn_induced_permutations();
    std::vector<std::optional<SignedPermutation>> res(cands.size());
    parallel_for(cands.size(), jobs, [&](std::size_t c) { res[c] = is_plucker_permutation(cands[c]); });
    for (auto& r : res) {
      if (!r) throw std::logic_error("S_n-induced permutation failed the Plücker predicate");
      out.push_back(std::move(*r));
    }
    return out;
  }
  if (!full_scope_allowed()) {
    throw CapacityError("full permutation scope limited to C(n,k) <= " + std::to_string(kFullScopeLimit));
  }
  // One task per value of sigma(0).
  std::vector<std::vector<SignedPermutation>> chunks(m);
  parallel_for(m, jobs, [&](std::size_t first) {
    Permutation rest;
    for (std::size_t x = 0; x < m; ++x) {
      if (x != first) rest.push_back(x);
    }
    Permutation sigma(m);
    do {
      sigma[0] = first;
      std::copy(rest.begin(), rest.end(), sigma.begin() + 1);
      if (auto sp = is_plucker_permutation(sigma)) chunks[first].push_back(std::move(*sp));
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  for (auto& c : chunks) {
    for (auto& sp : c) out.push_back(std::move(sp));
  }
  return out;
}

const std::vector<Permutation>& PluckerSpace::search_order() const {
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (search_ready_) return search_order_;
  Permutation id(size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> order{id};
  std::set<Permutation> seen{id};
  std::vector<Permutation> stage;
  if (n() <= 9) {
    for (auto& p : sn_induced_permutations()) {
      if (seen.insert(p).second) stage.push_back(std::move(p));
    }
    sort_by_support(stage);
    order.insert(order.end(), stage.begin(), stage.end());
  }
  if (full_scope_allowed()) {
    stage.clear();
    for (auto& sp : enumerate_permutations(PermutationScope::kFull)) {
      if (seen.insert(sp.sigma).second) stage.push_back(std::move(sp.sigma));
    }
    sort_by_support(stage);
    order.insert(order.end(), stage.begin(), stage.end());
  }
  search_order_ = std::move(order);
  search_ready_ = true;
  return search_order_;
}

Integer gcd_of(std::span<const Integer> b) {
  Integer g = 0;
  for (const auto& x : b) g = gcd(g, x);
  return g;
}

bool is_primitive(std::span<const Integer> b) { return gcd_of(b) == 1; }

WeightVector apply_permutation(std::span<const std::size_t> sigma, std::span<const Integer> b) {
  if (sigma.size() != b.size()) throw ParameterError("permutation and weight vector lengths differ");
  WeightVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[sigma[i]];
  return out;
}

WeightVector apply_plucker_permutation(const PluckerSpace& space, std::span<const std::size_t> sigma,
                                       std::span<const Integer> b) {
  space.require_valid(b);
  if (!space.is_plucker_permutation(sigma)) throw ParameterError("permutation is not a Plücker permutation");
  return apply_permutation(sigma, b);
}

bool is_descending_chain(std::span<const Integer> b) {
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (!mpz_divisible_p(b[i - 1].get_mpz_t(), b[i].get_mpz_t())) return false;
  }
  return true;
}

std::optional<Permutation> is_divisive(const PluckerSpace& space, std::span<const Integer> b) {
  space.require_valid(b);
  for (const auto& sigma : space.search_order()) {
    if (is_descending_chain(apply_permutation(sigma, b))) return sigma;
  }
  return std::nullopt;
}

bool is_normalized(std::span<const Integer> b) {
  if (b.size() < 2) return true;
  for (std::size_t e = 0; e < b.size(); ++e) {
    Integer g = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i != e) g = gcd(g, b[i]);
    }
    if (g != 1) return false;
  }
  return true;
}

WeightVector normalize(std::span<const Integer> b) {
  WeightVector out(b.begin(), b.end());
  if (out.empty()) return out;
  Integer g = gcd_of(out);
  for (auto& x : out) x /= g;
  bool changed = out.size() > 1;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < out.size(); ++e) {
      Integer h = 0;
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (i != e) h = gcd(h, out[i]);
      }
      if (h > 1) {
        for (std::size_t i = 0; i < out.size(); ++i) {
          if (i != e) out[i] /= h;
        }
        changed = true;
      }
    }
  }
  return out;
}

std::optional<Equivalence> equivalence(const PluckerSpace& space, std::span<const Integer> b,
                                       std::span<const Integer> c) {
  space.require_valid(b);
  space.require_valid(c);
  for (const auto& sigma : space.search_order()) {
    WeightVector sb = apply_permutation(sigma, b);
    bool ok = true;
    for (std::size_t i = 0; i < sb.size() && ok; ++i) ok = c[i] * sb[0] == sb[i] * c[0];
    if (ok) {
      Rational r(c[0], sb[0]);
      r.canonicalize();
      return Equivalence{sigma, r};
    }
  }
  return std::nullopt;
}

PluckerWeightVector::PluckerWeightVector(const PluckerSpace& space, WeightVector b)
    : space_(&space), b_(std::move(b)) {
  valid_ = space.validate(b_);
  primitive_ = valid_ && is_primitive(b_);
  normalized_ = valid_ && is_normalized(b_);
}

const std::optional<Permutation>& PluckerWeightVector::divisive_witness() const {
  if (!witness_) witness_ = valid_ ? is_divisive(*space_, b_) : std::nullopt;
  return *witness_;
}

std::string permutation_string(std::span<const std::size_t> sigma) {
  std::string out = "[";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sigma[i]);
  }
  return out + "]";
}

}  // namespace wgo
