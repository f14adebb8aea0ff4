#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "wgo/plucker.hpp"

using namespace wgo;

namespace {

WeightVector V(std::initializer_list<long> xs) {
  WeightVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Integer det(std::vector<std::vector<Integer>> a) {
  // cofactor expansion; the matrices here are at most 3x3
  const std::size_t k = a.size();
  if (k == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Integer> row;
      for (std::size_t cc = 0; cc < k; ++cc) {
        if (cc != c) row.push_back(a[r][cc]);
      }
      minor.push_back(row);
    }
    Integer term = a[0][c] * det(minor);
    total += c % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

// Maximal minors of a random integer k x n matrix, ordered like the lattice.
std::vector<Rational> random_point(const PluckerSpace& space, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<std::vector<Integer>> m(static_cast<std::size_t>(space.k()),
                                      std::vector<Integer>(static_cast<std::size_t>(space.n())));
  for (auto& row : m) {
    for (auto& x : row) x = d(rng);
  }
  std::vector<Rational> z;
  for (const auto& s : space.lattice().symbols()) {
    std::vector<std::vector<Integer>> sub;
    for (const auto& row : m) {
      std::vector<Integer> r;
      for (int c : s.entries()) r.push_back(row[static_cast<std::size_t>(c - 1)]);
      sub.push_back(r);
    }
    z.emplace_back(det(sub));
  }
  return z;
}

bool nonzero(const std::vector<Rational>& z) {
  return std::any_of(z.begin(), z.end(), [](const Rational& x) { return x != 0; });
}

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a o b)(i) = a(b(i))
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = i;
  return out;
}

}  // namespace

TEST_SUITE("plucker") {
  TEST_CASE("relations") {
    auto r24 = generate_relations(2, 4);
    REQUIRE(r24.size() == 1);
    CHECK(r24[0].to_string() == "+z0*z5 -z1*z4 +z2*z3");
    CHECK(generate_relations(1, 5).empty());
    CHECK(generate_relations(2, 5).size() == 5);
    for (const auto& rel : generate_relations(3, 6)) CHECK(rel.terms.size() >= 2);
  }

  TEST_CASE("(2,n) relations are the three pairings of each 4-subset") {
    for (int n = 4; n <= 7; ++n) {
      SymbolLattice lat(2, n);
      auto rels = generate_relations(2, n);
      CHECK(static_cast<long long>(rels.size()) == test::binomial(n, 4));
      std::set<std::set<int>> supports;
      for (const auto& rel : rels) {
        REQUIRE(rel.terms.size() == 3);
        std::set<int> support;
        for (const auto& t : rel.terms) {
          for (int e : lat[t.r].entries()) support.insert(e);
          for (int e : lat[t.s].entries()) support.insert(e);
          CHECK(lat[t.r].intersection_size(lat[t.s]) == 0);
        }
        CHECK(support.size() == 4);
        supports.insert(support);
      }
      CHECK(supports.size() == rels.size());
    }
  }

  TEST_CASE("Plücker points") {
    PluckerSpace s(2, 4);
    std::vector<Rational> e0(6, 0);
    e0[0] = 1;
    CHECK(s.is_plucker_point(e0));
    CHECK_FALSE(s.is_plucker_point(std::vector<Rational>(6, 1)));
    std::vector<Rational> z{1, 1, 1, 1, 0, 1};
    CHECK_FALSE(s.is_plucker_point(z));
    CHECK_THROWS_AS(s.is_plucker_point(std::vector<Rational>(6, 0)), ParameterError);
    for (uint64_t seed = 0; seed < 20; ++seed) {
      auto p = s.sample_plucker_point(seed);
      std::vector<Rational> q(p.begin(), p.end());
      CHECK(s.is_plucker_point(q));
    }
  }

  TEST_CASE("property: minors of random matrices satisfy every relation") {
    std::mt19937_64 rng(5);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}, {2, 6}}) {
      PluckerSpace s(k, n);
      for (int trial = 0; trial < 40; ++trial) {
        auto z = random_point(s, rng);
        if (!nonzero(z)) continue;
        CHECK(s.is_plucker_point(z));
      }
    }
  }

  TEST_CASE("validity examples") {
    PluckerSpace s(2, 4);
    CHECK(s.validate(V({5, 1, 4, 3, 6, 2})));
    CHECK(s.validate(V({1, 1, 1, 1, 1, 1})));
    CHECK_FALSE(s.validate(V({1, 1, 1, 1, 1, 2})));
    CHECK_FALSE(s.validate(V({1, 1, 1, 1, 1})));
    CHECK_FALSE(s.validate(V({0, 1, 1, 1, 1, 2})));
    CHECK_THROWS_AS(s.require_valid(V({1, 1, 1, 1, 1, 2})), InvalidWeightVector);
    CHECK(PluckerSpace(3, 6).validate(WeightVector(20, 1)));
  }

  TEST_CASE("solve_wa examples") {
    PluckerSpace s(2, 4);
    auto wa = s.solve_wa(V({5, 1, 4, 3, 6, 2}));
    CHECK(wa.W == V({1, 3, -1, 2}));
    CHECK(wa.a == 1);
    auto ones = s.solve_wa(V({1, 1, 1, 1, 1, 1}));
    CHECK(ones.W == V({0, 0, 0, 0}));
    CHECK(ones.a == 1);
    // an integral solution with a = 2 exists
    auto two = s.solve_wa(V({5, 1, 4, 4, 7, 3}));
    CHECK(two.a == 2);
    CHECK(two.W == V({0, 3, -1, 2}));
    CHECK_THROWS_AS(s.solve_wa(V({1, 1, 1, 1, 1, 2})), InvalidWeightVector);
  }

  TEST_CASE("property: (W, a) round trip and orbit invariance") {
    std::mt19937_64 rng(6);
    int trials = 0;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}, {2, 6}}) {
      PluckerSpace s(k, n);
      for (int t = 0; t < 40; ++t, ++trials) {
        WASolution wa;
        wa.a = std::uniform_int_distribution<int>(1, k)(rng);
        for (int i = 0; i < n; ++i) wa.W.emplace_back(std::uniform_int_distribution<int>(-7, 7)(rng));
        // b_lambda = a + sum of w over the entries of lambda, computed here directly
        WeightVector b;
        for (const auto& sym : s.lattice().symbols()) {
          Integer x = wa.a;
          for (int e : sym.entries()) x += wa.W[static_cast<std::size_t>(e - 1)];
          b.push_back(x);
        }
        CHECK(s.weights_from_wa(wa) == b);
        bool positive = std::all_of(b.begin(), b.end(), [](const Integer& x) { return x > 0; });
        if (!positive) continue;
        CHECK(s.validate(b));
        auto back = s.solve_wa(b);
        CHECK(back.a >= 1);
        CHECK(back.a <= k);
        CHECK(s.weights_from_wa(back) == b);
        // the weighted torus orbit t^b z stays on the cone
        auto z = s.sample_plucker_point(static_cast<uint64_t>(t));
        for (int tt : {2, 3}) {
          std::vector<Rational> moved;
          for (std::size_t i = 0; i < z.size(); ++i) {
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(tt), b[i].get_ui());
            moved.emplace_back(scale * z[i]);
          }
          CHECK(s.is_plucker_point(moved));
        }
      }
    }
    CHECK(trials >= 100);
  }

  TEST_CASE("permutation counts and sign witnesses at (2,4)") {
    PluckerSpace s(2, 4);
    auto full = s.enumerate_permutations(PermutationScope::kFull);
    auto sn = s.enumerate_permutations(PermutationScope::kSnInduced);
    CHECK(full.size() == 48);
    CHECK(sn.size() == 24);
    Permutation id(6);
    std::iota(id.begin(), id.end(), 0);
    auto w = s.is_plucker_permutation(id);
    REQUIRE(w);
    CHECK(w->signs == std::vector<int>(6, 1));
    CHECK_FALSE(s.is_plucker_permutation(Permutation{1, 0, 2, 3, 4, 5}));

    std::mt19937_64 rng(7);
    for (const auto& p : full) {
      for (int trial = 0; trial < 3; ++trial) {
        auto z = random_point(s, rng);
        if (!nonzero(z)) continue;
        std::vector<Rational> moved;
        for (std::size_t i = 0; i < z.size(); ++i) moved.push_back(Rational(p.signs[i]) * z[p.sigma[i]]);
        CHECK(s.is_plucker_point(moved));
      }
    }
  }

  TEST_CASE("property: Plücker permutations form a group at (2,4)") {
    PluckerSpace s(2, 4);
    std::set<Permutation> group;
    for (const auto& p : s.enumerate_permutations(PermutationScope::kFull)) group.insert(p.sigma);
    std::set<Permutation> sn;
    for (const auto& p : s.enumerate_permutations(PermutationScope::kSnInduced)) sn.insert(p.sigma);
    CHECK(std::includes(group.begin(), group.end(), sn.begin(), sn.end()));
    for (const auto& a : group) {
      CHECK(group.count(inverse(a)) == 1);
      for (const auto& b : group) CHECK(group.count(compose(a, b)) == 1);
    }
    for (const auto& a : sn) {
      for (const auto& b : sn) CHECK(sn.count(compose(a, b)) == 1);
    }
    std::mt19937_64 rng(8);
    std::vector<Permutation> all(group.begin(), group.end());
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      auto c = compose(compose(all[pick(rng)], all[pick(rng)]), inverse(all[pick(rng)]));
      CHECK(s.is_plucker_permutation(c).has_value());
    }
  }

  TEST_CASE("scope limits") {
    PluckerSpace s(2, 5);
    CHECK_FALSE(s.full_scope_allowed());
    CHECK_THROWS_AS(s.enumerate_permutations(PermutationScope::kFull), CapacityError);
    CHECK(s.enumerate_permutations(PermutationScope::kSnInduced).size() == 120);
    CHECK(parse_scope("sn-induced") == PermutationScope::kSnInduced);
    CHECK_THROWS_AS(parse_scope("everything"), ParameterError);
  }

  TEST_CASE("permutation action, divisivity and equivalence") {
    PluckerSpace s(2, 4);
    WeightVector b = V({2, 6, 6, 2, 2, 6});
    REQUIRE(s.validate(b));
    Permutation swap{5, 1, 2, 3, 4, 0};
    CHECK(apply_plucker_permutation(s, swap, b) == V({6, 6, 6, 2, 2, 2}));
    auto w = is_divisive(s, b);
    REQUIRE(w);
    CHECK(*w == swap);
    CHECK(is_descending_chain(apply_permutation(*w, b)));
    Permutation id{0, 1, 2, 3, 4, 5};
    CHECK(is_divisive(s, V({1, 1, 1, 1, 1, 1})) == std::optional<Permutation>(id));
    CHECK_FALSE(is_divisive(s, V({5, 1, 4, 3, 6, 2})));
    CHECK_THROWS_AS(apply_plucker_permutation(s, Permutation{1, 0, 2, 3, 4, 5}, b), ParameterError);

    CHECK(normalize(V({2, 2, 2, 2, 2, 2})) == V({1, 1, 1, 1, 1, 1}));
    CHECK(is_normalized(V({5, 1, 4, 3, 6, 2})));
    WeightVector b3 = V({15, 3, 12, 9, 18, 6});
    auto e = equivalence(s, V({5, 1, 4, 3, 6, 2}), b3);
    REQUIRE(e);
    CHECK(e->sigma == id);
    CHECK(e->scale == 3);
    auto f = equivalence(s, b, V({6, 6, 6, 2, 2, 2}));
    REQUIRE(f);
    WeightVector mapped = apply_permutation(f->sigma, b);
    for (auto& x : mapped) x = x * f->scale.get_num() / f->scale.get_den();
    CHECK(mapped == V({6, 6, 6, 2, 2, 2}));
    CHECK_FALSE(equivalence(s, V({5, 1, 4, 3, 6, 2}), V({1, 1, 1, 1, 1, 1})));
  }

  TEST_CASE("property: normalization gives equivalent normalized vectors") {
    std::mt19937_64 rng(9);
    PluckerSpace s(2, 4);
    for (int trial = 0; trial < 100; ++trial) {
      auto b = test::random_valid_weights(s, rng);
      auto nb = normalize(b);
      CHECK(is_normalized(nb));
      CHECK(s.validate(nb));
      CHECK(normalize(nb) == nb);
      CHECK(equivalence(s, b, nb).has_value());
    }
  }

  TEST_CASE("property: primitive vectors stay primitive on closed adjacent sets") {
    std::mt19937_64 rng(10);
    int checked = 0;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}}) {
      PluckerSpace s(k, n);
      for (int trial = 0; trial < 80; ++trial) {
        auto b = test::random_valid_weights(s, rng, 9);
        if (!is_primitive(b)) continue;
        ++checked;
        for (std::size_t i = 0; i < s.size(); ++i) {
          WeightVector closed{b[i]};
          for (auto j : s.lattice().adjacent_set(i)) closed.push_back(b[j]);
          CHECK(is_primitive(closed));
        }
      }
    }
    CHECK(checked >= 100);
  }
}
