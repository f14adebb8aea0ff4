#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wgo/exactpoly.hpp"

using namespace wgo;

namespace {

Polynomial Y(std::vector<int> entries, int n) { return linear_form_Y(SchubertSymbol(std::move(entries), n)); }

Polynomial P(std::string_view s) { return Polynomial::parse(s); }

}  // namespace

TEST_SUITE("exactpoly") {
  TEST_CASE("linear forms") {
    const auto y1 = Polynomial::y(1), y2 = Polynomial::y(2), y3 = Polynomial::y(3), y4 = Polynomial::y(4);
    CHECK(Y({1, 2}, 4) == y1 + y2);
    CHECK(Y({3, 4}, 4) - Y({1, 2}, 4) == y3 + y4 - y1 - y2);
    CHECK(Y({1, 3}, 4) - Y({2, 3}, 4) * Rational(2) == y1 - 2 * y2 - y3);
  }

  TEST_CASE("arithmetic examples") {
    const auto y1 = Polynomial::y(1), y2 = Polynomial::y(2), y3 = Polynomial::y(3);
    CHECK((y1 - y2) * (y1 + y2) == y1 * y1 - y2 * y2);
    CHECK((y1 + y3).substitute(0, y1 - Rational(1, 2) * (y2 + y3)) == y1 - Rational(1, 2) * y2 + Rational(1, 2) * y3);
    CHECK(((y1 + y2) * Polynomial(0)).is_zero());
    CHECK((y1 - y2).pow(3) == (y1 - y2) * (y1 - y2) * (y1 - y2));
  }

  TEST_CASE("exact division examples") {
    const auto y1 = Polynomial::y(1), y2 = Polynomial::y(2), y3 = Polynomial::y(3);
    auto q = divide_exact(y1 * y1 - y2 * y2, y1 - y2);
    REQUIRE(q);
    CHECK(*q == y1 + y2);
    CHECK_FALSE(divide_exact(y1 - y3, y1 - y2));
    auto z = divide_exact(Polynomial(), y1 - y2);
    REQUIRE(z);
    CHECK(z->is_zero());
    CHECK_THROWS_AS(divide_exact(y1, Polynomial()), std::domain_error);
  }

  TEST_CASE("canonical text") {
    CHECK(P("y1 - 1/2*y2").to_string() == "y1 - 1/2*y2");
    CHECK(P("y2 + y1").to_string() == "y1 + y2");
    CHECK(Polynomial().to_string() == "0");
    CHECK(P("3").to_string() == "3");
    CHECK((Polynomial::y(1) * Polynomial::y(1) - Polynomial::y(2)).to_string() == "y1^2 - y2");
  }

  TEST_CASE("expand_linear_product examples") {
    using Factors = std::vector<std::pair<Polynomial, Rational>>;
    auto a = expand_linear_product(Factors{{Polynomial::y(3), Rational(5)}});
    REQUIRE(a.size() == 2);
    CHECK(a[0] == Polynomial::y(3));
    CHECK(a[1] == Polynomial(5));
    auto b = expand_linear_product(Factors{{Polynomial::y(1), Rational(1)}, {Polynomial::y(2), Rational(1)}});
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Polynomial::y(1) * Polynomial::y(2));
    CHECK(b[1] == Polynomial::y(1) + Polynomial::y(2));
    CHECK(b[2] == Polynomial(1));
    auto e = expand_linear_product(Factors{});
    REQUIRE(e.size() == 1);
    CHECK(e[0] == Polynomial(1));
  }

  TEST_CASE("property: ring axioms") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 150; ++trial) {
      auto p = test::random_polynomial(rng, 5, 3, 5);
      auto q = test::random_polynomial(rng, 5, 3, 5);
      auto r = test::random_polynomial(rng, 5, 3, 5);
      CHECK((p + q) + r == p + (q + r));
      CHECK(p + q == q + p);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * q == q * p);
      CHECK(p * (q + r) == p * q + p * r);
      CHECK((p - p).is_zero());
      CHECK(p * Polynomial(1) == p);
      CHECK(P(p.to_string()) == p);
    }
  }

  TEST_CASE("property: divide_exact(p*q, q) = p") {
    std::mt19937_64 rng(2);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
      auto p = test::random_polynomial(rng, 5, 4, 4);
      auto q = test::random_polynomial(rng, 5, 2, 3);
      if (q.is_zero()) continue;
      auto r = divide_exact(p * q, q);
      REQUIRE(r);
      CHECK(*r == p);
      // adding a term of degree 0 breaks divisibility unless q is constant
      if (!q.is_constant()) CHECK_FALSE(divide_exact(p * q + Polynomial(1), q));
      ++checked;
    }
    CHECK(checked >= 100);
  }

  TEST_CASE("property: expand_linear_product equals the product in B") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 120; ++trial) {
      const int t = std::uniform_int_distribution<int>(0, 5)(rng);
      std::vector<std::pair<Polynomial, Rational>> factors;
      Polynomial naive(1);
      for (int s = 0; s < t; ++s) {
        auto a = test::random_polynomial(rng, 4, 1, 3);
        Rational b(std::uniform_int_distribution<int>(-4, 4)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
        b.canonicalize();
        naive *= a + Polynomial::formal() * b;
        factors.emplace_back(a, b);
      }
      auto alpha = expand_linear_product(factors);
      REQUIRE(alpha.size() == static_cast<std::size_t>(t) + 1);
      Polynomial rebuilt;
      for (std::size_t s = 0; s < alpha.size(); ++s) {
        CHECK_FALSE(alpha[s].uses_formal());
        CHECK(alpha[s] == naive.formal_coefficient(static_cast<int>(s)));
        rebuilt += alpha[s] * Polynomial::formal().pow(static_cast<unsigned>(s));
      }
      CHECK(rebuilt == naive);
    }
  }

  TEST_CASE("property: rewrite_in_basis inverts composition") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4;
      std::vector<Polynomial> basis;
      // unit lower triangular forms are always a basis
      for (int t = 1; t <= n; ++t) {
        Polynomial g = Polynomial::y(t);
        for (int s = t + 1; s <= n; ++s) g += Polynomial::y(s) * Rational(std::uniform_int_distribution<int>(-3, 3)(rng));
        basis.push_back(g);
      }
      auto p = test::random_polynomial(rng, n, 3, 4);
      auto g = rewrite_in_basis(p, basis, n);
      CHECK(g.compose(basis) == p);
    }
    std::vector<Polynomial> singular{Polynomial::y(1), Polynomial::y(1)};
    CHECK_THROWS(rewrite_in_basis(Polynomial::y(2), singular, 2));
  }

  TEST_CASE("degree queries") {
    auto p = P("y1^2*y2 - 3*y3^3");
    CHECK(p.degree() == 3);
    CHECK(p.homogeneous_degree() == std::optional<int>(3));
    CHECK_FALSE((p + Polynomial::y(1)).homogeneous_degree());
    CHECK(p.degree_in(0) == 2);
    CHECK(p.max_y() == 3);
    CHECK(p.is_integral());
    CHECK_FALSE(P("1/2*y1").is_integral());
  }
}
