#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgo/combinatorics.hpp"

namespace wgo {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kMaxVars = 16;
// y_1..y_15 live at indices 0..14; the formal variable B at index 15.
inline constexpr int kMaxY = kMaxVars - 1;
inline constexpr int kFormalIndex = kMaxVars - 1;

struct Monomial {
  std::array<uint8_t, kMaxVars> exp{};

  int degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic with y1 > y2 > ... ; a map keyed with this puts the leading term first.
struct GrLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrLexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  // y_index with index starting at 1.
  static Polynomial y(int index);
  static Polynomial formal();
  static Polynomial monomial(const Monomial& m, const Rational& c);
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  // Highest total degree, -1 for zero.
  int degree() const;
  // Degree if homogeneous (zero counts as homogeneous of any degree, reported as -1).
  std::optional<int> homogeneous_degree() const;
  int degree_in(int var_index) const;
  bool uses_formal() const { return degree_in(kFormalIndex) > 0; }
  bool is_integral() const;
  // Largest y index used (1-based), 0 if none.
  int max_y() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, long c) { return a *= Rational(c); }
  friend Polynomial operator*(long c, Polynomial a) { return a *= Rational(c); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const;
  // Replace variable (0-based index) by a polynomial.
  Polynomial substitute(int var_index, const Polynomial& image) const;
  // Simultaneous substitution: variable v -> images[v] for v < images.size(), others kept.
  Polynomial compose(std::span<const Polynomial> images) const;
  // Coefficient of B^s as a polynomial in the y variables.
  Polynomial formal_coefficient(int s) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

// p / q when q divides p exactly; std::nullopt otherwise. Throws on q == 0.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

// Y_lambda = sum of y_s over entries s.
Polynomial linear_form_Y(const SchubertSymbol& symbol);

// alpha_0..alpha_t with prod_s (a_s + b_s B) = sum_s alpha_s B^s.
std::vector<Polynomial> expand_linear_product(std::span<const std::pair<Polynomial, Rational>> factors);

// Linear coefficients of a degree <= 1 polynomial: constant at index 0, y_v at index v.
std::vector<Rational> linear_coefficients(const Polynomial& p, int nvars);

// Rewrite p in new coordinates g_1..g_N given as linear forms spanning y_1..y_N.
// The result uses y_t as the name of g_t. Throws if the forms are not a basis.
Polynomial rewrite_in_basis(const Polynomial& p, std::span<const Polynomial> basis, int nvars);

}  // namespace wgo
