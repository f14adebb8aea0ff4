#include "wgo/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wgo {

int Monomial::degree() const {
  int d = 0;
  for (uint8_t e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int v = 0; v < kMaxVars; ++v) {
    if (exp[v] > other.exp[v]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int v = 0; v < kMaxVars; ++v) {
    int e = exp[v] + other.exp[v];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exp[v] = static_cast<uint8_t>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int v = 0; v < kMaxVars; ++v) m.exp[v] = static_cast<uint8_t>(exp[v] - other.exp[v]);
  return m;
}

bool GrLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int v = 0; v < kMaxVars; ++v) {
    if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v];
  }
  return false;
}

Polynomial::Polynomial(const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v != 0) terms_.emplace(Monomial{}, std::move(v));
}

Polynomial Polynomial::y(int index) {
  if (index < 1 || index > kMaxY) throw ParameterError("variable index out of range");
  Monomial m;
  m.exp[static_cast<std::size_t>(index - 1)] = 1;
  return monomial(m, 1);
}

Polynomial Polynomial::formal() {
  Monomial m;
  m.exp[kFormalIndex] = 1;
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

int Polynomial::degree_in(int var_index) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m.exp[static_cast<std::size_t>(var_index)]);
  return d;
}

bool Polynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

int Polynomial::max_y() const {
  int top = 0;
  for (const auto& [m, c] : terms_) {
    for (int v = 0; v < kMaxY; ++v) {
      if (m.exp[v]) top = std::max(top, v + 1);
    }
  }
  return top;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coef] : terms_) coef *= v;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(int var_index, const Polynomial& image) const {
  std::vector<Polynomial> images(static_cast<std::size_t>(var_index) + 1);
  for (int v = 0; v < var_index; ++v) {
    Monomial m;
    m.exp[static_cast<std::size_t>(v)] = 1;
    images[static_cast<std::size_t>(v)] = monomial(m, 1);
  }
  images[static_cast<std::size_t>(var_index)] = image;
  return compose(images);
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
  const std::size_t nimg = std::min<std::size_t>(images.size(), kMaxVars);
  std::vector<std::vector<Polynomial>> powers(nimg);
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial kept = m;
    Polynomial term(c);
    for (std::size_t v = 0; v < nimg; ++v) {
      unsigned e = m.exp[v];
      if (!e) continue;
      kept.exp[v] = 0;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(Polynomial(1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
      term *= pw[e];
    }
    out += term * monomial(kept, 1);
  }
  return out;
}

Polynomial Polynomial::formal_coefficient(int s) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[kFormalIndex] != s) continue;
    Monomial k = m;
    k.exp[kFormalIndex] = 0;
    out.add_term(k, c);
  }
  return out;
}

namespace {

std::string monomial_string(const Monomial& m) {
  std::string out;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!m.exp[v]) continue;
    if (!out.empty()) out += "*";
    out += v == kFormalIndex ? std::string("B") : "y" + std::to_string(v + 1);
    if (m.exp[v] > 1) out += "^" + std::to_string(m.exp[v]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(m);
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParameterError("empty polynomial string");
  Polynomial out;
  std::size_t pos = 0;
  auto fail = [&]() { throw ParameterError("cannot parse polynomial: " + std::string(text)); };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    Rational coef(sign);
    Monomial mono;
    bool any = false;
    while (true) {
      if (pos >= s.size()) fail();
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t end = pos;
        while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
        Rational r;
        if (r.set_str(s.substr(pos, end - pos), 10) != 0) fail();
        r.canonicalize();
        coef *= r;
        pos = end;
      } else if (s[pos] == 'y' || s[pos] == 'B') {
        int var;
        if (s[pos] == 'B') {
          var = kFormalIndex;
          ++pos;
        } else {
          std::size_t end = ++pos;
          while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
          if (end == pos) fail();
          var = std::stoi(s.substr(pos, end - pos)) - 1;
          if (var < 0 || var >= kMaxY) fail();
          pos = end;
        }
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          std::size_t end = ++pos;
          while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
          if (end == pos) fail();
          e = std::stoi(s.substr(pos, end - pos));
          pos = end;
        }
        int total = mono.exp[static_cast<std::size_t>(var)] + e;
        if (total > 255) fail();
        mono.exp[static_cast<std::size_t>(var)] = static_cast<uint8_t>(total);
      } else {
        fail();
      }
      any = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail();
    out.add_term(mono, coef);
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lq, cq] = *q.terms().begin();
  Polynomial quotient, rem = p;
  while (!rem.is_zero()) {
    const auto& [lr, cr] = *rem.terms().begin();
    if (!lq.divides(lr)) return std::nullopt;
    Polynomial t = Polynomial::monomial(lr / lq, cr / cq);
    quotient += t;
    rem -= t * q;
  }
  return quotient;
}

Polynomial linear_form_Y(const SchubertSymbol& symbol) {
  Polynomial out;
  for (int s : symbol.entries()) out += Polynomial::y(s);
  return out;
}

std::vector<Polynomial> expand_linear_product(std::span<const std::pair<Polynomial, Rational>> factors) {
  std::vector<Polynomial> alpha{Polynomial(1)};
  for (const auto& [a, b] : factors) {
    std::vector<Polynomial> next(alpha.size() + 1);
    for (std::size_t s = 0; s < alpha.size(); ++s) {
      next[s] += alpha[s] * a;
      next[s + 1] += alpha[s] * b;
    }
    alpha = std::move(next);
  }
  return alpha;
}

std::vector<Rational> linear_coefficients(const Polynomial& p, int nvars) {
  std::vector<Rational> out(static_cast<std::size_t>(nvars) + 1, 0);
  for (const auto& [m, c] : p.terms()) {
    int deg = m.degree();
    if (deg == 0) {
      out[0] = c;
      continue;
    }
    int var = -1;
    for (int v = 0; v < kMaxVars; ++v) {
      if (m.exp[v]) var = v;
    }
    if (deg != 1 || var >= nvars) throw ParameterError("not a linear form in the given variables");
    out[static_cast<std::size_t>(var) + 1] = c;
  }
  return out;
}

Polynomial rewrite_in_basis(const Polynomial& p, std::span<const Polynomial> basis, int nvars) {
  const auto n = static_cast<std::size_t>(nvars);
  if (basis.size() != n) throw ParameterError("basis size mismatch");
  // Augmented [M | I] where row t holds the y-coefficients of g_t; invert to express y_v via g.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t t = 0; t < n; ++t) {
    auto lc = linear_coefficients(basis[t], nvars);
    if (lc[0] != 0) throw ParameterError("basis forms must be homogeneous linear");
    for (std::size_t v = 0; v < n; ++v) a[v][t] = lc[v + 1];  // transpose: column t is g_t
    a[t][n + t] = 1;
  }
  // Solve A^T-structured system: y_v = sum_t X[v][t] g_t where sum_v M[t][v] X[v][s] = delta.
  // With a[v][t] = M[t][v], row-reducing [M^T | I] gives (M^T)^{-1} = (M^{-1})^T.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw ParameterError("linear forms do not form a basis");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  // a[:, n:] = (M^T)^{-1}; X = M^{-1} = ((M^T)^{-1})^T, so X[v][t] = a[t][n + v].
  std::vector<Polynomial> images(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t t = 0; t < n; ++t) {
      if (a[t][n + v] != 0) images[v] += Polynomial::y(static_cast<int>(t) + 1) * a[t][n + v];
    }
  }
  return p.compose(images);
}

}  // namespace wgo
