#pragma once

#include <algorithm>
#include <cctype>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wres/errors.hpp"
#include "wres/gaussian_rational.hpp"
#include "wres/param_poly.hpp"

namespace wres {

enum class SymbolKind { a, b, xi_n, pi, sphere, omega, vol };

/// S(d) is the volume of the unit d-sphere; Omega(d) is the published
/// volume symbol, kept opaque.
struct Symbol {
  SymbolKind kind;
  int index = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

inline std::string symbol_name(const Symbol& s) {
  switch (s.kind) {
    case SymbolKind::a: return "a";
    case SymbolKind::b: return "b";
    case SymbolKind::xi_n: return "xi_n";
    case SymbolKind::pi: return "pi";
    case SymbolKind::sphere: return "S(" + std::to_string(s.index) + ")";
    case SymbolKind::omega: return "Omega(" + std::to_string(s.index) + ")";
    case SymbolKind::vol: return "Vol";
  }
  return "?";
}

/// Symbol -> nonzero exponent (negative allowed).
using Monomial = std::map<Symbol, int>;

namespace detail {

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

struct TermPiece {
  GaussianRational coef;
  std::string factors;  // empty for a bare constant
};

inline std::string magnitude(const Rational& m, const std::string& unit, const std::string& factors) {
  std::string tail = unit;
  if (!factors.empty()) tail += (tail.empty() ? "" : "*") + factors;
  if (m == 1 && !tail.empty()) return tail;
  std::string num = rational_str(m);
  if (tail.empty()) return num;
  if (!is_integer(m)) num = "(" + num + ")";
  return num + "*" + tail;
}

/// Renders a signed sum of pieces; a leading negative fraction keeps its sign
/// inside the parentheses, e.g. "(-1/8)*(3*a + b)*pi".
inline std::string render_sum(const std::vector<TermPiece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& p : pieces) {
    const auto& c = p.coef;
    int sign = 1;
    std::string mag;
    if (c.is_real()) {
      sign = sgn(c.re()) < 0 ? -1 : 1;
      Rational m = abs(c.re());
      if (first && sign < 0 && !is_integer(m) && !p.factors.empty()) {
        mag = "(-" + rational_str(m) + ")*" + p.factors;
        sign = 1;
      } else {
        mag = magnitude(m, "", p.factors);
      }
    } else if (c.re() == 0) {
      sign = sgn(c.im()) < 0 ? -1 : 1;
      mag = magnitude(abs(c.im()), "i", p.factors);
    } else {
      mag = "(" + to_string(c) + ")";
      if (!p.factors.empty()) mag += "*" + p.factors;
    }
    if (first) {
      out = (sign < 0 ? "-" : "") + mag;
    } else {
      out += (sign < 0 ? " - " : " + ") + mag;
    }
    first = false;
  }
  return out;
}

inline std::string power_str(const std::string& name, int e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

inline std::string monomial_factors(const Monomial& m) {
  std::string num, den;
  for (const auto& [s, e] : m) {
    if (e > 0) num += (num.empty() ? "" : "*") + power_str(symbol_name(s), e);
  }
  for (const auto& [s, e] : m) {
    if (e < 0) den += "/" + power_str(symbol_name(s), -e);
  }
  if (num.empty() && !den.empty()) num = "1";
  return num + den;
}

inline Rational gcd_q(const Rational& x, const Rational& y) {
  mpz_class n = gcd(x.get_num(), y.get_num());
  mpz_class d = lcm(x.get_den(), y.get_den());
  return Rational(n, d);
}

}  // namespace detail

/// Sum of Laurent monomials over the report symbols with Gaussian-rational
/// coefficients.
class Expr {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  Expr() = default;
  Expr(GaussianRational c) { add_term({}, std::move(c)); }  // NOLINT
  Expr(long c) : Expr(GaussianRational(c)) {}              // NOLINT

  static Expr symbol(Symbol s, int e = 1) {
    Expr out;
    out.add_term(Monomial{{s, e}}, 1);
    return out;
  }
  static Expr a() { return symbol({SymbolKind::a}); }
  static Expr b() { return symbol({SymbolKind::b}); }
  static Expr xi() { return symbol({SymbolKind::xi_n}); }
  static Expr pi() { return symbol({SymbolKind::pi}); }
  static Expr sphere(int d) { return symbol({SymbolKind::sphere, d}); }
  static Expr omega(int d) { return symbol({SymbolKind::omega, d}); }
  static Expr vol() { return symbol({SymbolKind::vol}); }

  static Expr from_param(const ParamPoly& p, const Monomial& tail = {}) {
    Expr out;
    for (const auto& [m, c] : p.terms()) {
      Monomial mono = tail;
      if (m.a) mono[{SymbolKind::a}] += m.a;
      if (m.b) mono[{SymbolKind::b}] += m.b;
      out.add_term(mono, c);
    }
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }

  Expr& operator+=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Expr& operator-=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Expr operator+(Expr x, const Expr& y) { return x += y; }
  friend Expr operator-(Expr x, const Expr& y) { return x -= y; }
  Expr operator-() const { return *this * Expr(-1); }

  friend Expr operator*(const Expr& x, const Expr& y) {
    Expr out;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        Monomial m = mx;
        for (const auto& [s, e] : my) {
          if ((m[s] += e) == 0) m.erase(s);
        }
        out.add_term(m, cx * cy);
      }
    }
    return out;
  }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }

  /// Inverse of a single-term expression.
  Expr inverse() const {
    if (!is_single_term()) throw std::domain_error("inverse of a non-monomial expression");
    const auto& [m, c] = *terms_.begin();
    Monomial inv;
    for (const auto& [s, e] : m) inv[s] = -e;
    Expr out;
    out.add_term(inv, GaussianRational(1) / c);
    return out;
  }
  friend Expr operator/(const Expr& x, const Expr& y) { return x * y.inverse(); }

  Expr pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Expr out(1);
    for (int k = 0; k < e; ++k) out *= *this;
    return out;
  }

  friend bool operator==(const Expr& x, const Expr& y) { return x.terms_ == y.terms_; }

  /// Replaces every occurrence of `s` by `value`.
  Expr substitute(const Symbol& s, const Expr& value) const {
    Expr out;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      int e = 0;
      if (auto it = rest.find(s); it != rest.end()) {
        e = it->second;
        rest.erase(it);
      }
      Expr piece;
      piece.add_term(rest, c);
      out += piece * value.pow(e);
    }
    return out;
  }

  std::complex<double> evaluate(const std::map<Symbol, std::complex<double>>& values) const {
    std::complex<double> out = 0;
    for (const auto& [m, c] : terms_) {
      std::complex<double> t = c.to_complex();
      for (const auto& [s, e] : m) {
        auto it = values.find(s);
        if (it == values.end()) throw std::out_of_range("no value for symbol " + symbol_name(s));
        t *= std::pow(it->second, e);
      }
      out += t;
    }
    return out;
  }

  /// Coefficient of `tail` as a polynomial in a, b.
  ParamPoly param_coefficient(const Monomial& tail) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      ParamMonomial pm{};
      if (auto it = rest.find({SymbolKind::a}); it != rest.end()) {
        pm.a = it->second;
        rest.erase(it);
      }
      if (auto it = rest.find({SymbolKind::b}); it != rest.end()) {
        pm.b = it->second;
        rest.erase(it);
      }
      if (rest == tail) out += ParamPoly::monomial(pm, c);
    }
    return out;
  }

  /// Terms grouped by their non-(a, b) factors, each group with its rational
  /// content pulled out: "(-1/16)*(40*a - 11*b)*pi*S(4)".
  std::string render() const {
    std::map<Monomial, std::vector<std::pair<Monomial, GaussianRational>>> groups;
    for (const auto& [m, c] : terms_) {
      Monomial ab, tail;
      for (const auto& [s, e] : m) {
        (s.kind == SymbolKind::a || s.kind == SymbolKind::b ? ab : tail)[s] = e;
      }
      groups[tail].emplace_back(ab, c);
    }
    std::vector<detail::TermPiece> pieces;
    for (auto& [tail, members] : groups) {
      // a before b, higher degree first
      std::sort(members.begin(), members.end(), [](const auto& x, const auto& y) {
        auto deg = [](const Monomial& m, SymbolKind k) {
          auto it = m.find({k});
          return it == m.end() ? 0 : it->second;
        };
        auto kx = std::make_pair(deg(x.first, SymbolKind::a), deg(x.first, SymbolKind::b));
        auto ky = std::make_pair(deg(y.first, SymbolKind::a), deg(y.first, SymbolKind::b));
        return kx > ky;
      });
      std::string tail_str = detail::monomial_factors(tail);
      bool all_real = true;
      for (const auto& [m, c] : members) all_real = all_real && c.is_real();
      if (members.size() == 1) {
        std::string f = detail::monomial_factors(members[0].first);
        if (!tail_str.empty()) f += (f.empty() ? "" : "*") + tail_str;
        pieces.push_back({members[0].second, f});
        continue;
      }
      std::vector<detail::TermPiece> inner;
      GaussianRational content(1);
      if (all_real) {
        Rational g = abs(members[0].second.re());
        for (const auto& [m, c] : members) g = detail::gcd_q(g, c.re());
        content = GaussianRational(sgn(members[0].second.re()) < 0 ? Rational(-g) : g);
      }
      for (const auto& [m, c] : members) inner.push_back({c / content, detail::monomial_factors(m)});
      std::string f = "(" + detail::render_sum(inner) + ")";
      if (!tail_str.empty()) f += "*" + tail_str;
      pieces.push_back({content, f});
    }
    return detail::render_sum(pieces);
  }

  /// One term per monomial, no factoring.
  std::string render_plain() const {
    std::vector<detail::TermPiece> pieces;
    for (const auto& [m, c] : terms_) pieces.push_back({c, detail::monomial_factors(m)});
    return detail::render_sum(pieces);
  }

 private:
  void add_term(const Monomial& m, GaussianRational c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Quotient of two expressions, as produced by the parser.
struct Fraction {
  Expr num{1};
  Expr den{1};

  void normalize() {
    if (den.is_single_term()) {
      num = num / den;
      den = Expr(1);
    }
  }
  friend Fraction operator+(const Fraction& x, const Fraction& y) {
    Fraction out;
    if (x.den == y.den) {
      out = {x.num + y.num, x.den};
    } else {
      out = {x.num * y.den + y.num * x.den, x.den * y.den};
    }
    out.normalize();
    return out;
  }
  Fraction operator-() const { return {-num, den}; }
  friend Fraction operator*(const Fraction& x, const Fraction& y) {
    Fraction out{x.num * y.num, x.den * y.den};
    out.normalize();
    return out;
  }
  Fraction reciprocal() const {
    if (num.is_zero()) throw ParseError("division by zero");
    Fraction out{den, num};
    out.normalize();
    return out;
  }
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  Fraction parse() {
    Fraction f = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return s_.substr(start, pos_ - start);
  }

  Fraction sum() {
    Fraction f = product();
    for (;;) {
      if (accept('+')) {
        f = f + product();
      } else if (accept('-')) {
        f = f + -product();
      } else {
        return f;
      }
    }
  }
  Fraction product() {
    Fraction f = unary();
    for (;;) {
      if (accept('*')) {
        f = f * unary();
      } else if (accept('/')) {
        f = f * unary().reciprocal();
      } else {
        return f;
      }
    }
  }
  Fraction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Fraction power() {
    Fraction base = atom();
    if (!accept('^')) return base;
    bool neg = accept('-');
    int e = std::stoi(integer());
    Fraction out;
    for (int k = 0; k < e; ++k) out = out * base;
    return neg ? out.reciprocal() : out;
  }
  Fraction atom() {
    skip();
    if (accept('(')) {
      Fraction f = sum();
      expect(')');
      return f;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      return {Expr(GaussianRational(Rational(mpz_class(integer())))), Expr(1)};
    }
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    if (id.empty()) fail("expected a term");
    auto indexed = [&](SymbolKind k) {
      expect('(');
      int d = std::stoi(integer());
      expect(')');
      return Expr::symbol({k, d});
    };
    Expr e;
    if (id == "i") {
      e = Expr(GaussianRational::i());
    } else if (id == "a") {
      e = Expr::a();
    } else if (id == "b") {
      e = Expr::b();
    } else if (id == "xi_n") {
      e = Expr::xi();
    } else if (id == "pi") {
      e = Expr::pi();
    } else if (id == "Vol") {
      e = Expr::vol();
    } else if (id == "S") {
      e = indexed(SymbolKind::sphere);
    } else if (id == "Omega") {
      e = indexed(SymbolKind::omega);
    } else {
      fail("unknown symbol '" + id + "'");
    }
    return {e, Expr(1)};
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Fraction parse_fraction(const std::string& text) { return detail::Parser(text).parse(); }

/// Parses the report grammar; denominators must be single terms.
inline Expr parse_expr(const std::string& text) {
  Fraction f = parse_fraction(text);
  if (!(f.den == Expr(1))) throw ParseError("denominator is not a monomial in '" + text + "'");
  return f.num;
}

/// Rewrites S(d) as the published Omega symbol for display: S(2) -> Omega(3)
/// for n = 4, S(4) -> Omega(4) for n = 6, S(1) -> Omega(2) for n = 3.
inline Expr to_published_symbols(const Expr& e) {
  Expr out = e;
  out = out.substitute({SymbolKind::sphere, 2}, Expr::omega(3));
  out = out.substitute({SymbolKind::sphere, 4}, Expr::omega(4));
  out = out.substitute({SymbolKind::sphere, 1}, Expr::omega(2));
  return out;
}

}  // namespace wres
