#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "wres/errors.hpp"
#include "wres/gaussian_rational.hpp"

namespace wres {

/// Exponents of a and b in a parameter monomial.
struct ParamMonomial {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
};

/// Polynomial in a = phi'(0), b = psi'(0) with Gaussian-rational coefficients.
/// Each exponent is capped at 1; exceeding it throws DegreeOverflow.
class ParamPoly {
 public:
  using Terms = std::map<ParamMonomial, GaussianRational>;

  ParamPoly() = default;
  ParamPoly(GaussianRational c) { add_term({0, 0}, std::move(c)); }  // NOLINT
  ParamPoly(long c) : ParamPoly(GaussianRational(c)) {}              // NOLINT

  static ParamPoly a() { return monomial({1, 0}, 1); }
  static ParamPoly b() { return monomial({0, 1}, 1); }
  static ParamPoly monomial(ParamMonomial m, GaussianRational c) {
    ParamPoly p;
    p.add_term(m, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamMonomial{}); }

  GaussianRational coefficient(ParamMonomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
  }
  GaussianRational constant_term() const { return coefficient({0, 0}); }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  ParamPoly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
  friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
  friend ParamPoly operator*(ParamPoly x, const GaussianRational& s) { return x *= s; }
  friend ParamPoly operator*(const GaussianRational& s, ParamPoly x) { return x *= s; }
  ParamPoly operator-() const { return *this * GaussianRational(-1); }

  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly out;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        ParamMonomial m{mx.a + my.a, mx.b + my.b};
        if (m.a > 1 || m.b > 1) {
          throw DegreeOverflow("parameter monomial a^" + std::to_string(m.a) + "*b^" + std::to_string(m.b) +
                               " exceeds degree 1");
        }
        out.add_term(m, cx * cy);
      }
    }
    return out;
  }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }

  /// Exact value at rational (a, b).
  GaussianRational substitute(const GaussianRational& a, const GaussianRational& b) const {
    GaussianRational out;
    for (const auto& [m, c] : terms_) out += c * a.pow(m.a) * b.pow(m.b);
    return out;
  }

  std::complex<double> evaluate(std::complex<double> a, std::complex<double> b) const {
    std::complex<double> out = 0;
    for (const auto& [m, c] : terms_) out += c.to_complex() * std::pow(a, m.a) * std::pow(b, m.b);
    return out;
  }

  /// Maximum total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.a + m.b);
    return d;
  }

 private:
  void add_term(ParamMonomial m, GaussianRational c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace wres
