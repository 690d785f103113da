#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "wres/errors.hpp"
#include "wres/expr.hpp"
#include "wres/gaussian_rational.hpp"
#include "wres/param_poly.hpp"

namespace wres {

/// Polynomial in xi_n with ParamPoly coefficients, lowest degree first.
using XiPoly = std::vector<ParamPoly>;

namespace detail {

inline void trim(XiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline XiPoly poly_add(const XiPoly& x, const XiPoly& y) {
  XiPoly out(std::max(x.size(), y.size()));
  for (size_t k = 0; k < x.size(); ++k) out[k] += x[k];
  for (size_t k = 0; k < y.size(); ++k) out[k] += y[k];
  trim(out);
  return out;
}

inline XiPoly poly_mul(const XiPoly& x, const XiPoly& y) {
  if (x.empty() || y.empty()) return {};
  XiPoly out(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  trim(out);
  return out;
}

inline XiPoly poly_scale(XiPoly x, const ParamPoly& s) {
  for (auto& c : x) c = c * s;
  trim(x);
  return x;
}

/// Multiplies by (xi - r).
inline XiPoly mul_linear(const XiPoly& x, const GaussianRational& r) {
  if (x.empty()) return {};
  XiPoly out(x.size() + 1);
  for (size_t k = 0; k < x.size(); ++k) {
    out[k + 1] += x[k];
    out[k] -= x[k] * r;
  }
  trim(out);
  return out;
}

inline XiPoly mul_linear_pow(XiPoly x, const GaussianRational& r, int e) {
  for (int k = 0; k < e; ++k) x = mul_linear(x, r);
  return x;
}

/// Synthetic division by (xi - r); returns quotient and remainder.
inline std::pair<XiPoly, ParamPoly> div_linear(const XiPoly& x, const GaussianRational& r) {
  if (x.empty()) return {{}, ParamPoly()};
  XiPoly q(x.size() - 1);
  ParamPoly carry;
  for (size_t k = x.size(); k-- > 0;) {
    ParamPoly cur = x[k] + carry * r;
    if (k == 0) return {q, cur};
    q[k - 1] = cur;
    carry = cur;
  }
  return {q, carry};
}

inline XiPoly poly_derivative(const XiPoly& x) {
  XiPoly out;
  for (size_t k = 1; k < x.size(); ++k) out.push_back(x[k] * GaussianRational(static_cast<long>(k)));
  trim(out);
  return out;
}

/// Coefficients of p(r + t) in t.
inline XiPoly taylor_shift(XiPoly p, const GaussianRational& r) {
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = n - 1; k > i; --k) p[k - 1] += p[k] * r;
  }
  return p;
}

inline Rational binomial(long n, long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

/// First `count` Taylor coefficients of N(r + t) / (t + 2r)^q, i.e. of x
/// times (xi - r)^p expanded at the pole r = +i or -i.
inline XiPoly laurent_at(const XiPoly& num, const GaussianRational& r, int q, int count) {
  XiPoly shifted = taylor_shift(num, r);
  GaussianRational two_r = r * GaussianRational(2);
  GaussianRational base = two_r.pow(-q);
  // (t + 2r)^(-q) = (2r)^(-q) * sum_m (-1)^m C(q+m-1, m) (t/2r)^m
  std::vector<GaussianRational> kernel(count);
  for (int m = 0; m < count; ++m) {
    Rational c = q == 0 ? Rational(m == 0 ? 1 : 0) : binomial(q + m - 1, m);
    if (m % 2) c = -c;
    kernel[m] = base * GaussianRational(c) * two_r.pow(-m);
  }
  XiPoly out(count);
  for (int k = 0; k < count; ++k) {
    for (int m = 0; m <= k; ++m) {
      size_t idx = static_cast<size_t>(k - m);
      if (idx < shifted.size()) out[k] += shifted[idx] * kernel[m];
    }
  }
  return out;
}

}  // namespace detail

/// N(xi_n) / ((xi_n - i)^p (xi_n + i)^q), kept with no common (xi_n -/+ i)
/// factor between N and the denominator.
class BoundaryRational {
 public:
  BoundaryRational() = default;
  BoundaryRational(ParamPoly c) : num_{std::move(c)} { normalize(); }  // NOLINT
  BoundaryRational(long c) : BoundaryRational(ParamPoly(c)) {}        // NOLINT
  BoundaryRational(XiPoly num, int pole_up, int pole_down)
      : num_(std::move(num)), up_(pole_up), down_(pole_down) {
    if (up_ < 0 || down_ < 0) throw std::invalid_argument("negative pole order");
    normalize();
  }

  static BoundaryRational xi() { return BoundaryRational(XiPoly{ParamPoly(), ParamPoly(1)}, 0, 0); }
  /// 1 / (1 + xi_n^2)^m
  static BoundaryRational inv_q(int m) { return BoundaryRational(XiPoly{ParamPoly(1)}, m, m); }
  /// 1 + xi_n^2
  static BoundaryRational q() { return BoundaryRational(XiPoly{ParamPoly(1), ParamPoly(), ParamPoly(1)}, 0, 0); }

  const XiPoly& numerator() const { return num_; }
  int pole_up() const { return up_; }
  int pole_down() const { return down_; }
  bool is_zero() const { return num_.empty(); }
  int numerator_degree() const { return static_cast<int>(num_.size()) - 1; }
  /// Total pole order minus numerator degree.
  int decay() const { return is_zero() ? 1 << 20 : up_ + down_ - numerator_degree(); }

  friend BoundaryRational operator+(const BoundaryRational& x, const BoundaryRational& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    int up = std::max(x.up_, y.up_), down = std::max(x.down_, y.down_);
    XiPoly nx = x.lift(up, down), ny = y.lift(up, down);
    return BoundaryRational(detail::poly_add(nx, ny), up, down);
  }
  BoundaryRational operator-() const { return *this * ParamPoly(-1); }
  friend BoundaryRational operator-(const BoundaryRational& x, const BoundaryRational& y) { return x + (-y); }
  friend BoundaryRational operator*(const BoundaryRational& x, const BoundaryRational& y) {
    if (x.is_zero() || y.is_zero()) return {};
    return BoundaryRational(detail::poly_mul(x.num_, y.num_), x.up_ + y.up_, x.down_ + y.down_);
  }
  friend BoundaryRational operator*(const BoundaryRational& x, const ParamPoly& s) {
    BoundaryRational out = x;
    out.num_ = detail::poly_scale(x.num_, s);
    out.normalize();
    return out;
  }
  friend BoundaryRational operator*(const ParamPoly& s, const BoundaryRational& x) { return x * s; }
  BoundaryRational& operator+=(const BoundaryRational& o) { return *this = *this + o; }
  BoundaryRational& operator-=(const BoundaryRational& o) { return *this = *this - o; }
  BoundaryRational& operator*=(const BoundaryRational& o) { return *this = *this * o; }

  friend bool operator==(const BoundaryRational& x, const BoundaryRational& y) {
    return x.up_ == y.up_ && x.down_ == y.down_ && x.num_ == y.num_;
  }

  BoundaryRational derivative(int k = 1) const {
    BoundaryRational out = *this;
    for (int s = 0; s < k; ++s) out = out.derivative_once();
    return out;
  }

  /// Sum of the principal-part terms at xi_n = +i.
  BoundaryRational principal_part_upper() const { return principal_part(true); }
  BoundaryRational principal_part_lower() const { return principal_part(false); }

  /// Integral over the real line, returned as the coefficient of pi.
  ParamPoly line_integral() const {
    if (is_zero()) return {};
    if (decay() < 2) throw NotIntegrable("numerator degree " + std::to_string(numerator_degree()) +
                                         " leaves fewer than two orders of decay: " + to_string());
    if (up_ == 0) return {};
    XiPoly c = detail::laurent_at(num_, GaussianRational::i(), down_, up_);
    // 2 pi i * residue
    return c[up_ - 1] * GaussianRational(Rational(0), Rational(2));
  }

  std::complex<double> evaluate(std::complex<double> xi, std::complex<double> a, std::complex<double> b) const {
    std::complex<double> n = 0;
    for (size_t k = num_.size(); k-- > 0;) n = n * xi + num_[k].evaluate(a, b);
    const std::complex<double> I(0, 1);
    return n / (std::pow(xi - I, up_) * std::pow(xi + I, down_));
  }

  Expr numerator_expr() const {
    Expr out;
    for (size_t k = 0; k < num_.size(); ++k) {
      Monomial tail;
      if (k) tail[{SymbolKind::xi_n}] = static_cast<int>(k);
      out += Expr::from_param(num_[k], tail);
    }
    return out;
  }

  /// e.g. "(6*xi_n^2 - 2)/(1 + xi_n^2)^3"
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string n = numerator_expr().render_plain();
    if (up_ == 0 && down_ == 0) return n;
    std::string d;
    auto factor = [](const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
    if (up_ == down_) {
      d = factor("(1 + xi_n^2)", up_);
    } else {
      if (up_) d = factor("(xi_n - i)", up_);
      if (down_) d += (d.empty() ? "" : "*") + factor("(xi_n + i)", down_);
    }
    bool multi = num_.size() > 1 || num_[0].terms().size() > 1 || !num_[0].constant_term().is_real();
    return (multi ? "(" + n + ")" : n) + "/" + (d.find('*') != std::string::npos ? "(" + d + ")" : d);
  }

 private:
  void normalize() {
    detail::trim(num_);
    if (num_.empty()) {
      up_ = down_ = 0;
      return;
    }
    strip(up_, GaussianRational::i());
    strip(down_, -GaussianRational::i());
  }

  void strip(int& order, const GaussianRational& root) {
    while (order > 0) {
      auto [quot, rem] = detail::div_linear(num_, root);
      if (!rem.is_zero()) return;
      num_ = std::move(quot);
      --order;
    }
  }

  XiPoly lift(int up, int down) const {
    XiPoly out = detail::mul_linear_pow(num_, GaussianRational::i(), up - up_);
    return detail::mul_linear_pow(out, -GaussianRational::i(), down - down_);
  }

  BoundaryRational derivative_once() const {
    if (is_zero()) return {};
    const GaussianRational I = GaussianRational::i();
    int eu = up_ > 0, ed = down_ > 0;
    XiPoly dn = detail::mul_linear_pow(detail::mul_linear_pow(detail::poly_derivative(num_), I, eu), -I, ed);
    XiPoly t1 = detail::poly_scale(detail::mul_linear_pow(num_, -I, ed), ParamPoly(-up_));
    XiPoly t2 = detail::poly_scale(detail::mul_linear_pow(num_, I, eu), ParamPoly(-down_));
    return BoundaryRational(detail::poly_add(dn, detail::poly_add(t1, t2)), up_ + eu, down_ + ed);
  }

  BoundaryRational principal_part(bool upper) const {
    if (is_zero()) return {};
    if (decay() < 1) {
      throw NonDecaying("principal part of a non-decaying expression: " + to_string());
    }
    int p = upper ? up_ : down_;
    int q = upper ? down_ : up_;
    if (p == 0) return {};
    GaussianRational r = upper ? GaussianRational::i() : -GaussianRational::i();
    XiPoly g = detail::laurent_at(num_, r, q, p);
    // sum_k g_k (xi - r)^k / (xi - r)^p
    XiPoly n;
    for (int k = p; k-- > 0;) {
      n = detail::mul_linear(n, r);
      n = detail::poly_add(n, XiPoly{g[k]});
    }
    return upper ? BoundaryRational(n, p, 0) : BoundaryRational(n, 0, p);
  }

  XiPoly num_;
  int up_ = 0;
  int down_ = 0;
};

inline BoundaryRational pow(const BoundaryRational& x, int e) {
  BoundaryRational out(1);
  for (int k = 0; k < e; ++k) out *= x;
  return out;
}

/// Parses "N/D" where D factors into powers of (xi_n - i), (xi_n + i) and a
/// constant.
inline BoundaryRational parse_boundary_rational(const std::string& text) {
  Fraction f = parse_fraction(text);
  auto to_poly = [&](const Expr& e) {
    XiPoly p;
    for (const auto& [m, c] : e.terms()) {
      ParamMonomial pm{};
      int k = 0;
      for (const auto& [s, ex] : m) {
        if (ex < 0) throw UnsupportedPole("negative power of " + symbol_name(s) + " in '" + text + "'");
        if (s.kind == SymbolKind::a) {
          pm.a = ex;
        } else if (s.kind == SymbolKind::b) {
          pm.b = ex;
        } else if (s.kind == SymbolKind::xi_n) {
          k = ex;
        } else {
          throw ParseError("symbol " + symbol_name(s) + " not allowed in a boundary rational");
        }
      }
      if (pm.a > 1 || pm.b > 1) throw DegreeOverflow("parameter degree above 1 in '" + text + "'");
      if (p.size() <= static_cast<size_t>(k)) p.resize(k + 1);
      p[k] += ParamPoly::monomial(pm, c);
    }
    detail::trim(p);
    return p;
  };
  XiPoly num = to_poly(f.num), den = to_poly(f.den);
  if (den.empty()) throw ParseError("zero denominator in '" + text + "'");
  int up = 0, down = 0;
  for (auto [root, order] : {std::pair{GaussianRational::i(), &up}, std::pair{-GaussianRational::i(), &down}}) {
    for (;;) {
      auto [quot, rem] = detail::div_linear(den, root);
      if (!rem.is_zero() || quot.empty()) break;
      den = std::move(quot);
      ++*order;
    }
  }
  if (den.size() != 1 || !den[0].is_constant()) throw UnsupportedPole("denominator has poles away from +i, -i in '" + text + "'");
  GaussianRational inv = GaussianRational(1) / den[0].constant_term();
  return BoundaryRational(detail::poly_scale(num, ParamPoly(inv)), up, down);
}

}  // namespace wres
