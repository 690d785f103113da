#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "wres/errors.hpp"

namespace wres {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" (optional leading sign).
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw ParseError("not a rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

/// p + q i with p, q rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integers promote
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = m;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational den = o.re_ * o.re_ + o.im_ * o.im_;
    if (den == 0) throw std::domain_error("division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / den;
    Rational m = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = r;
    im_ = m;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
  friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
  friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }
  friend GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Integer power, negative exponents allowed for nonzero values.
  GaussianRational pow(int e) const {
    GaussianRational base = e < 0 ? GaussianRational(1) / *this : *this;
    GaussianRational out(1);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
    return out;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return rational_str(z.re());
  auto imag = [](const Rational& m) { return m == 1 ? std::string("i") : rational_str(m) + "*i"; };
  if (z.re() == 0) return z.im() < 0 ? "-" + imag(-z.im()) : imag(z.im());
  return rational_str(z.re()) + (z.im() < 0 ? " - " : " + ") + imag(abs(z.im()));
}

}  // namespace wres
