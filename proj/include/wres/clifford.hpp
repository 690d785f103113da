#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wres/boundary_rational.hpp"
#include "wres/errors.hpp"

namespace wres {

/// Basis of the fiber: bit 0 is u = c(xi'), bit 1 is v = c(dx_n).
enum class Blade : int { one = 0, u = 1, v = 2, uv = 3 };

inline const char* blade_name(Blade b) {
  static const char* names[] = {"1", "u", "v", "uv"};
  return names[static_cast<int>(b)];
}

/// Reduced product of two basis blades with u^2 = v^2 = -1, uv = -vu.
inline std::pair<int, Blade> blade_mul(Blade x, Blade y) {
  int bx = static_cast<int>(x), by = static_cast<int>(y);
  int sign = 1;
  if ((bx & 2) && (by & 1)) sign = -sign;  // v passes u
  if (bx & by & 1) sign = -sign;
  if (bx & by & 2) sign = -sign;
  return {sign, static_cast<Blade>(bx ^ by)};
}

/// A word carrying one tangential xi' index, kept opaque.
struct OddTerm {
  BoundaryRational coeff;
  std::string tag;
  friend bool operator==(const OddTerm&, const OddTerm&) = default;
};

struct SpinorDim {
  int n;
  int dim_s;

  explicit SpinorDim(int dim) : n(dim), dim_s(0) {
    if (dim != 3 && dim != 4 && dim != 6) {
      throw UnsupportedDimension("dimension " + std::to_string(dim) + " not in {3, 4, 6}");
    }
    dim_s = 1 << (dim / 2);
  }
};

class CliffordElement {
 public:
  CliffordElement() = default;
  CliffordElement(BoundaryRational scalar) { c_[0] = std::move(scalar); }  // NOLINT
  CliffordElement(BoundaryRational c1, BoundaryRational cu, BoundaryRational cv, BoundaryRational cuv)
      : c_{std::move(c1), std::move(cu), std::move(cv), std::move(cuv)} {}

  static CliffordElement blade(Blade b, BoundaryRational coeff = BoundaryRational(1)) {
    CliffordElement out;
    out.c_[static_cast<int>(b)] = std::move(coeff);
    return out;
  }
  static CliffordElement u() { return blade(Blade::u); }
  static CliffordElement v() { return blade(Blade::v); }
  static CliffordElement uv() { return blade(Blade::uv); }
  static CliffordElement odd(BoundaryRational coeff, std::string tag) {
    CliffordElement out;
    out.add_odd(std::move(coeff), std::move(tag));
    return out;
  }

  const BoundaryRational& operator[](Blade b) const { return c_[static_cast<int>(b)]; }
  const std::vector<OddTerm>& odd_part() const { return odd_; }
  bool is_zero() const {
    for (const auto& c : c_) {
      if (!c.is_zero()) return false;
    }
    return odd_.empty();
  }

  /// Applies f to every coefficient, odd words included.
  CliffordElement map(const std::function<BoundaryRational(const BoundaryRational&)>& f) const {
    CliffordElement out;
    for (int k = 0; k < 4; ++k) out.c_[k] = c_[k].is_zero() ? BoundaryRational() : f(c_[k]);
    for (const auto& t : odd_) out.add_odd(f(t.coeff), t.tag);
    return out;
  }

  CliffordElement derivative(int k = 1) const {
    return map([k](const BoundaryRational& x) { return x.derivative(k); });
  }

  friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) {
    CliffordElement out = x;
    for (int k = 0; k < 4; ++k) out.c_[k] += y.c_[k];
    for (const auto& t : y.odd_) out.add_odd(t.coeff, t.tag);
    return out;
  }
  CliffordElement operator-() const {
    return map([](const BoundaryRational& x) { return -x; });
  }
  friend CliffordElement operator-(const CliffordElement& x, const CliffordElement& y) { return x + (-y); }
  CliffordElement& operator+=(const CliffordElement& o) { return *this = *this + o; }

  friend CliffordElement operator*(const CliffordElement& x, const BoundaryRational& s) {
    return x.map([&s](const BoundaryRational& c) { return c * s; });
  }
  friend CliffordElement operator*(const BoundaryRational& s, const CliffordElement& x) { return x * s; }

  friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    CliffordElement out;
    for (int i = 0; i < 4; ++i) {
      if (x.c_[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (y.c_[j].is_zero()) continue;
        auto [sign, b] = blade_mul(static_cast<Blade>(i), static_cast<Blade>(j));
        out.c_[static_cast<int>(b)] += x.c_[i] * y.c_[j] * ParamPoly(sign);
      }
    }
    if (!x.odd_.empty() && !y.odd_.empty()) {
      throw OddOddProduct("product of two odd-sector words: " + x.odd_[0].tag + " * " + y.odd_[0].tag);
    }
    for (const auto& t : x.odd_) out.odd_times(t, y, false);
    for (const auto& t : y.odd_) out.odd_times(t, x, true);
    return out;
  }

  friend bool operator==(const CliffordElement& x, const CliffordElement& y) {
    return x.c_ == y.c_ && x.odd_ == y.odd_;
  }

  std::string to_string() const {
    std::string out;
    for (int k = 0; k < 4; ++k) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[k].to_string() + ")*" + blade_name(static_cast<Blade>(k));
    }
    for (const auto& t : odd_) {
      if (!out.empty()) out += " + ";
      out += "(" + t.coeff.to_string() + ")*[" + t.tag + "]";
    }
    return out.empty() ? "0" : out;
  }

 private:
  void add_odd(BoundaryRational coeff, std::string tag) {
    if (coeff.is_zero()) return;
    for (auto it = odd_.begin(); it != odd_.end(); ++it) {
      if (it->tag == tag) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) odd_.erase(it);
        return;
      }
    }
    odd_.push_back({std::move(coeff), std::move(tag)});
  }

  // odd * (u | uv) is not representable
  void odd_times(const OddTerm& t, const CliffordElement& even, bool even_on_left) {
    for (int j = 0; j < 4; ++j) {
      if (even.c_[j].is_zero()) continue;
      Blade b = static_cast<Blade>(j);
      if (b == Blade::u || b == Blade::uv) {
        throw OddOddProduct("odd-sector word " + t.tag + " multiplied by " + blade_name(b));
      }
      std::string tag = t.tag;
      if (b == Blade::v) tag = even_on_left ? "v*" + tag : tag + "*v";
      add_odd(t.coeff * even.c_[j], tag);
    }
  }

  std::array<BoundaryRational, 4> c_;
  std::vector<OddTerm> odd_;
};

/// dim_s times the scalar coefficient; odd words are traceless.
inline BoundaryRational cl_trace(const CliffordElement& x, const SpinorDim& d) {
  return x[Blade::one] * ParamPoly(d.dim_s);
}

inline CliffordElement cl_mul(const CliffordElement& x, const CliffordElement& y) { return x * y; }

enum class Generator { u, v };

/// Normal derivative of a generator at x0: d c(xi') = (a/2) u, d c(dx_n) = -(b/2) v.
inline CliffordElement cl_dxn_substitute(Generator g) {
  const GaussianRational half(make_rational(1, 2));
  if (g == Generator::u) return CliffordElement::blade(Blade::u, ParamPoly::a() * half);
  return CliffordElement::blade(Blade::v, ParamPoly::b() * -half);
}

/// c(xi) = u + xi_n v at |xi'| = 1.
inline CliffordElement clifford_xi() {
  return CliffordElement::u() + CliffordElement::blade(Blade::v, BoundaryRational::xi());
}

}  // namespace wres
