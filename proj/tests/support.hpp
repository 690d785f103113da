#pragma once

#include <random>
#include <string>

#include "wres/boundary_rational.hpp"
#include "wres/clifford.hpp"

namespace test_support {

using namespace wres;

inline BoundaryRational br(const std::string& s) { return parse_boundary_rational(s); }

/// Seeded generator of small exact test data.
struct Rng {
  std::mt19937_64 gen{12345};
  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rat() { return make_rational(small(-9, 9), small(1, 5)); }
  GaussianRational gauss() { return {rat(), small(0, 1) ? rat() : Rational(0)}; }
  ParamPoly param() { return ParamPoly(gauss()) + ParamPoly::a() * gauss() + ParamPoly::b() * gauss(); }
  BoundaryRational decaying(bool params = true) {
    int up = static_cast<int>(small(0, 3)), down = static_cast<int>(small(0, 3));
    if (up + down == 0) up = 1;
    int deg = std::max(0, up + down - static_cast<int>(small(1, 2)));
    XiPoly num;
    for (int k = 0; k <= deg; ++k) {
      num.push_back(params && small(0, 2) ? ParamPoly(gauss()) + ParamPoly::a() * gauss() : ParamPoly(gauss()));
    }
    return BoundaryRational(num, up, down);
  }
  /// Element with decaying coefficients; without params they are free of a, b.
  CliffordElement element(bool params = true) {
    CliffordElement out;
    for (Blade b : {Blade::one, Blade::u, Blade::v, Blade::uv}) {
      BoundaryRational c = decaying(params);
      out += CliffordElement::blade(b, c);
    }
    return out;
  }
};

}  // namespace test_support

namespace test_support {

/// d/dxi_n sigma_-4(D^-3) at x0 as printed for the (1,3) configuration.
inline CliffordElement printed_dxi_sigma4_cubed() {
  const CliffordElement u = CliffordElement::u(), v = CliffordElement::v();
  const CliffordElement du = cl_dxn_substitute(Generator::u), dv = cl_dxn_substitute(Generator::v);
  return (u * v * u) * br("((59*xi_n + 27*xi_n^3)*a + (8*xi_n - 24*xi_n^3)*b)/(2*(1 + xi_n^2)^5)") +
         u * br("((33 - 180*xi_n^2 - 85*xi_n^4)*a + (-48*xi_n^2 + 80*xi_n^4)*b)/(2*(1 + xi_n^2)^5)") +
         v * br("((49*xi_n - 97*xi_n^3 - 50*xi_n^5)*a + (-48*xi_n^3 + 48*xi_n^5)*b)/(2*(1 + xi_n^2)^5)") +
         (u * v * du) * br("-6*xi_n/(1 + xi_n^2)^4") + du * br("(-3 + 15*xi_n^2)/(1 + xi_n^2)^4") +
         (u * v * dv) * br("(1 - 5*xi_n^2)/(1 + xi_n^2)^4") + dv * br("(-6*xi_n + 12*xi_n^3)/(1 + xi_n^2)^4");
}

}  // namespace test_support
