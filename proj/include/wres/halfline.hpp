#pragma once

#include <cmath>
#include <numbers>

#include "wres/clifford.hpp"
#include "wres/expr.hpp"

namespace wres {

struct ProjectedElement {
  CliffordElement plus;   // poles at +i only
  CliffordElement minus;  // poles at -i only
};

inline CliffordElement pi_plus(const CliffordElement& x) {
  return x.map([](const BoundaryRational& c) { return c.principal_part_upper(); });
}

inline CliffordElement pi_minus(const CliffordElement& x) {
  return x.map([](const BoundaryRational& c) { return c.principal_part_lower(); });
}

inline ProjectedElement project(const CliffordElement& x) { return {pi_plus(x), pi_minus(x)}; }

/// Integral over the real line of the trace, as the coefficient of pi.
inline ParamPoly integrate_line_cl(const CliffordElement& x, const SpinorDim& d) {
  return cl_trace(x, d).line_integral();
}

/// Volume of the unit (n-2)-sphere.
struct SphereFactor {
  int d;

  Expr symbol() const { return Expr::sphere(d); }
  double numeric() const {
    double m = (d + 1) / 2.0;
    return 2.0 * std::pow(std::numbers::pi, m) / std::tgamma(m);
  }
};

inline SphereFactor sphere_factor(int n) {
  if (n < 3) throw UnsupportedDimension("sphere factor needs n >= 3, got " + std::to_string(n));
  return {n - 2};
}

}  // namespace wres
