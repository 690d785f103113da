#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "wres/clifford.hpp"
#include "wres/expr.hpp"
#include "wres/param_poly.hpp"

namespace wres {

/// First normal jet of g = (1/phi) g_boundary + psi dx_n^2 at x0, with
/// phi(0) = psi(0) = 1, a = phi'(0), b = psi'(0).
struct MetricJet {
  int n;

  explicit MetricJet(int dim) : n(dim) {
    if (dim < 3) throw UnsupportedDimension("metric jet needs n >= 3, got " + std::to_string(dim));
  }

  /// d/dx_n of the diagonal entry g_ii (1-based); g is the identity at x0.
  ParamPoly dg(int i) const { return i == n ? ParamPoly::b() : -ParamPoly::a(); }

  /// Christoffel symbol Gamma^k_ij at x0.
  ParamPoly christoffel(int k, int i, int j) const {
    const GaussianRational half(make_rational(1, 2));
    auto d = [&](int m, int p, int q) { return (m == n && p == q) ? dg(p) : ParamPoly(); };
    return (d(i, j, k) + d(j, i, k) - d(k, i, j)) * half;
  }
};

/// (s, t, i) -> omega_{s,t}(e_i) at x0, nonzero entries only.
using ConnectionTable = std::map<std::tuple<int, int, int>, ParamPoly>;

/// omega_{s,t}(e_i) = g(e_s, nabla_{e_i} e_t) for the frame e_i = g_ii^{-1/2} d_i.
inline ConnectionTable connection_coeffs(const MetricJet& m) {
  const GaussianRational half(make_rational(1, 2));
  ConnectionTable out;
  for (int i = 1; i <= m.n; ++i) {
    for (int s = 1; s <= m.n; ++s) {
      for (int t = 1; t <= m.n; ++t) {
        ParamPoly w = m.christoffel(s, i, t);
        if (i == m.n && s == t) w -= m.dg(t) * half;  // frame rescaling along x_n
        if (!w.is_zero()) out[{s, t, i}] = w;
      }
    }
  }
  return out;
}

namespace detail {

/// Product of orthonormal blades (bitmasks) with e_k^2 = -1.
inline std::pair<int, unsigned> ortho_blade_mul(unsigned x, unsigned y) {
  int sign = 1;
  for (unsigned rest = x >> 1; rest; rest >>= 1) {
    if (__builtin_popcount(rest & y) % 2) sign = -sign;
  }
  if (__builtin_popcount(x & y) % 2) sign = -sign;
  return {sign, x ^ y};
}

}  // namespace detail

/// Zero-order symbol of D at x0, -(1/4) sum omega_{s,t}(e_i) c(e_i) c(e_s) c(e_t),
/// returned as the coefficient of v = c(e_n).
inline ParamPoly dirac_sigma0(const MetricJet& m) {
  std::map<unsigned, ParamPoly> acc;
  for (const auto& [key, w] : connection_coeffs(m)) {
    auto [s, t, i] = key;
    auto bit = [](int k) { return 1u << (k - 1); };
    auto [s1, b1] = detail::ortho_blade_mul(bit(i), bit(s));
    auto [s2, b2] = detail::ortho_blade_mul(b1, bit(t));
    acc[b2] += w * GaussianRational(make_rational(-s1 * s2, 4));
  }
  ParamPoly out;
  for (const auto& [blade, c] : acc) {
    if (c.is_zero()) continue;
    if (blade != (1u << (m.n - 1))) throw std::logic_error("sigma0(D) has a component off c(e_n)");
    out = c;
  }
  return out;
}

struct SecondFundamental {
  ParamPoly K;       // trace of K_ij at x0
  Expr I_Gr_b;       // 2 * K * Vol
};

inline SecondFundamental second_fundamental(const MetricJet& m) {
  const GaussianRational half(make_rational(1, 2));
  ParamPoly K;
  for (int i = 1; i < m.n; ++i) K += m.dg(i) * half;
  return {K, Expr::from_param(K * GaussianRational(2)) * Expr::vol()};
}

struct ChristoffelContract {
  ParamPoly gamma_n;                 // g^{ij} Gamma^n_ij
  std::vector<ParamPoly> gamma_tan;  // g^{ij} Gamma^k_ij, k < n
  /// sum_k xi_k delta^k at |xi'| = 1; delta^k = (a/4) c(e_k) c(e_n), so the
  /// contraction is (a/4) c(xi') c(dx_n).
  CliffordElement xi_delta;
};

inline ChristoffelContract christoffel_contract(const MetricJet& m) {
  ChristoffelContract out;
  for (int k = 1; k <= m.n; ++k) {
    ParamPoly g;
    for (int i = 1; i <= m.n; ++i) g += m.christoffel(k, i, i);
    if (k == m.n) {
      out.gamma_n = g;
    } else {
      out.gamma_tan.push_back(g);
    }
  }
  out.xi_delta = CliffordElement::blade(Blade::uv, ParamPoly::a() * GaussianRational(make_rational(1, 4)));
  return out;
}

}  // namespace wres
