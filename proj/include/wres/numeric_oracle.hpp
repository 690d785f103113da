#pragma once

#include <gsl/gsl_integration.h>

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wres/boundary_engine.hpp"
#include "wres/clifford.hpp"
#include "wres/errors.hpp"

namespace wres::oracle {

using cd = std::complex<double>;
using Mat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8>;

/// Gamma matrices E_1..E_n of size dim_s with E_k^2 = -1, from
/// Jordan-Wigner strings of Pauli blocks; U = E_1, V = E_n.
struct MatrixRep {
  int n = 0;
  int dim = 0;
  std::vector<Mat> E;

  const Mat& U() const { return E.front(); }
  const Mat& V() const { return E.back(); }
  Mat identity() const { return Mat::Identity(dim, dim); }
};

namespace detail {

inline Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  }
  return out;
}

inline Mat pauli(char which) {
  Mat m(2, 2);
  const cd I(0, 1);
  switch (which) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, -I, I, 0; break;
    case 'z': m << 1, 0, 0, -1; break;
    default: m = Mat::Identity(2, 2);
  }
  return m;
}

}  // namespace detail

inline MatrixRep make_matrix_rep(int n) {
  SpinorDim sd(n);
  int qubits = n / 2;
  auto string_op = [&](int pos, char p) {
    Mat out = Mat::Identity(1, 1);
    for (int q = 0; q < qubits; ++q) out = detail::kron(out, detail::pauli(q < pos ? 'z' : (q == pos ? p : 'i')));
    return out;
  };
  MatrixRep rep{n, sd.dim_s, {}};
  const cd I(0, 1);
  for (int q = 0; q < qubits; ++q) {
    rep.E.push_back(I * string_op(q, 'x'));
    rep.E.push_back(I * string_op(q, 'y'));
  }
  if (n % 2) rep.E.push_back(I * string_op(qubits, 'i'));
  return rep;
}

/// First-order dual number f + f' eps.
struct Dual {
  double v;
  double d;
};

inline Dual dual_pow(Dual x, double p) { return {std::pow(x.v, p), p * std::pow(x.v, p - 1) * x.d}; }

/// Symbol jet in eps = x_n (order <= E) and t = xi_n - xi0 (order <= T).
struct Jet {
  int E = 1;
  int T = 3;
  std::array<std::array<Mat, 4>, 2> c;

  static Jet zero(int dim, int E, int T) {
    Jet j;
    j.E = E;
    j.T = T;
    for (auto& row : j.c) {
      for (auto& m : row) m = Mat::Zero(dim, dim);
    }
    return j;
  }
  int dim() const { return static_cast<int>(c[0][0].rows()); }
};

inline Jet operator*(const Jet& x, const Jet& y) {
  Jet out = Jet::zero(x.dim(), std::min(x.E, y.E), std::min(x.T, y.T));
  for (int e1 = 0; e1 <= out.E; ++e1) {
    for (int e2 = 0; e1 + e2 <= out.E; ++e2) {
      for (int t1 = 0; t1 <= out.T; ++t1) {
        for (int t2 = 0; t1 + t2 <= out.T; ++t2) out.c[e1 + e2][t1 + t2].noalias() += x.c[e1][t1] * y.c[e2][t2];
      }
    }
  }
  return out;
}

inline Jet operator+(const Jet& x, const Jet& y) {
  Jet out = Jet::zero(x.dim(), std::min(x.E, y.E), std::min(x.T, y.T));
  for (int e = 0; e <= out.E; ++e) {
    for (int t = 0; t <= out.T; ++t) out.c[e][t] = x.c[e][t] + y.c[e][t];
  }
  return out;
}

inline Jet operator*(cd s, const Jet& x) {
  Jet out = x;
  for (int e = 0; e <= x.E; ++e) {
    for (int t = 0; t <= x.T; ++t) out.c[e][t] *= s;
  }
  return out;
}

inline Jet d_xi(const Jet& x) {
  Jet out = Jet::zero(x.dim(), x.E, x.T - 1);
  for (int e = 0; e <= x.E; ++e) {
    for (int t = 0; t < x.T; ++t) out.c[e][t] = static_cast<double>(t + 1) * x.c[e][t + 1];
  }
  return out;
}

inline Jet d_x(const Jet& x) {
  if (x.E < 1) throw MissingJet("oracle jet carries no x_n derivative");
  Jet out = Jet::zero(x.dim(), 0, x.T);
  for (int t = 0; t <= x.T; ++t) out.c[0][t] = x.c[1][t];
  return out;
}

inline Jet inverse(const Jet& x) {
  Jet y = Jet::zero(x.dim(), x.E, x.T);
  Mat inv0 = x.c[0][0].inverse();
  for (int e = 0; e <= x.E; ++e) {
    for (int t = 0; t <= x.T; ++t) {
      if (e == 0 && t == 0) {
        y.c[0][0] = inv0;
        continue;
      }
      Mat acc = Mat::Zero(x.dim(), x.dim());
      for (int e2 = 0; e2 <= e; ++e2) {
        for (int t2 = 0; t2 <= t; ++t2) {
          if (e2 == e && t2 == t) continue;
          acc.noalias() += x.c[e - e2][t - t2] * y.c[e2][t2];
        }
      }
      y.c[e][t] = -inv0 * acc;
    }
  }
  return y;
}

/// Leading and subleading symbols of an operator.
struct OpSymbol {
  Jet lead;
  Jet sub;
};

inline OpSymbol compose(const OpSymbol& P, const OpSymbol& Q) {
  const cd mi(0, -1);
  return {P.lead * Q.lead, P.lead * Q.sub + P.sub * Q.lead + mi * (d_xi(P.lead) * d_x(Q.lead))};
}

/// Right parametrix: P o Q = 1 on the two top orders.
inline OpSymbol invert(const OpSymbol& P) {
  const cd mi(0, -1);
  Jet ql = inverse(P.lead);
  Jet rest = P.sub * ql + mi * (d_xi(P.lead) * d_x(ql));
  return {ql, cd(-1) * (inverse(P.lead) * rest)};
}

/// Symbol of D at x0, xi = (1, 0, ..., 0, xi0 + t), from the metric
/// g = (1/phi) g_boundary + psi dx_n^2 with phi = 1 + a x_n, psi = 1 + b x_n.
class DiracModel {
 public:
  DiracModel(const MatrixRep& rep, double a, double b) : rep_(rep) {
    const int n = rep.n;
    g_.resize(n + 1);
    for (int k = 1; k <= n; ++k) g_[k] = k < n ? dual_pow({1.0, a}, -1.0) : Dual{1.0, b};
    // sigma_0(D) = -(1/4) sum omega_{s,t}(e_i) E_i E_s E_t
    sigma0_ = Mat::Zero(rep.dim, rep.dim);
    for (int i = 1; i <= n; ++i) {
      for (int s = 1; s <= n; ++s) {
        for (int t = 1; t <= n; ++t) {
          double w = christoffel(s, i, t);
          if (i == n && s == t) w += dual_pow(g_[t], -0.5).d;
          if (w != 0.0) sigma0_ += -0.25 * w * rep.E[i - 1] * rep.E[s - 1] * rep.E[t - 1];
        }
      }
    }
  }

  const Mat& sigma0() const { return sigma0_; }

  OpSymbol dirac(cd xi0, int T) const {
    const int n = rep_.n;
    const cd I(0, 1);
    Dual f1 = dual_pow(g_[1], -0.5), fn = dual_pow(g_[n], -0.5);
    Jet lead = Jet::zero(rep_.dim, 1, T);
    lead.c[0][0] = I * (f1.v * rep_.E[0] + xi0 * fn.v * rep_.E[n - 1]);
    lead.c[1][0] = I * (f1.d * rep_.E[0] + xi0 * fn.d * rep_.E[n - 1]);
    if (T >= 1) {
      lead.c[0][1] = I * fn.v * rep_.E[n - 1];
      lead.c[1][1] = I * fn.d * rep_.E[n - 1];
    }
    Jet sub = Jet::zero(rep_.dim, 0, T);
    sub.c[0][0] = sigma0_;
    return {lead, sub};
  }

  /// D^-p through the parametrix of D o ... o D.
  OpSymbol inverse_power(int p, cd xi0, int T) const {
    OpSymbol d = dirac(xi0, T);
    OpSymbol pw = d;
    for (int k = 1; k < p; ++k) pw = compose(d, pw);
    return invert(pw);
  }

 private:
  double dg(int m, int p, int q) const { return (m == rep_.n && p == q) ? g_[p].d : 0.0; }
  double christoffel(int k, int i, int j) const { return 0.5 * (dg(i, j, k) + dg(j, i, k) - dg(k, i, j)); }

  const MatrixRep& rep_;
  std::vector<Dual> g_;
  Mat sigma0_;
};

struct OracleOptions {
  int contour_nodes = 256;
  int line_nodes = 400;
  double converge_tol = 1e-10;
};

namespace detail {

struct GLTable {
  explicit GLTable(int n) : t(gsl_integration_glfixed_table_alloc(n), gsl_integration_glfixed_table_free), n(n) {}
  std::unique_ptr<gsl_integration_glfixed_table, void (*)(gsl_integration_glfixed_table*)> t;
  int n;
};

/// xi = tan(theta) nodes and weights for the real line.
inline void line_rule(int N, std::vector<double>& xs, std::vector<double>& ws) {
  GLTable gl(N);
  xs.resize(N);
  ws.resize(N);
  for (int i = 0; i < N; ++i) {
    double th, w;
    gsl_integration_glfixed_point(-std::numbers::pi / 2, std::numbers::pi / 2, i, &th, &w, gl.t.get());
    double c = std::cos(th);
    xs[i] = std::tan(th);
    ws[i] = w / (c * c);
  }
}

inline std::vector<cd> contour_nodes(cd center, int M) {
  std::vector<cd> out(M);
  for (int m = 0; m < M; ++m) out[m] = center + 0.5 * std::polar(1.0, 2 * std::numbers::pi * m / M);
  return out;
}

/// Trapezoid weights of (1/2 pi i) \oint f(eta) d eta on the circle.
inline std::vector<cd> contour_weights(int M) {
  std::vector<cd> out(M);
  for (int m = 0; m < M; ++m) out[m] = 0.5 * std::polar(1.0, 2 * std::numbers::pi * m / M) / static_cast<double>(M);
  return out;
}

inline cd cauchy_kernel(cd xi, cd eta, int k) {
  double fact = 1;
  for (int m = 2; m <= k; ++m) fact *= m;
  return (k % 2 ? -fact : fact) / std::pow(xi - eta, k + 1);
}

inline double factorial(int k) {
  double f = 1;
  for (int m = 2; m <= k; ++m) f *= m;
  return f;
}

}  // namespace detail

/// d^k/dxi^k of the principal part at +i of f, evaluated at xi off the
/// circle |eta - i| = 1/2, by the trapezoid rule.
template <class F>
cd numeric_pi_plus(F&& f, cd xi, int k = 0, int M = 256) {
  auto nodes = detail::contour_nodes(cd(0, 1), M);
  auto w = detail::contour_weights(M);
  cd acc = 0;
  for (int m = 0; m < M; ++m) acc += w[m] * f(nodes[m]) * detail::cauchy_kernel(xi, nodes[m], k);
  return acc;
}

template <class F>
cd numeric_pi_minus(F&& f, cd xi, int k = 0, int M = 256) {
  auto nodes = detail::contour_nodes(cd(0, -1), M);
  auto w = detail::contour_weights(M);
  cd acc = 0;
  for (int m = 0; m < M; ++m) acc += w[m] * f(nodes[m]) * detail::cauchy_kernel(xi, nodes[m], k);
  return acc;
}

/// Integrals (without prefactor or sphere factor) of every case of a config
/// at one quadrature resolution.
inline std::vector<cd> case_integrals(const std::vector<CaseSpec>& cases, const Config& c, const DiracModel& model,
                                      int M, int N) {
  const int dim = SpinorDim(c.n).dim_s;
  const int d2 = dim * dim;
  auto nodes = detail::contour_nodes(cd(0, 1), M);
  auto w = detail::contour_weights(M);
  std::vector<OpSymbol> A;
  A.reserve(M);
  for (const auto& eta : nodes) A.push_back(model.inverse_power(c.p1, eta, 2));
  std::vector<double> xs, ws;
  detail::line_rule(N, xs, ws);
  std::vector<OpSymbol> B;
  B.reserve(N);
  for (double x : xs) B.push_back(model.inverse_power(c.p2, cd(x, 0), 3));

  std::vector<cd> out;
  for (const auto& s : cases) {
    if (s.alpha > 0) {
      out.push_back(0);  // no x' dependence
      continue;
    }
    Eigen::MatrixXcd Amat(M, d2), Kmat(N, M), Ymat(N, d2);
    for (int m = 0; m < M; ++m) {
      const Jet& src = s.r == -c.p1 ? A[m].lead : A[m].sub;
      if (s.j > src.E) throw MissingJet("oracle: x_n derivative of left factor");
      Mat a = src.c[s.j][0];
      Amat.row(m) = Eigen::Map<const Eigen::RowVectorXcd>(a.data(), d2);
    }
    for (int q = 0; q < N; ++q) {
      for (int m = 0; m < M; ++m) Kmat(q, m) = w[m] * detail::cauchy_kernel(xs[q], nodes[m], s.k);
      const Jet& src = s.l == -c.p2 ? B[q].lead : B[q].sub;
      if (s.k > src.E || s.j + 1 > src.T) throw MissingJet("oracle: derivative of right factor");
      Mat y = detail::factorial(s.j + 1) * src.c[s.k][s.j + 1];
      Mat yt = y.transpose();
      Ymat.row(q) = Eigen::Map<const Eigen::RowVectorXcd>(yt.data(), d2);
    }
    Eigen::MatrixXcd L = Kmat * Amat;  // N x d2, pi+ of the left factor at each xi
    cd acc = 0;
    for (int q = 0; q < N; ++q) acc += ws[q] * (L.row(q).array() * Ymat.row(q).array()).sum();
    out.push_back(acc);
  }
  return out;
}

struct NumericCase {
  CaseSpec spec;
  cd value;  // prefactor * S(n-2) * integral
};

/// Every case of a config at (a, b); nodes are doubled once and the two
/// results must agree to converge_tol.
inline std::vector<NumericCase> numeric_cases(const Config& c, double a, double b, const OracleOptions& opt = {}) {
  auto cases = enumerate_cases(c);
  MatrixRep rep = make_matrix_rep(c.n);
  DiracModel model(rep, a, b);
  auto coarse = case_integrals(cases, c, model, opt.contour_nodes, opt.line_nodes);
  auto fine = case_integrals(cases, c, model, 2 * opt.contour_nodes, 2 * opt.line_nodes);
  double sphere = sphere_factor(c.n).numeric();
  std::vector<NumericCase> out;
  for (size_t i = 0; i < cases.size(); ++i) {
    double scale = std::max(std::abs(fine[i]), 1.0);
    if (std::abs(fine[i] - coarse[i]) > opt.converge_tol * scale) {
      throw QuadratureUnconverged("case " + cases[i].label + " of " + to_string(c) + " changed by " +
                                  std::to_string(std::abs(fine[i] - coarse[i])) + " when nodes were doubled");
    }
    out.push_back({cases[i], cases[i].prefactor().to_complex() * sphere * fine[i]});
  }
  return out;
}

inline cd numeric_case(const CaseSpec& spec, const Config& c, double a, double b, const OracleOptions& opt = {}) {
  for (const auto& nc : numeric_cases(c, a, b, opt)) {
    if (nc.spec.label == spec.label) return nc.value;
  }
  throw UnsupportedConfig("case " + spec.label + " not enumerated for " + to_string(c));
}

/// Value of a symbolic case at numeric (a, b).
inline cd symbolic_numeric(const CaseContribution& cc, double a, double b) {
  return cc.coefficient.evaluate(a, b) * std::numbers::pi * SphereFactor{cc.sphere_dim}.numeric();
}

struct Verdict {
  bool pass = false;
  cd symbolic;
  cd numeric;
  double error = 0;  // relative, or absolute when the symbolic value is 0
  bool absolute = false;
};

inline Verdict compare(cd symbolic, cd numeric, double tol) {
  Verdict v{false, symbolic, numeric, 0, symbolic == cd(0)};
  if (v.absolute) {
    v.error = std::abs(numeric);
    v.pass = v.error <= 1e-9;
  } else {
    v.error = std::abs(numeric - symbolic) / std::abs(symbolic);
    v.pass = v.error <= tol;
  }
  return v;
}

/// Deterministic (a, b) in [-2, 2]^2 from a 64-bit Mersenne twister.
inline std::vector<std::pair<double, double>> trial_points(uint64_t seed, int trials) {
  std::mt19937_64 gen(seed);
  auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::vector<std::pair<double, double>> out;
  for (int t = 0; t < trials; ++t) {
    double a = 4 * unit() - 2;
    double b = 4 * unit() - 2;
    out.emplace_back(a, b);
  }
  return out;
}

/// Matrix image of a Clifford element at a numeric point; odd words map to 0.
inline Mat matrix_image(const CliffordElement& x, cd xi, cd a, cd b, const MatrixRep& rep) {
  Mat U = rep.U(), V = rep.V();
  return x[Blade::one].evaluate(xi, a, b) * rep.identity() + x[Blade::u].evaluate(xi, a, b) * U +
         x[Blade::v].evaluate(xi, a, b) * V + x[Blade::uv].evaluate(xi, a, b) * (U * V);
}

}  // namespace wres::oracle
