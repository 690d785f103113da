#pragma once

#include <map>
#include <optional>
#include <string>

#include "wres/clifford.hpp"
#include "wres/errors.hpp"
#include "wres/geometry_jet.hpp"
#include "wres/halfline.hpp"

namespace wres {

/// A symbol at x0 together with its d/dx_n; tangential derivatives vanish.
struct CliffordJet {
  CliffordElement value;
  std::optional<CliffordElement> dxn;

  const CliffordElement& dxn_or_throw(const std::string& what) const {
    if (!dxn) throw MissingJet("normal derivative of " + what + " is not available");
    return *dxn;
  }

  friend CliffordJet operator*(const CliffordJet& f, const CliffordJet& g) {
    CliffordJet out{f.value * g.value, std::nullopt};
    if (f.dxn && g.dxn) out.dxn = *f.dxn * g.value + f.value * *g.dxn;
    return out;
  }
  friend CliffordJet operator+(const CliffordJet& f, const CliffordJet& g) {
    CliffordJet out{f.value + g.value, std::nullopt};
    if (f.dxn && g.dxn) out.dxn = *f.dxn + *g.dxn;
    return out;
  }
};

inline CliffordJet xi_derivative(const CliffordJet& j, int k) {
  CliffordJet out{j.value.derivative(k), std::nullopt};
  if (j.dxn) out.dxn = j.dxn->derivative(k);
  return out;
}

inline CliffordJet pi_plus(const CliffordJet& j) {
  CliffordJet out{pi_plus(j.value), std::nullopt};
  if (j.dxn) out.dxn = pi_plus(*j.dxn);
  return out;
}

struct SymbolTable {
  std::string name;  // "D", "D^-1", ...
  int n = 0;
  std::map<int, CliffordJet> orders;

  int leading_order() const {
    if (orders.empty()) throw InsufficientOrders(name + " has no orders");
    return orders.rbegin()->first;
  }
  bool has(int order) const { return orders.count(order) > 0; }
  const CliffordJet& at(int order) const {
    auto it = orders.find(order);
    if (it == orders.end()) {
      throw InsufficientOrders("order " + std::to_string(order) + " of " + name + " is not available");
    }
    return it->second;
  }
};

namespace detail {

inline void check_dim(int n) { SpinorDim{n}; }

/// d/dx_n of |xi|^2 = g^{ij} xi_i xi_j at |xi'| = 1.
inline BoundaryRational dxn_q(const MetricJet& m) {
  return BoundaryRational(-m.dg(1)) + BoundaryRational::xi() * BoundaryRational::xi() * BoundaryRational(-m.dg(m.n));
}

/// d/dx_n of c(xi) = c(xi') + xi_n c(dx_n).
inline CliffordElement dxn_c() {
  return cl_dxn_substitute(Generator::u) + cl_dxn_substitute(Generator::v) * BoundaryRational::xi();
}

inline BoundaryRational i_const(long re, long im) { return BoundaryRational(ParamPoly(GaussianRational(re, im))); }

}  // namespace detail

inline SymbolTable dirac_table(int n) {
  detail::check_dim(n);
  MetricJet m(n);
  const BoundaryRational I = detail::i_const(0, 1);
  SymbolTable t{"D", n, {}};
  t.orders[1] = {clifford_xi() * I, detail::dxn_c() * I};
  t.orders[0] = {CliffordElement::blade(Blade::v, dirac_sigma0(m)), std::nullopt};
  return t;
}

inline SymbolTable inverse_table(int p, int n);

/// sigma(A o B) at x0 on the leading and subleading orders.
inline SymbolTable compose_tables(const SymbolTable& A, const SymbolTable& B) {
  int ra = A.leading_order(), rb = B.leading_order();
  if (!A.has(ra - 1) || !B.has(rb - 1)) {
    throw InsufficientOrders("composition " + A.name + " o " + B.name + " needs two orders of each factor");
  }
  const BoundaryRational minus_i = detail::i_const(0, -1);
  const CliffordJet &al = A.at(ra), &as = A.at(ra - 1), &bl = B.at(rb), &bs = B.at(rb - 1);
  SymbolTable out{A.name + " o " + B.name, A.n, {}};
  out.orders[ra + rb] = al * bl;
  CliffordElement sub = al.value * bs.value + as.value * bl.value +
                        al.value.derivative() * bl.dxn_or_throw(B.name) * minus_i;
  out.orders[ra + rb - 1] = {sub, std::nullopt};
  return out;
}

inline SymbolTable inverse_table(int p, int n) {
  detail::check_dim(n);
  MetricJet m(n);
  const BoundaryRational I = detail::i_const(0, 1);
  const BoundaryRational q = BoundaryRational::q();
  const BoundaryRational dq = detail::dxn_q(m);
  const CliffordElement c = clifford_xi();
  const CliffordElement dc = detail::dxn_c();
  if (p == 1) {
    SymbolTable t{"D^-1", n, {}};
    t.orders[-1] = {c * (I * BoundaryRational::inv_q(1)),
                    dc * (I * BoundaryRational::inv_q(1)) - c * (I * dq * BoundaryRational::inv_q(2))};
    CliffordElement s0 = dirac_table(n).at(0).value;
    CliffordElement sub = c * s0 * c * BoundaryRational::inv_q(2) +
                          c * CliffordElement::v() * (dc * q - c * dq) * BoundaryRational::inv_q(3);
    t.orders[-2] = {sub, std::nullopt};
    return t;
  }
  if (p == 2) {
    ChristoffelContract g = christoffel_contract(m);
    SymbolTable t{"D^-2", n, {}};
    t.orders[-2] = {CliffordElement(BoundaryRational::inv_q(1)), CliffordElement(-dq * BoundaryRational::inv_q(2))};
    const BoundaryRational xi = BoundaryRational::xi();
    CliffordElement gamma_term = CliffordElement(xi * BoundaryRational(g.gamma_n)) - g.xi_delta * BoundaryRational(2);
    CliffordElement sub = gamma_term * (-I * BoundaryRational::inv_q(2)) +
                          CliffordElement(xi * dq * BoundaryRational::inv_q(3) * detail::i_const(0, -2));
    t.orders[-3] = {sub, std::nullopt};
    return t;
  }
  if (p == 3) {
    SymbolTable t = compose_tables(inverse_table(1, n), inverse_table(2, n));
    t.name = "D^-3";
    return t;
  }
  throw UnsupportedConfig("inverse power " + std::to_string(p) + " not in {1, 2, 3}");
}

}  // namespace wres
