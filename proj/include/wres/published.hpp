#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wres/expr.hpp"

namespace wres {

struct Config {
  int n;
  int p1;
  int p2;
  friend auto operator<=>(const Config&, const Config&) = default;
};

inline std::string to_string(const Config& c) {
  return "(" + std::to_string(c.n) + "," + std::to_string(c.p1) + "," + std::to_string(c.p2) + ")";
}

inline const std::vector<Config>& supported_configs() {
  static const std::vector<Config> configs{{3, 1, 1}, {4, 1, 1}, {6, 2, 2}, {6, 1, 3}};
  return configs;
}

/// Published values in the S(d) convention (S(d) = volume of the unit d-sphere).
namespace published {

inline std::optional<Expr> case_value(const Config& c, const std::string& label) {
  static const std::map<std::pair<Config, std::string>, std::string> table{
      {{{4, 1, 1}, "aI"}, "0"},
      {{{4, 1, 1}, "aII"}, "(-1/8)*(3*a + b)*pi*S(2)"},
      {{{4, 1, 1}, "aIII"}, "(1/8)*(3*a + b)*pi*S(2)"},
      {{{4, 1, 1}, "b"}, "(1/8)*(9*a - b)*pi*S(2)"},
      {{{4, 1, 1}, "c"}, "(-1/8)*(9*a - b)*pi*S(2)"},
      {{{6, 2, 2}, "aI"}, "0"},
      {{{6, 2, 2}, "aII"}, "(-1/8)*(5*a + b)*pi*S(4)"},
      {{{6, 2, 2}, "aIII"}, "(1/8)*(5*a + b)*pi*S(4)"},
      {{{6, 2, 2}, "b"}, "(-3/8)*(5*a - b)*pi*S(4)"},
      {{{6, 2, 2}, "c"}, "(3/8)*(5*a - b)*pi*S(4)"},
      {{{6, 1, 3}, "aI"}, "0"},
      {{{6, 1, 3}, "aII"}, "(-1/16)*(15*a + 7*b)*pi*S(4)"},
      {{{6, 1, 3}, "aIII"}, "(1/16)*(25*a + b)*pi*S(4)"},
      {{{6, 1, 3}, "b"}, "(1/16)*(55*a - b)*pi*S(4)"},
      {{{6, 1, 3}, "c"}, "(-3/16)*(35*a - 6*b)*pi*S(4)"},
      {{{3, 1, 1}, "lead"}, "(1/2)*i*pi*S(1)"},
  };
  auto it = table.find({c, label});
  if (it == table.end()) return std::nullopt;
  return parse_expr(it->second);
}

inline Expr phi_total(const Config& c) {
  if (c == Config{6, 1, 3}) return parse_expr("(-1/16)*(40*a - 11*b)*pi*S(4)");
  if (c == Config{3, 1, 1}) return parse_expr("(1/2)*i*pi*S(1)");
  return Expr();
}

/// Cited interior coefficient of the integral of the scalar curvature.
inline Expr interior_constant(const Config& c) {
  if (c == Config{4, 1, 1}) return parse_expr("(-1/3)*Omega(4)");
  if (c == Config{6, 2, 2}) return parse_expr("(-5/3)*Omega(6)");
  if (c == Config{6, 1, 3}) return parse_expr("(-5/3)*Omega(5)");
  return Expr();
}

/// Ratio of each res form to I_Gr_b at b = a.
inline const std::map<std::string, std::string>& res_ratios() {
  static const std::map<std::string, std::string> table{
      {"res11", "(1/6)*pi*S(2)"},
      {"res21", "(-1/3)*pi*S(2)"},
      {"res22", "(3/20)*pi*S(4)"},
      {"res23", "(3/10)*pi*S(4)"},
  };
  return table;
}

/// Special constant c in psi'(0) = c phi'(0), published symbols.
inline Expr special_c() { return parse_expr("40/11 + (6400/33)*Omega(5)/Omega(4)"); }

}  // namespace published

enum class DiscrepancyKind { superseded_intermediate, convention, final_value };

inline const char* kind_name(DiscrepancyKind k) {
  switch (k) {
    case DiscrepancyKind::superseded_intermediate: return "paper intermediate superseded";
    case DiscrepancyKind::convention: return "convention divergence";
    case DiscrepancyKind::final_value: return "deviation from published final";
  }
  return "?";
}

struct Discrepancy {
  std::string id;
  DiscrepancyKind kind;
  std::string published;
  std::string derived;
  std::string note;
};

inline constexpr int kRegistryVersion = 1;

/// Known disagreements between published formulas and the engine.
inline const std::vector<Discrepancy>& discrepancy_registry() {
  static const std::vector<Discrepancy> reg{
      {"dxn-inverse-laplacian", DiscrepancyKind::superseded_intermediate,
       "normal derivative of sigma_-2(D^-2) printed over (1 + xi_n^2)^3",
       "-(a - b*xi_n^2)/(1 + xi_n^2)^2",
       "direct differentiation of 1/|xi|^2"},
      {"pi-plus-dxn-inverse-laplacian", DiscrepancyKind::superseded_intermediate,
       "numerator (i*xi_n^2 + 2)*a - i*xi_n*b, which does not decay",
       "(2*a + i*(a - b)*xi_n)/(4*(xi_n - i)^2)",
       "the (6,2,2) aII final value is reproduced from the derived form"},
      {"a-term-dimension-six", DiscrepancyKind::superseded_intermediate,
       "A term reused from dimension four (sigma_0(D) coefficient -3/4)",
       "A = -(5/8)*i*a*u/(xi_n - i)^2 + (5/8)*a*v/(xi_n - i)^2",
       "recomputed with sigma_0(D) = -(5/4)*a*v; the (6,1,3) b final value is reproduced"},
      {"dimension-three-prefactor", DiscrepancyKind::convention,
       "(1/2)*i*pi*Omega(2)",
       "(1/2)*pi*S(1)",
       "the (-i) prefactor is applied uniformly to every case; magnitudes agree"},
      {"sphere-volume-indexing", DiscrepancyKind::convention,
       "Omega(3) for n = 4 and Omega(4) for n = 6",
       "S(2) = 4*pi and S(4) = 8*pi^2/3",
       "reports carry S(n-2); the published symbol is shown alongside"},
      {"interior-symbol-index", DiscrepancyKind::convention,
       "interior coefficient -5/3 with Omega(5) for (6,1,3) and Omega(6) for (6,2,2)",
       "both stored as cited",
       "not adjudicated"},
      {"inverse-laplacian-subleading-contraction", DiscrepancyKind::final_value,
       "scalar part of sigma_-3(D^-2) uses (a - b) for the contraction xi^n xi_a xi_b d_n g^ab",
       "-2*i*xi_n*(a - b*xi_n^2)/(1 + xi_n^2)^3, confirmed by composing D^-1 o D^-1",
       "changes (6,2,2) b, c to -/+ (1/8)*(15*a - b)*pi*S(4) and the res23 ratio to (7/20)*pi*S(4)"},
      {"d-xi-sigma-4-cubed-inverse", DiscrepancyKind::final_value,
       "closed form of d/dxi_n sigma_-4(D^-3) with (59*xi_n + 27*xi_n^3)*a leading coefficient",
       "triple composition; agrees with D^-2 o D^-1 and with inverting D o D o D",
       "changes (6,1,3) c to (-1/16)*(65*a - 7*b)*pi*S(4), so Phi(6,1,3) = 0 and the special-c solve is degenerate"},
  };
  return reg;
}

}  // namespace wres
