#include <gtest/gtest.h>

#include "support.hpp"
#include "wres/boundary_engine.hpp"

using namespace wres;
using test_support::Rng;

namespace {

Expr value_of(const Config& c, const std::string& label) {
  for (const auto& s : enumerate_cases(c)) {
    if (s.label == label) return case_value(s, c).value();
  }
  throw std::runtime_error("no case " + label);
}

std::vector<std::string> labels(const Config& c) {
  std::vector<std::string> out;
  for (const auto& s : enumerate_cases(c)) out.push_back(s.label);
  return out;
}

}  // namespace

TEST(Enumerate, CaseLists) {
  std::vector<std::string> five{"aI", "aII", "aIII", "b", "c"};
  EXPECT_EQ(labels({4, 1, 1}), five);
  EXPECT_EQ(labels({6, 2, 2}), five);
  EXPECT_EQ(labels({6, 1, 3}), five);
  auto c3 = enumerate_cases({3, 1, 1});
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].r, -1);
  EXPECT_EQ(c3[0].l, -1);
  EXPECT_EQ(c3[0].prefactor(), GaussianRational(0, -1));
}

TEST(Enumerate, ConstraintAndPrefactors) {
  for (const auto& c : supported_configs()) {
    for (const auto& s : enumerate_cases(c)) {
      EXPECT_EQ(s.r - s.k - s.alpha + s.l - s.j - 1, -c.n);
      EXPECT_TRUE(s.r <= -c.p1 && s.r >= -c.p1 - 1);
      EXPECT_TRUE(s.l <= -c.p2 && s.l >= -c.p2 - 1);
    }
  }
  auto c = enumerate_cases({6, 1, 3});
  EXPECT_EQ(c[0].prefactor(), GaussianRational(-1));
  EXPECT_EQ(c[1].prefactor(), GaussianRational(make_rational(-1, 2)));
  EXPECT_EQ(c[2].prefactor(), GaussianRational(make_rational(-1, 2)));
  EXPECT_EQ(c[3].prefactor(), GaussianRational(0, -1));
  EXPECT_EQ((std::pair{c[3].r, c[3].l}), (std::pair{-2, -3}));
  EXPECT_EQ((std::pair{c[4].r, c[4].l}), (std::pair{-1, -4}));
  // (6,2,2) lists the subleading-l term as b
  auto d = enumerate_cases({6, 2, 2});
  EXPECT_EQ((std::pair{d[3].r, d[3].l}), (std::pair{-2, -3}));
}

TEST(Enumerate, UnsupportedConfigListsSupported) {
  try {
    enumerate_cases({5, 1, 1});
    FAIL();
  } catch (const UnsupportedConfig& e) {
    EXPECT_NE(std::string(e.what()).find("(3,1,1), (4,1,1), (6,2,2), (6,1,3)"), std::string::npos);
  }
}

TEST(CaseValues, DimensionFour) {
  EXPECT_EQ(value_of({4, 1, 1}, "aI"), Expr());
  EXPECT_EQ(value_of({4, 1, 1}, "aII"), parse_expr("(-1/8)*(3*a + b)*pi*S(2)"));
  EXPECT_EQ(value_of({4, 1, 1}, "aIII"), parse_expr("(1/8)*(3*a + b)*pi*S(2)"));
  EXPECT_EQ(value_of({4, 1, 1}, "b"), parse_expr("(1/8)*(9*a - b)*pi*S(2)"));
  EXPECT_EQ(value_of({4, 1, 1}, "c"), parse_expr("(-1/8)*(9*a - b)*pi*S(2)"));
}

TEST(CaseValues, DimensionSixSquared) {
  EXPECT_EQ(value_of({6, 2, 2}, "aII"), parse_expr("(-1/8)*(5*a + b)*pi*S(4)"));
  EXPECT_EQ(value_of({6, 2, 2}, "aIII"), parse_expr("(1/8)*(5*a + b)*pi*S(4)"));
  EXPECT_EQ(value_of({6, 2, 2}, "b"), parse_expr("(-1/8)*(15*a - b)*pi*S(4)"));
  EXPECT_EQ(value_of({6, 2, 2}, "c"), parse_expr("(1/8)*(15*a - b)*pi*S(4)"));
}

TEST(CaseValues, DimensionSixMixed) {
  EXPECT_EQ(value_of({6, 1, 3}, "aII"), parse_expr("(-1/16)*(15*a + 7*b)*pi*S(4)"));
  EXPECT_EQ(value_of({6, 1, 3}, "aIII"), parse_expr("(1/16)*(25*a + b)*pi*S(4)"));
  EXPECT_EQ(value_of({6, 1, 3}, "b"), parse_expr("(1/16)*(55*a - b)*pi*S(4)"));
  EXPECT_EQ(value_of({6, 1, 3}, "c"), parse_expr("(-1/16)*(65*a - 7*b)*pi*S(4)"));
}

TEST(CaseValues, DimensionThree) { EXPECT_EQ(value_of({3, 1, 1}, "lead"), parse_expr("(1/2)*pi*S(1)")); }

TEST(CaseValues, AntisymmetricCancellation) {
  for (Config c : {Config{4, 1, 1}, Config{6, 2, 2}}) {
    EXPECT_TRUE((value_of(c, "aII") + value_of(c, "aIII")).is_zero());
    EXPECT_TRUE((value_of(c, "b") + value_of(c, "c")).is_zero());
  }
}

TEST(CaseValues, LinearAndScaling) {
  std::vector<ParamPoly> values;
  for (const auto& c : supported_configs()) {
    if (c.n == 3) continue;  // metric-independent leading term
    EngineTables tab = build_tables(c);
    for (const auto& s : enumerate_cases(c)) values.push_back(case_value(s, c, tab).coefficient);
  }
  Rng rng;
  for (int t = 0; t < 100; ++t) {
    GaussianRational a(rng.rat()), b(rng.rat()), lam(rng.rat());
    for (const auto& v : values) {
      EXPECT_TRUE(v.constant_term().is_zero());
      EXPECT_EQ(v.substitute(lam * a, lam * b), lam * v.substitute(a, b));
      EXPECT_EQ(v.substitute(a, b), v.coefficient({1, 0}) * a + v.coefficient({0, 1}) * b);
    }
  }
}

TEST(PhiTotal, Values) {
  EXPECT_TRUE(phi_total({4, 1, 1}).phi_total.is_zero());
  EXPECT_TRUE(phi_total({4, 1, 1}).phi_agrees);
  EXPECT_TRUE(phi_total({6, 2, 2}).phi_total.is_zero());
  EXPECT_TRUE(phi_total({6, 1, 3}).phi_total.is_zero());
  EXPECT_EQ(phi_total({3, 1, 1}).phi_total, parse_expr("(1/2)*pi*S(1)"));
}

TEST(PhiTotal, ReportContents) {
  TheoremReport r = phi_total({6, 1, 3});
  EXPECT_EQ(r.cases.size(), 5u);
  EXPECT_EQ(r.interior_constant, parse_expr("(-5/3)*Omega(5)"));
  EXPECT_EQ(r.K, parse_expr("(-5/2)*a"));
  EXPECT_FALSE(r.special_c.has_value());
  ASSERT_TRUE(r.special_c_error.has_value());
  int disagreements = 0;
  for (const auto& c : r.cases) disagreements += !c.agrees;
  EXPECT_EQ(disagreements, 1);
}

TEST(ResForms, Ratios) {
  EXPECT_EQ(res_form("res11").ratio, parse_expr("(1/6)*pi*S(2)"));
  EXPECT_EQ(res_form("res21").ratio, parse_expr("(-1/3)*pi*S(2)"));
  EXPECT_EQ(res_form("res22").ratio, parse_expr("(3/20)*pi*S(4)"));
  EXPECT_EQ(res_form("res23").ratio, parse_expr("(7/20)*pi*S(4)"));
  EXPECT_TRUE(res_form("res11").agrees);
  EXPECT_THROW(res_form("res99"), UnsupportedConfig);
}

TEST(SpecialC, SolveWithSyntheticBoundary) {
  // a boundary term with a b component is solvable; the residual vanishes at the root
  ParamPoly phi = ParamPoly::a() * GaussianRational(make_rational(-40, 16)) +
                  ParamPoly::b() * GaussianRational(make_rational(11, 16));
  Expr interior = parse_expr("(-5/3)*Omega(5)");
  Expr c = solve_special_c(phi, interior);
  EXPECT_EQ(to_published_symbols(c), parse_expr("40/11 + (6400/33)*Omega(5)/Omega(4)"));
  Expr lhs = (Expr(phi.coefficient({1, 0})) + Expr(phi.coefficient({0, 1})) * c) * Expr::pi() * Expr::sphere(4);
  Expr rhs = Expr(2) * Expr(16) * Expr::pi() * interior * Expr(make_rational(-5, 2));
  EXPECT_TRUE((lhs - rhs).is_zero());
  EXPECT_THROW(solve_special_c(ParamPoly::a(), interior), DegenerateProportionality);
}
