#include <gtest/gtest.h>

#include "support.hpp"
#include "wres/symbol_jets.hpp"

using namespace wres;
using test_support::br;

namespace {

const CliffordElement U = CliffordElement::u();
const CliffordElement V = CliffordElement::v();
const CliffordElement dU = cl_dxn_substitute(Generator::u);
const CliffordElement dV = cl_dxn_substitute(Generator::v);
const BoundaryRational I(ParamPoly(GaussianRational::i()));
const BoundaryRational XI = BoundaryRational::xi();

CliffordElement sigma0(long num, long den) {
  return V * BoundaryRational(ParamPoly::a() * GaussianRational(make_rational(num, den)));
}

}  // namespace

TEST(DiracTable, ZeroOrderSymbol) {
  EXPECT_EQ(dirac_table(4).at(0).value, sigma0(-3, 4));
  EXPECT_EQ(dirac_table(6).at(0).value, sigma0(-5, 4));
  EXPECT_EQ(dirac_table(3).at(0).value, sigma0(-2, 4));
  EXPECT_FALSE(dirac_table(4).at(0).dxn.has_value());
  EXPECT_THROW(dirac_table(4).at(0).dxn_or_throw("sigma_0(D)"), MissingJet);
  EXPECT_THROW(dirac_table(5), UnsupportedDimension);
}

TEST(InverseTable, LeadingSymbols) {
  CliffordElement c = clifford_xi() * I;
  EXPECT_EQ(inverse_table(1, 4).at(-1).value, c * BoundaryRational::inv_q(1));
  EXPECT_EQ(inverse_table(2, 6).at(-2).value, CliffordElement(BoundaryRational::inv_q(1)));
  EXPECT_EQ(inverse_table(3, 6).at(-3).value, c * BoundaryRational::inv_q(2));
  EXPECT_THROW(inverse_table(4, 6), UnsupportedConfig);
  EXPECT_THROW(inverse_table(1, 4).at(-5), InsufficientOrders);
}

TEST(XiDerivative, SecondOfLeadingInverse) {
  CliffordJet d2 = xi_derivative(inverse_table(1, 4).at(-1), 2);
  CliffordElement expect = U * br("(6*i*xi_n^2 - 2*i)/(1 + xi_n^2)^3") + V * br("(2*i*xi_n^3 - 6*i*xi_n)/(1 + xi_n^2)^3");
  EXPECT_EQ(d2.value, expect);
}

TEST(XiDerivative, LeadingCubedInverse) {
  const SymbolTable t = inverse_table(3, 6);
  const CliffordJet& s = t.at(-3);
  CliffordElement d1 = U * br("-4*i*xi_n/(1 + xi_n^2)^3") + V * br("(i - 3*i*xi_n^2)/(1 + xi_n^2)^3");
  CliffordElement d2 = U * br("(20*i*xi_n^2 - 4*i)/(1 + xi_n^2)^4") + V * br("(12*i*xi_n^3 - 12*i*xi_n)/(1 + xi_n^2)^4");
  EXPECT_EQ(xi_derivative(s, 1).value, d1);
  EXPECT_EQ(xi_derivative(s, 2).value, d2);
  EXPECT_TRUE(xi_derivative(CliffordJet{U, std::nullopt}, 1).value.is_zero());
}

TEST(NormalJet, LeadingInverse) {
  // i dc(xi')/|xi|^2 + i xi_n dc(dx_n)/|xi|^2 - (i a - i xi_n^2 b) c(xi)/|xi|^4
  BoundaryRational scal = br("(i*a - i*xi_n^2*b)/(1 + xi_n^2)^2");
  CliffordElement expect = dU * (I * BoundaryRational::inv_q(1)) + dV * (I * XI * BoundaryRational::inv_q(1)) -
                           clifford_xi() * scal;
  EXPECT_EQ(*inverse_table(1, 4).at(-1).dxn, expect);
}

TEST(NormalJet, ProjectedLeadingInverse) {
  CliffordElement expect = dU * br("1/(2*(xi_n - i))") + dV * br("i/(2*(xi_n - i))") +
                           U * br("((2*i - xi_n)*a + xi_n*b)/(4*(xi_n - i)^2)") +
                           V * br("(-a + (1 + 2*i*xi_n)*b)/(4*(xi_n - i)^2)");
  EXPECT_EQ(*pi_plus(inverse_table(1, 4).at(-1)).dxn, expect);
}

TEST(Composition, DiracTimesInverse) {
  for (int n : {3, 4, 6}) {
    SymbolTable t = compose_tables(dirac_table(n), inverse_table(1, n));
    EXPECT_EQ(t.at(0).value, CliffordElement(BoundaryRational(1))) << n;
    EXPECT_TRUE(t.at(-1).value.is_zero()) << t.at(-1).value.to_string();
  }
}

TEST(Composition, InverseSquaredMatchesInverseLaplacian) {
  for (int n : {4, 6}) {
    SymbolTable t = compose_tables(inverse_table(1, n), inverse_table(1, n));
    SymbolTable lap = inverse_table(2, n);
    EXPECT_EQ(t.at(-2).value, CliffordElement(BoundaryRational::inv_q(1)));
    EXPECT_EQ(t.at(-3).value, lap.at(-3).value) << t.at(-3).value.to_string();
    // tangential contraction term: (i a / 2) c(xi') c(dx_n) / |xi|^4
    EXPECT_EQ(t.at(-3).value[Blade::uv], br("i*a/(2*(1 + xi_n^2)^2)"));
  }
}

TEST(Composition, CubedInverseOrderIndependent) {
  SymbolTable x = compose_tables(inverse_table(1, 6), inverse_table(2, 6));
  SymbolTable y = compose_tables(inverse_table(2, 6), inverse_table(1, 6));
  EXPECT_EQ(x.at(-3).value, y.at(-3).value);
  EXPECT_EQ(x.at(-4).value, y.at(-4).value);
}

TEST(Composition, Associativity) {
  SymbolTable d1 = inverse_table(1, 6);
  SymbolTable left = compose_tables(compose_tables(d1, d1), d1);
  SymbolTable right = compose_tables(d1, compose_tables(d1, d1));
  EXPECT_EQ(left.at(-3).value, right.at(-3).value);
  EXPECT_EQ(left.at(-4).value, right.at(-4).value);
}

TEST(Composition, MissingJetReported) {
  SymbolTable d = dirac_table(4);
  SymbolTable broken{"X", 4, {{-1, d.at(0)}, {-2, d.at(0)}}};
  EXPECT_THROW(compose_tables(d, broken), MissingJet);
  SymbolTable single{"Y", 4, {{-1, d.at(1)}}};
  EXPECT_THROW(compose_tables(d, single), InsufficientOrders);
}
