#include <gtest/gtest.h>

#include "support.hpp"
#include "wres/clifford.hpp"

using namespace wres;
using test_support::Rng;

namespace {

const CliffordElement U = CliffordElement::u();
const CliffordElement V = CliffordElement::v();
const CliffordElement dU = cl_dxn_substitute(Generator::u);
const CliffordElement dV = cl_dxn_substitute(Generator::v);

BoundaryRational tr(const CliffordElement& x, int n) { return cl_trace(x, SpinorDim(n)); }
BoundaryRational lit(const ParamPoly& p) { return BoundaryRational(p); }

}  // namespace

TEST(CliffordMul, BasisProducts) {
  EXPECT_EQ(cl_mul(U, V), CliffordElement::uv());
  EXPECT_EQ(cl_mul(CliffordElement::uv(), U), V);
  EXPECT_EQ(cl_mul(V, U), -CliffordElement::uv());
  EXPECT_EQ(cl_mul(U, U), CliffordElement(BoundaryRational(-1)));
  EXPECT_EQ(cl_mul(CliffordElement::uv(), CliffordElement::uv()), CliffordElement(BoundaryRational(-1)));
}

TEST(CliffordMul, NullSquare) {
  CliffordElement x = U + V * BoundaryRational(ParamPoly(GaussianRational::i()));
  EXPECT_TRUE(cl_mul(x, x).is_zero());
}

TEST(CliffordMul, OddSector) {
  CliffordElement w = CliffordElement::odd(BoundaryRational(1), "xi_k e_k e_n");
  EXPECT_THROW(w * w, OddOddProduct);
  EXPECT_THROW(w * U, OddOddProduct);
  EXPECT_FALSE((w * V).odd_part().empty());
  EXPECT_TRUE(tr(w * V, 4).is_zero());
}

TEST(CliffordDims, SupportedOnly) {
  EXPECT_EQ(SpinorDim(3).dim_s, 2);
  EXPECT_EQ(SpinorDim(4).dim_s, 4);
  EXPECT_EQ(SpinorDim(6).dim_s, 8);
  EXPECT_THROW(SpinorDim(5), UnsupportedDimension);
}

TEST(TraceTable, DimensionFour) {
  const ParamPoly a = ParamPoly::a(), b = ParamPoly::b();
  EXPECT_EQ(tr(U * V, 4), lit(0));
  EXPECT_EQ(tr(V * V, 4), lit(-4));
  EXPECT_EQ(tr(U * U, 4), lit(-4));
  EXPECT_EQ(tr(dU * V, 4), lit(0));
  EXPECT_EQ(tr(dU * U, 4), lit(a * GaussianRational(-2)));
  EXPECT_EQ(tr(dV * U, 4), lit(0));
  EXPECT_EQ(tr(dV * V, 4), lit(b * GaussianRational(2)));
}

TEST(TraceTable, DimensionSix) {
  const ParamPoly a = ParamPoly::a(), b = ParamPoly::b();
  EXPECT_EQ(tr(U * V, 6), lit(0));
  EXPECT_EQ(tr(V * V, 6), lit(-8));
  EXPECT_EQ(tr(U * U, 6), lit(-8));
  EXPECT_EQ(tr(dU * V, 6), lit(0));
  EXPECT_EQ(tr(dU * U, 6), lit(a * GaussianRational(-4)));
  EXPECT_EQ(tr(dV * U, 6), lit(0));
  EXPECT_EQ(tr(dV * V, 6), lit(b * GaussianRational(4)));
}

TEST(TraceTable, DimensionThree) {
  EXPECT_EQ(tr(CliffordElement(BoundaryRational(1)), 3), lit(2));
  EXPECT_EQ(tr(U * V, 3), lit(0));
  EXPECT_EQ(tr(V * V, 3), lit(-2));
  EXPECT_EQ(tr(U * U, 3), lit(-2));
}

TEST(CliffordProperties, TraceCyclicity) {
  Rng rng;
  for (int t = 0; t < 100; ++t) {
    CliffordElement x = rng.element(false), y = rng.element();
    EXPECT_EQ(tr(x * y, 4), tr(y * x, 4));
  }
}

TEST(CliffordProperties, AssociativeAndBilinear) {
  Rng rng;
  for (int t = 0; t < 100; ++t) {
    CliffordElement x = rng.element(false), y = rng.element(false), z = rng.element();
    EXPECT_EQ((x * y) * z, x * (y * z));
    BoundaryRational s(ParamPoly(rng.gauss()));
    EXPECT_EQ(x * (y + z * s), x * y + (x * z) * s);
  }
}

TEST(CliffordText, Serialization) {
  CliffordElement x = U * BoundaryRational::inv_q(1) + CliffordElement::uv();
  EXPECT_NE(x.to_string().find("*u"), std::string::npos);
  EXPECT_NE(x.to_string().find("*uv"), std::string::npos);
}
