#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace asmlab;

namespace {

const char* kB6 =
    "z^3*rho^2 + 3*z^2*rho^3 + 2*z*rho^4 + 6*z^2*rho^2 + 20*z*rho^3 + 12*rho^4 + 3*z^2*rho + 26*z*rho^2 + "
    "12*rho^3 + 20*z*rho + 12*rho^2 + 2*z + 12*rho + 12";

MPoly zOnly(const MPoly& f) { return f.specialize(Var::rho, 1).specialize(Var::tau, 1); }

}  // namespace

TEST(Kuperberg, KnownSmallPolynomials) {
  auto b = kuperbergB(4);
  ASSERT_EQ(b.size(), 5u);
  EXPECT_EQ(b[0].poly, MPoly(1));
  EXPECT_EQ(b[1].poly, MPoly(1));
  EXPECT_EQ(b[2].poly, MPoly(1));
  EXPECT_EQ(b[3].poly, MPoly::parse("z + 6"));
  EXPECT_EQ(b[4].poly, MPoly::parse("z + 2"));
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(b[k].index, static_cast<int>(k) + 1);
}

TEST(Kuperberg, FactorizationsHold) {
  auto b = kuperbergB(7);
  auto B = [&](int idx) { return b[idx - 1].poly; };
  for (int n = 1; n <= 7; ++n) {
    MPoly a = zOnly(genFun(n));
    if (n % 2) {
      EXPECT_EQ(a, B(n) * B(n + 1)) << n;
    } else {
      EXPECT_EQ(a, B(n).scaled(2) * B(n + 1)) << n;
    }
  }
  EXPECT_EQ(zOnly(genFun(3)), MPoly::parse("z + 6"));
  EXPECT_EQ(zOnly(genFun(4)), MPoly::parse("2*z^2 + 16*z + 24"));
  for (const auto& x : b) {
    EXPECT_TRUE(x.poly.hasIntegerCoefficients());
    Assignment one;
    one.z = Rational(1);
    EXPECT_GT(x.poly.evaluate(one), 0);
  }
}

TEST(Kuperberg, OddIndicesMatchHsasmCounts) {
  auto b = kuperbergB(6);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(b[2 * m].poly, hsasmGenFun(m).specialize(Var::rho, 1)) << m;
}

TEST(Conjecture, KnownRefinedPolynomials) {
  ConjectureResult three = conjectureCheck(3);
  EXPECT_TRUE(three.report.pass);
  ASSERT_TRUE(three.b);
  EXPECT_EQ(three.bIndex, 4);
  EXPECT_EQ(*three.b, MPoly::parse("2*rho^2 + rho*z + 2*rho + 2"));

  ConjectureResult five = conjectureCheck(5);
  EXPECT_TRUE(five.report.pass);
  ASSERT_TRUE(five.b);
  EXPECT_EQ(*five.b, MPoly::parse(kB6));
  EXPECT_TRUE(five.nonnegative);
}

TEST(Conjecture, EvenOrderFactorization) {
  const MPoly rho = MPoly::variable(Var::rho);
  MPoly a4 = genFun(4).specialize(Var::tau, 1);
  EXPECT_EQ(a4, rho * (rho + 1) * MPoly::parse("z + 6") * MPoly::parse("rho^2 + rho*z + 1"));
  EXPECT_EQ(genFun(2).specialize(Var::tau, 1), rho * (rho + 1));
  ConjectureResult four = conjectureCheck(4);
  EXPECT_TRUE(four.report.pass);
  EXPECT_EQ(four.bIndex, 5);
}

TEST(Conjecture, HoldsThroughSeven) {
  for (int n = 2; n <= 7; ++n) {
    ConjectureResult r = conjectureCheck(n);
    EXPECT_TRUE(r.report.pass) << n << ": " << r.report.witness.value_or("");
    ASSERT_TRUE(r.b);
    EXPECT_TRUE(r.b->hasIntegerCoefficients());
  }
  EXPECT_THROW(conjectureCheck(1), UnsupportedSize);
  EXPECT_THROW(conjectureCheck(10), CeilingExceeded);
}
