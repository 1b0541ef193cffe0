#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace asmlab;

namespace {

const std::vector<std::vector<int>> kFive = {
    {0, 1, 0, 0, 0}, {1, -1, 0, 1, 0}, {0, 1, 0, -1, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}};

Rational at(const MPoly& f, long z, long rho, long tau) {
  Assignment a;
  a.z = Rational(z);
  a.rho = Rational(rho);
  a.tau = Rational(tau);
  return f.evaluate(a);
}

}  // namespace

TEST(Asm, ValidateExamples) {
  EXPECT_NO_THROW(Asm::validate(kFive));
  EXPECT_NO_THROW(Asm::identity(6));
  EXPECT_THROW(Asm::validate({{1, -1}, {-1, 1}}), NotAlternating);
  EXPECT_THROW(Asm::validate({{1, 0}, {1, 0}}), NotAlternating);
  EXPECT_THROW(Asm::validate({{2}}), NotAlternating);
  EXPECT_THROW(Asm::validate({{1, 0}}), UnsupportedSize);
}

TEST(Asm, StatsExamples) {
  EXPECT_EQ(Asm::validate(kFive).stats(), (Stats{2, 2, 3}));
  EXPECT_EQ(Asm::validate({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}).stats(), (Stats{1, 2, 2}));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(Asm::identity(n).stats(), (Stats{0, 1, n}));
}

TEST(Asm, ParseRoundTrip) {
  Asm a = Asm::validate(kFive);
  EXPECT_EQ(Asm::parse(a.toText()), a);
  EXPECT_THROW(Asm::parse("1 x\n0 1\n"), ParseError);
}

TEST(Enumerate, SmallOrdersExactly) {
  auto one = enumerateAsms(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Asm::identity(1));

  auto three = enumerateAsms(3);
  std::set<Asm> got(three.begin(), three.end());
  EXPECT_EQ(got.size(), 7u);
  std::set<Asm> listed;
  for (auto g : std::vector<std::vector<std::vector<int>>>{
           {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
           {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
           {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
           {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
           {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
           {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
           {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}})
    listed.insert(Asm::validate(g));
  EXPECT_EQ(got, listed);
}

TEST(Enumerate, CountsMatchClosedForm) {
  const std::vector<long> expected = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(countClosedForm(n), expected[n - 1]);
    std::vector<Asm> all = enumerateAsms(n);
    EXPECT_EQ(all.size(), static_cast<std::size_t>(expected[n - 1]));
    std::set<Asm> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size()) << n;
  }
  EXPECT_EQ(countClosedForm(7), 218348);
  EXPECT_THROW(countClosedForm(0), UnsupportedSize);
}

TEST(Enumerate, WalkerStatsMatchMatrixStats) {
  for (int n = 1; n <= 5; ++n) {
    walkTriangles(n, [](const TriangleView& v) {
      Asm a = v.toAsm();
      EXPECT_EQ(v.stats(), oracle::statsFromMatrix(a));
      EXPECT_EQ(a.stats(), oracle::statsFromMatrix(a));
    });
  }
}

TEST(Enumerate, CeilingGuard) {
  EXPECT_THROW(checkOrder(10, EnumOptions{}), CeilingExceeded);
  EnumOptions deep;
  deep.allowBeyondCeiling = true;
  EXPECT_NO_THROW(checkOrder(10, deep));
  EXPECT_THROW(checkOrder(13, deep), CeilingExceeded);
  EXPECT_THROW(checkOrder(0, deep), UnsupportedSize);
}

TEST(Enumerate, ThreadCountDoesNotChangeResult) {
  EnumOptions one;
  one.threads = 1;
  EnumOptions four;
  four.threads = 4;
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(genFun(n, one), genFun(n, four)) << n;
}

TEST(GenFun, Examples) {
  EXPECT_EQ(genFun(1).toString(), "rho*tau");
  EXPECT_EQ(genFun(2), MPoly::parse("rho*tau^2 + rho^2*tau"));
  EXPECT_EQ(genFun(3), MPoly::parse("rho*tau^3 + rho^2*tau^3 + rho*tau^2 + rho^2*tau + rho^3*tau^2 + rho^3*tau + z*rho^2*tau^2"));
}

TEST(GenFun, MatchesMaterializedMatrices) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(genFun(n), oracle::genFunFromMatrices(n)) << n;
}

TEST(GenFun, TotalAndRefinedCounts) {
  for (int n = 1; n <= 7; ++n) {
    MPoly g = genFun(n);
    EXPECT_EQ(at(g, 1, 1, 1), Rational(countClosedForm(n))) << n;
    EXPECT_TRUE(g.hasIntegerCoefficients());
    for (const auto& [m, c] : g.terms()) EXPECT_GT(c, 0);
  }
  for (int n = 1; n <= 6; ++n) {
    MPoly byRho = genFun(n).specialize(Var::z, 1).specialize(Var::tau, 1);
    for (int r = 1; r <= n; ++r)
      EXPECT_EQ(byRho.coefficient(Monomial::of(Var::rho, r)), Rational(refinedClosedForm(n, r))) << n << "," << r;
  }
  EXPECT_EQ(refinedClosedForm(3, 2), 3);
  EXPECT_EQ(refinedClosedForm(2, 1), 1);
}

TEST(GenFun, SymmetricInRhoAndTau) {
  for (int n = 1; n <= 6; ++n) {
    MPoly g = genFun(n);
    MPoly swapped;
    for (const auto& [m, c] : g.terms()) {
      Monomial s = m;
      s[Var::rho] = m[Var::tau];
      s[Var::tau] = m[Var::rho];
      swapped += MPoly::term(c, s);
    }
    EXPECT_EQ(swapped, g) << n;
  }
}

TEST(GenFun, TwoEnumeration) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(at(genFun(n), 2, 1, 1), Rational(ipow(2, n * (n - 1) / 2))) << n;
}

TEST(Hsasm, Examples) {
  EXPECT_EQ(hsasmGenFun(1), MPoly(1));
  EXPECT_EQ(hsasmGenFun(2), MPoly::parse("rho^2 + rho*z + 1"));
  EXPECT_EQ(at(hsasmGenFun(2), 1, 1, 1), Rational(3));
}

TEST(Hsasm, FilterMatchesSymmetricWalk) {
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(hsasmGenFun(m), hsasmGenFunSymmetric(m)) << m;
}

TEST(Hsasm, MiddleRowAndFirstColumnRange) {
  for (int m = 1; m <= 3; ++m) {
    const int n = 2 * m + 1;
    int seen = 0;
    for (const Asm& a : enumerateAsms(n)) {
      if (!a.isHorizontallySymmetric()) continue;
      ++seen;
      for (int j = 0; j < n; ++j) EXPECT_EQ(a(m, j), j % 2 == 0 ? 1 : -1);
      Stats s = a.stats();
      EXPECT_GE(s.f, 2);
      EXPECT_LE(s.f, n - 1);
      EXPECT_EQ((s.mu - m) % 2, 0);
    }
    EXPECT_EQ(Rational(seen), at(hsasmGenFunSymmetric(m), 1, 1, 1)) << m;
  }
}
