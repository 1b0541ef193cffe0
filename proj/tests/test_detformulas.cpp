#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace asmlab;

namespace {

QuadExt gi(long a, long b = 0) { return QuadExt(Root::i, a, b); }

MPoly alternatingBracket(int k) { return k % 2 ? qint(k) : -qint(k); }

void expectPass(const Report& r) { EXPECT_TRUE(r.pass) << r.check << " n=" << r.n << ": " << r.witness.value_or(""); }

}  // namespace

TEST(Tables, DeltaAndSigmaAgreeWithRootEvaluation) {
  for (int k = -12; k <= 12; ++k) {
    EXPECT_EQ(evalRoot(alternatingBracket(k), Root::omegaMinus), QuadExt(Root::omegaMinus, deltaMinus(k))) << k;
    EXPECT_EQ(evalRoot(alternatingBracket(k), Root::omegaPlus), QuadExt(Root::omegaPlus, deltaPlus(k))) << k;
    QuadExt minusI = -QuadExt::zeta(Root::i);
    QuadExt direct = (gi(1) - minusI.pow(k)) / (gi(1) + QuadExt::zeta(Root::i));
    EXPECT_EQ(sigma(k), direct) << k;
  }
}

TEST(Tables, PeriodsAndValues) {
  EXPECT_EQ((std::vector<int>{deltaMinus(0), deltaMinus(1), deltaMinus(2), deltaMinus(3), deltaMinus(4), deltaMinus(5)}),
            (std::vector<int>{0, 1, 1, 0, -1, -1}));
  EXPECT_EQ((std::vector<int>{deltaPlus(0), deltaPlus(1), deltaPlus(2)}), (std::vector<int>{0, 1, -1}));
  EXPECT_EQ(sigma(2), gi(1, -1));
  EXPECT_EQ(sigma(3), gi(0, -1));
  for (int k = -20; k <= 20; ++k) {
    EXPECT_EQ(deltaMinus(k), deltaMinus(k + 6));
    EXPECT_EQ(deltaPlus(k), deltaPlus(k + 3));
    EXPECT_EQ(sigma(k), sigma(k + 4));
  }
}

TEST(NamedMatrices, KnownTwoEnumerationMatrices) {
  auto mb = behrendMatrix(4);
  EXPECT_EQ(mb, SqMatrix<Integer>::fromRows({{1, 1, 1, 1}, {0, 2, 3, 4}, {2, 4, 9, 14}, {4, 12, 24, 44}}));
  EXPECT_EQ(bareissDet(mb), 64);

  auto mc = matrixC(4);
  auto half = [](long a) { return Rational(a, 2); };
  EXPECT_EQ(mc, SqMatrix<Rational>::fromRows({{0, 2, 0, half(-1)},
                                              {-8, 4, 2, -2},
                                              {-4, 0, 5, half(-5)},
                                              {0, -2, 4, half(-1)}}));
  EXPECT_EQ(bareissDet(mc), 64);

  auto ma = aignerAtIMatrix(4);
  EXPECT_EQ(ma, SqMatrix<QuadExt>::fromRows({{gi(1), gi(1, -1), gi(0, -1), gi(0)},
                                             {gi(0), gi(2), gi(3, -3), gi(0, -4)},
                                             {gi(0, -1), gi(0), gi(6), gi(10, -10)},
                                             {gi(1, -1), gi(0, -4), gi(0), gi(20)}}));
  EXPECT_EQ(bareissDet(ma), gi(64));
}

TEST(NamedMatrices, SmallCases) {
  auto l1 = lMatrix(1);
  ASSERT_EQ(l1.size(), 1u);
  EXPECT_EQ(l1(0, 0), MPoly(1));
  EXPECT_EQ(kOneMatrix(2), SqMatrix<Integer>::fromRows({{4, 0}, {2, 2}}));
  EXPECT_EQ(bareissDet(kOneMatrix(2)), 8);
  EXPECT_EQ(kOneMatrix(1), SqMatrix<Integer>::fromRows({{1}}));
  EXPECT_EQ(jMatrix(3).size(), 4u);
  EXPECT_THROW(kClearedMatrix(1), UnsupportedSize);
  EXPECT_THROW(theorem1Check(1), UnsupportedSize);
}

TEST(NamedMatrices, EveryNameBuildsDeterministically) {
  for (const auto& name : namedMatrices()) {
    for (int n = 2; n <= 4; ++n) {
      AnyMatrix a = buildNamedMatrix(name, n);
      AnyMatrix b = buildNamedMatrix(name, n);
      EXPECT_EQ(matrixStrings(a), matrixStrings(b)) << name;
      const std::size_t expected = name == "J" ? n + 1 : n;
      EXPECT_EQ(matrixStrings(a).size(), expected) << name;
    }
  }
  EXPECT_THROW(buildNamedMatrix("Nope", 3), UnknownName);
  EXPECT_THROW(buildNamedMatrix("L", 0), UnsupportedSize);
}

TEST(NamedMatrices, ClearedRIsScaledM) {
  for (int n = 2; n <= 4; ++n) {
    auto r = rMatrixCleared(n);
    auto m = mMatrix(n);
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j) EXPECT_EQ(r(i, j), -(MPoly::qPower(-2) * m(i, j)));
  }
}

TEST(NamedMatrices, NumericRMatchesClearedForm) {
  // Entries of the literal R at (phi, psi, q) against the cleared symbolic R
  // divided by the clearing factor.
  oracle::Random rnd(61);
  for (int t = 0; t < 10; ++t) {
    Rational p = rnd.rational();
    Rational rho = rnd.rational();
    Rational tau = rnd.rational();
    Rational q = p * p;
    if (q == 1 || q == 0 || 1 + rho * q == 0 || tau + q == 0) continue;
    Rational phi = (rho + q) / (1 + rho * q);
    Rational psi = (1 + tau * q) / (tau + q);
    Assignment at;
    at.p = p;
    at.rho = rho;
    at.tau = tau;
    Rational clear = (1 + rho * q) * (tau + q);
    auto lit = rMatrix(3, phi, psi, q);
    auto sym = rMatrixCleared(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(lit(i, j), sym(i, j).evaluate(at) / clear);
  }
}

TEST(Identities, CountByEnumerationAgainstDeterminant) {
  for (int n = 2; n <= 4; ++n) expectPass(theorem1Check(n));
}

TEST(Identities, TauOneAndRowOperations) {
  for (int n = 1; n <= 4; ++n) expectPass(corollaryTauOneCheck(n));
  for (int n = 2; n <= 3; ++n) expectPass(rowOperationCheck(n));
}

TEST(Identities, ProofChainAtSeededPoints) {
  for (int n = 2; n <= 3; ++n) {
    RationalSampler s(4000 + n);
    int done = 0;
    while (done < 3) {
      Rational p = s.draw();
      Rational a = s.draw();
      Rational b = s.draw();
      try {
        expectPass(proofChainCheck(n, p, a, b));
        ++done;
      } catch (const DegenerateParams&) {
      }
    }
  }
}

TEST(Identities, ProofChainRejectsVanishingHalfBracket) {
  // phi q = 1 makes [alpha + 1/2] vanish.
  Rational p(2);
  EXPECT_THROW(proofChainCheck(2, p, Rational(1, 2), Rational(3)), DegenerateParams);
  EXPECT_THROW(proofChainCheck(2, p, Rational(3), Rational(2)), DegenerateParams);
  EXPECT_THROW(proofChainCheck(2, Rational(1), Rational(3), Rational(5)), DegenerateParams);
}

TEST(Identities, ChainAndPalindromy) {
  for (int n = 1; n <= 5; ++n) {
    expectPass(corJRLCheck(n));
    expectPass(symmetryCheck(n));
  }
}

TEST(Identities, KnownPalindromicPolynomials) {
  EXPECT_EQ(symmetricJ(1), MPoly::parse("-p^3 + p + p^-1 - p^-3"));
  EXPECT_EQ(symmetricJ(1).toString(), "p + p^-1 - p^3 - p^-3");
  MPoly two = MPoly::parse("-2*q^4 + 8*q^3 - 8*q^2 - 8*q + 20 - 8*q^-1 - 8*q^-2 + 8*q^-3 - 2*q^-4");
  EXPECT_EQ(symmetricJ(2), two);
  EXPECT_EQ(symmetricJ(2).toString(), "20 - 8*p^2 - 8*p^-2 - 8*p^4 - 8*p^-4 + 8*p^6 + 8*p^-6 - 2*p^8 - 2*p^-8");
}

TEST(Identities, XEnumerations) {
  for (int n = 1; n <= 7; ++n) {
    expectPass(enumIdentityCheck(EnumVariant::one, n));
    expectPass(enumIdentityCheck(EnumVariant::two, n));
    expectPass(enumIdentityCheck(EnumVariant::three, n));
  }
  EXPECT_EQ(bareissDet(tMinusMatrix(3)), 189);
  EXPECT_EQ(bareissDet(lGaussMatrix(1)), gi(1));
  EXPECT_EQ(threeEnumeration(2), 2);
  EXPECT_EQ(tMinusClosedForm(3), 189);
}

TEST(Identities, ThreeEnumerationAgainstGenFun) {
  for (int n = 1; n <= 6; ++n) {
    Assignment at;
    at.z = Rational(3);
    at.rho = Rational(1);
    at.tau = Rational(1);
    EXPECT_EQ(genFun(n).evaluate(at), Rational(threeEnumeration(n))) << n;
    EXPECT_EQ(Rational(tMinusClosedForm(n)), Rational(ipow(3, n * (n - 1) / 2) * countClosedForm(n))) << n;
  }
}

TEST(Identities, AignerAndTwoEnumerationMatrices) {
  for (int n = 1; n <= 6; ++n) expectPass(aignerCheck(n));
  EXPECT_THROW(aignerCheck(8), UnsupportedSize);
}

TEST(Identities, KAtMinusOne) {
  for (int n = 1; n <= 8; ++n) expectPass(corollary12Check(n));
}

TEST(Report, FailureCarriesWitness) {
  Report r = runCheck("demo", 3, []() -> std::optional<std::string> { return "broken"; });
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, "broken");
  Report ok = runCheck("demo", 3, []() -> std::optional<std::string> { return std::nullopt; });
  EXPECT_TRUE(ok.pass);
  EXPECT_FALSE(ok.witness);
}
