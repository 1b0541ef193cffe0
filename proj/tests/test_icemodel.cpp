#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace asmlab;

namespace {

const std::vector<std::vector<int>> kFive = {
    {0, 1, 0, 0, 0}, {1, -1, 0, 1, 0}, {0, 1, 0, -1, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}};

Rational bracketAt(const Rational& qxi, const Rational& q) { return (qxi - 1 / qxi) / (q - 1 / q); }

SpectralParams homogeneous(int n, const Rational& a, const Rational& b, const Rational& q) {
  return {std::vector<Rational>(n, a), std::vector<Rational>(n, b), q};
}

}  // namespace

TEST(Ice, FiveByFiveConfiguration) {
  IceState s = asmToIce(Asm::validate(kFive));
  EXPECT_EQ(s.states()[0], (std::vector<int>{3, 1, 5, 5, 5}));
  StateCounts c = stateCounts(s);
  EXPECT_EQ(c.n, (std::array<long, 6>{7, 2, 3, 3, 5, 5}));
  EXPECT_EQ(iceToAsm(s), Asm::validate(kFive));
  EXPECT_EQ(IceState::parse(s.toText()), s);
}

TEST(Ice, SingleVertex) {
  IceState s = asmToIce(Asm::identity(1));
  EXPECT_EQ(s.toText(), "1\n");
  EXPECT_EQ(iceToAsm(s), Asm::identity(1));
}

TEST(Ice, RejectsBadBoundaryAndEdges) {
  EXPECT_THROW(IceState::parse("3\n"), InconsistentArrows);
  EXPECT_THROW(IceState::parse("12\n21\n"), InconsistentArrows);
  EXPECT_THROW(IceState::parse("17\n"), ParseError);
  EXPECT_THROW(arrowsOf(7), InconsistentArrows);
}

TEST(Ice, EveryVertexIsTwoInTwoOut) {
  for (int s = 1; s <= 6; ++s) {
    VertexArrows a = arrowsOf(s);
    int in = a.leftPointsRight + !a.rightPointsRight + !a.topPointsUp + a.bottomPointsUp;
    EXPECT_EQ(in, 2) << s;
  }
}

TEST(Ice, RoundTripAndCountRelations) {
  for (int n = 1; n <= 5; ++n) {
    for (const Asm& a : enumerateAsms(n)) {
      IceState s = asmToIce(a);
      EXPECT_EQ(iceToAsm(s), a);
      StateCounts c = stateCounts(s);
      EXPECT_EQ(c[1], n + c[2]);
      EXPECT_EQ(c[3], c[4]);
      EXPECT_EQ(c[5], c[6]);
      EXPECT_EQ(c[1] + c[2] + c[3] + c[4] + c[5] + c[6], n * n);
      EXPECT_EQ(c[2], a.stats().mu);
      EXPECT_EQ(c[3] + c[4] + c[5] + c[6], n * n - n - 2 * a.stats().mu);
    }
  }
}

TEST(Weights, FiveByFiveHomogeneous) {
  IceState s = asmToIce(Asm::validate(kFive));
  oracle::Random rnd(3);
  for (int t = 0; t < 20; ++t) {
    Rational a = rnd.rational();
    Rational b = rnd.rational();
    Rational q = rnd.rational();
    if (a == 0 || b == 0 || q == 0 || q * q == 1) continue;
    Rational qxi = a / b;
    Rational expected = -rpow(qxi, -5) * rpow(bracketAt(qxi / q, q), 6) * rpow(bracketAt(qxi, q), 10);
    EXPECT_EQ(configWeight(s, homogeneous(5, a, b, q)), expected);
  }
}

TEST(Weights, StateThreeVanishesAtShift) {
  IceState s = asmToIce(Asm::validate(kFive));
  Rational q(3, 2);
  Rational b(5, 7);
  EXPECT_EQ(configWeight(s, homogeneous(5, q * b, b, q)), 0);
}

TEST(Partition, OrderOne) {
  SpectralParams p{{Rational(3)}, {Rational(2, 5)}, Rational(7, 3)};
  Rational expected = -p.b[0] / p.a[0];
  EXPECT_EQ(bruteZn(1, p), expected);
  EXPECT_EQ(ikZn(1, p), expected);
  EXPECT_EQ(ikZnUV(1, p), expected);
  EXPECT_EQ(znViaLascoux(1, p), expected);
}

TEST(Partition, OrderTwoHomogeneousByHand) {
  Rational a(3, 2);
  Rational b(5, 4);
  Rational q(2, 3);
  Rational w1 = -b / a;
  Rational w3 = vertexWeight(3, a, b, q);
  Rational w5 = vertexWeight(5, a, b, q);
  EXPECT_EQ(asmToIce(Asm::identity(2)).toText(), "15\n61\n");
  EXPECT_EQ(asmToIce(Asm::validate({{0, 1}, {1, 0}})).toText(), "31\n14\n");
  EXPECT_EQ(bruteZn(2, homogeneous(2, a, b, q)), w1 * w1 * (w5 * w5 + w3 * w3));
}

TEST(Partition, DeterminantFormsMatchBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    RationalSampler s(1000 + n);
    for (int k = 0; k < 20; ++k) {
      SpectralParams p = s.drawSpectral(n);
      Rational brute = bruteZn(n, p);
      EXPECT_EQ(ikZn(n, p), brute) << n << "/" << k;
      EXPECT_EQ(ikZnUV(n, p), brute) << n << "/" << k;
    }
  }
}

TEST(Partition, DegenerateParametersRejected) {
  EXPECT_THROW(bruteZn(1, {{Rational(1)}, {Rational(1)}, Rational(1)}), DegenerateParams);
  EXPECT_THROW(ikZn(2, {{Rational(2), Rational(2)}, {Rational(3), Rational(5)}, Rational(7)}), DegenerateParams);
  EXPECT_THROW(ikZn(2, {{Rational(2)}, {Rational(3)}, Rational(7)}), DegenerateParams);
  EXPECT_THROW(bruteZn(7, homogeneous(7, 2, 3, 5)), CeilingExceeded);
}

TEST(Sampler, DeterministicAndGeneric) {
  RationalSampler a(42);
  RationalSampler b(42);
  for (int k = 0; k < 50; ++k) {
    SpectralParams x = a.drawSpectral(3);
    SpectralParams y = b.drawSpectral(3);
    EXPECT_EQ(x.q, y.q);
    EXPECT_EQ(x.a, y.a);
    EXPECT_EQ(x.b, y.b);
    EXPECT_TRUE(RationalSampler::isGeneric(x));
  }
  EXPECT_FALSE(RationalSampler::isGeneric(homogeneous(2, 2, 3, 5)));
}
