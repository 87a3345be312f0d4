#include "zxmbqc/phase.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using zxmbqc::Phase;

TEST(Phase, NormalizesIntoZeroToTwoPi) {
  EXPECT_EQ(Phase(5, 2), Phase(1, 2));
  EXPECT_EQ(Phase(-1, 2), Phase(3, 2));
  EXPECT_EQ(Phase(2), Phase::zero());
  EXPECT_EQ(Phase(-4, 8), Phase(3, 2));
  EXPECT_EQ(Phase(6, 4).denominator(), 2);
}

TEST(Phase, ZeroDenominatorThrows) { EXPECT_THROW(Phase(1, 0), std::invalid_argument); }

TEST(Phase, Predicates) {
  EXPECT_TRUE(Phase().is_zero());
  EXPECT_TRUE(Phase(3).is_pi());
  EXPECT_TRUE(Phase(1, 2).is_proper_clifford());
  EXPECT_TRUE(Phase(-1, 2).is_proper_clifford());
  EXPECT_FALSE(Phase(1).is_proper_clifford());
  EXPECT_FALSE(Phase(1, 4).is_proper_clifford());
}

TEST(Phase, ArithmeticIsModTwoPi) {
  EXPECT_EQ(Phase(3, 2) + Phase(1, 2), Phase::zero());
  EXPECT_EQ(Phase(1, 4) - Phase(1, 2), Phase(7, 4));
  EXPECT_EQ(-Phase(1, 3), Phase(5, 3));
  EXPECT_EQ(-Phase::zero(), Phase::zero());
}

TEST(Phase, TextRoundTrip) {
  EXPECT_EQ(Phase(1, 2).to_string(), "1/2");
  EXPECT_EQ(Phase(1).to_string(), "1");
  EXPECT_EQ(Phase().to_string(), "0");
  EXPECT_EQ(Phase::parse("-1/2"), Phase(3, 2));
  EXPECT_EQ(Phase::parse("+2/4"), Phase(1, 2));
  EXPECT_THROW(Phase::parse("pi"), std::invalid_argument);
  EXPECT_THROW(Phase::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Phase::parse(""), std::invalid_argument);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Phase p(static_cast<std::int64_t>(rng() % 1000) - 500, 1 + static_cast<std::int64_t>(rng() % 64));
    EXPECT_EQ(Phase::parse(p.to_string()), p);
  }
}

TEST(Phase, UnitMatchesPolar) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const Phase p(static_cast<std::int64_t>(rng() % 97), 1 + static_cast<std::int64_t>(rng() % 12));
    const auto want = std::polar(1.0, std::numbers::pi * static_cast<double>(p.numerator()) / p.denominator());
    EXPECT_NEAR(std::abs(p.unit() - want), 0.0, 1e-12) << p;
  }
  EXPECT_EQ(Phase(1).unit(), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(Phase(1, 2).unit(), std::complex<double>(0.0, 1.0));
}

TEST(Phase, AdditionMatchesComplexMultiplication) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Phase a(static_cast<std::int64_t>(rng() % 16), 8), b(static_cast<std::int64_t>(rng() % 16), 8);
    EXPECT_NEAR(std::abs((a + b).unit() - a.unit() * b.unit()), 0.0, 1e-12);
  }
}
