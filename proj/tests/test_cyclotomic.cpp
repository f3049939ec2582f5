#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shintani/cyclotomic.hpp"

using namespace shintani;

namespace {

CycNum random_cyc(std::mt19937& g, long N) {
  std::uniform_int_distribution<int> c(-5, 5);
  CycNum x;
  for (long k = 0; k < N; ++k) x += CycNum::root_of_unity(frac(k, N)) * frac(c(g), 1 + (c(g) + 5) % 4);
  return x;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-8 * (1 + std::abs(b)); }

}  // namespace

TEST(Cyclotomic, RootsOfUnityBasics) {
  EXPECT_EQ(CycNum::root_of_unity(Rational(1, 2)), CycNum(-1));
  EXPECT_EQ(CycNum::root_of_unity(Rational(1, 2)).conductor(), 1);
  EXPECT_EQ(CycNum::root_of_unity(3), CycNum(1));
  EXPECT_EQ(CycNum::root_of_unity(Rational(1, 4)) + CycNum::root_of_unity(Rational(3, 4)), CycNum(0));
  // e(1/6) = -e(2/3) lives in Q(ζ_3).
  EXPECT_EQ(CycNum::root_of_unity(Rational(1, 6)).conductor(), 3);
  EXPECT_EQ(CycNum::root_of_unity(Rational(1, 6)), -CycNum::root_of_unity(Rational(2, 3)));
}

TEST(Cyclotomic, SumOfAllRootsVanishes) {
  for (long N : {2, 3, 4, 5, 6, 12, 15, 30}) {
    CycNum s;
    for (long k = 0; k < N; ++k) s += CycNum::root_of_unity(frac(k, N));
    EXPECT_TRUE(s.is_zero()) << N;
  }
}

TEST(Cyclotomic, RingOperationsAgreeWithComplexEmbedding) {
  std::mt19937 g(11);
  for (long N : {3, 4, 5, 8, 12, 20, 21}) {
    CycNum a = random_cyc(g, N), b = random_cyc(g, 2 * N);
    EXPECT_TRUE(near((a + b).approx(), a.approx() + b.approx()));
    EXPECT_TRUE(near((a * b).approx(), a.approx() * b.approx()));
    EXPECT_TRUE(near((a - b).approx(), a.approx() - b.approx()));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
      EXPECT_TRUE(near(b.inv().approx(), 1.0 / b.approx()));
    }
  }
}

TEST(Cyclotomic, EmbeddingOfRootMatchesPolar) {
  for (long N : {5, 7, 9, 12})
    for (long k = 0; k < N; ++k)
      EXPECT_TRUE(near(CycNum::root_of_unity(frac(k, N)).approx(), oracle::cexp2pi(double(k) / N)));
}

TEST(Cyclotomic, CanonicalFormIsStructural) {
  // Same number built two ways compares equal and hashes equal.
  CycNum a = CycNum::root_of_unity(Rational(1, 3)) + CycNum::root_of_unity(Rational(2, 3));
  EXPECT_EQ(a, CycNum(-1));
  EXPECT_TRUE(a.is_rational());
  CycNum i = CycNum::root_of_unity(Rational(1, 4));
  CycNum j = CycNum::root_of_unity(Rational(3, 12)) * CycNum(1);
  EXPECT_EQ(i, j);
  EXPECT_EQ(i.hash(), j.hash());
  EXPECT_EQ(i * i, CycNum(-1));
  // Q(ζ_5) element from its coefficients and back.
  CycNum z = CycNum::from_coefficients(5, {1, Rational(1, 2), 0, -3});
  EXPECT_EQ(z.coefficients(), (std::vector<Rational>{1, Rational(1, 2), 0, -3}));
}

TEST(Cyclotomic, AccumulatorMatchesPlainArithmetic) {
  std::mt19937 g(2);
  CycNum a = random_cyc(g, 12), b = random_cyc(g, 8), c = random_cyc(g, 3);
  CycAccum acc(24);
  acc.add(a);
  acc.addmul(b, c);
  acc.add(c, Rational(-2, 3));
  acc.add_shifted(a, 5);
  EXPECT_EQ(acc.finish(), a + b * c - c * Rational(2, 3) + a * CycNum::root_of_unity(Rational(5, 24)));
}

TEST(Cyclotomic, ConductorCapIsEnforced) {
  long old = conductor_cap();
  set_conductor_cap(60);
  EXPECT_THROW(CycNum::root_of_unity(Rational(1, 77)), ConductorOverflow);
  EXPECT_NO_THROW(CycNum::root_of_unity(Rational(1, 60)));
  set_conductor_cap(old);
}
