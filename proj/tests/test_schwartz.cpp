#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shintani/schwartz.hpp"

using namespace shintani;

namespace {

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

// Points of (1/m)Z^n in [-2, 2)^n.
std::vector<QVector> sample_grid(int n, long m) {
  std::vector<QVector> out{QVector{}};
  for (int i = 0; i < n; ++i) {
    std::vector<QVector> next;
    for (const auto& p : out)
      for (long k = -2 * m; k < 2 * m; ++k) {
        QVector q = p;
        q.push_back(frac(k, m));
        next.push_back(q);
      }
    out = next;
  }
  return out;
}

bool in_coset(const QVector& x, const QVector& a, const Rational& d) {
  for (size_t i = 0; i < x.size(); ++i)
    if (!is_integer((x[i] - a[i]) / d)) return false;
  return true;
}

// Mean over one period of f(x) e(-<x,y>), for y on (1/g)Z^n.
std::complex<double> fourier_oracle(const TestFunction& f, const QVector& y) {
  int n = f.dim();
  Rational g = f.period();
  long N = Rational(g / f.step()).get_num().get_si();
  std::complex<double> sum = 0;
  std::vector<long> k(n, 0);
  for (;;) {
    QVector x(n);
    double phase = 0;
    for (int i = 0; i < n; ++i) {
      x[i] = f.step() * k[i];
      phase -= Rational(x[i] * y[i]).get_d();
    }
    sum += f(x).approx() * oracle::cexp2pi(phase);
    int i = 0;
    while (i < n && ++k[i] == N) k[i++] = 0;
    if (i == n) break;
  }
  double vol = 1;
  for (int i = 0; i < n; ++i) vol *= g.get_d();
  return sum / vol;
}

}  // namespace

TEST(TestFunctions, IndicatorMatchesMembership) {
  QVector a{Rational(1, 3), Rational(-1, 2)};
  Rational d(3, 2);
  TestFunction f = TestFunction::indicator(a, d);
  for (const auto& x : sample_grid(2, 6)) EXPECT_EQ(f(x), CycNum(in_coset(x, a, d) ? 1 : 0));
  EXPECT_TRUE(f.has_integer_values());
}

TEST(TestFunctions, CanonicalFormIsRefinementInvariant) {
  // χ_{1/2 + Z} = χ_{1/2 + 3Z} + χ_{3/2 + 3Z} + χ_{5/2 + 3Z}.
  std::vector<CosetTerm> parts;
  for (int b = 0; b < 3; ++b) parts.push_back({1, Coset{{Rational(1, 2) + b}, {3}}});
  EXPECT_EQ(normalize(1, parts), TestFunction::indicator({Rational(1, 2)}, 1));
  EXPECT_EQ(TestFunction::indicator({Rational(1, 2)}, 1).period(), 1);
  EXPECT_EQ(TestFunction::indicator({Rational(1, 2)}, 1).step(), Rational(1, 2));
  // Cancellation gives the zero function.
  EXPECT_TRUE((TestFunction::indicator({0}, 1) - normalize(1, {{1, Coset{{0}, {2}}}, {1, Coset{{1}, {2}}}})).is_zero());
}

TEST(TestFunctions, ActionIsPointwiseSubstitution) {
  std::mt19937 g(1);
  std::uniform_int_distribution<int> e(-2, 2);
  TestFunction f = TestFunction::indicator({Rational(1, 3), 0}, 2) +
                   CycNum::root_of_unity(Rational(1, 5)) * TestFunction::indicator({0, Rational(1, 2)}, 1);
  for (int t = 0; t < 6; ++t) {
    QMatrix gm(2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gm(i, j) = e(g);
    } while (gm.det() == 0);
    TestFunction gf = act_test(gm, f);
    for (const auto& x : sample_grid(2, 6)) EXPECT_EQ(gf(x), f(vec_mat(x, gm)));
  }
}

TEST(TestFunctions, ActionComposes) {
  QMatrix A = QMatrix::from_rows({{1, 2}, {0, 3}}), B = QMatrix::from_rows({{2, -1}, {1, 1}});
  TestFunction f = TestFunction::indicator({Rational(1, 2), Rational(2, 3)}, 1);
  EXPECT_EQ(act_test(A * B, f), act_test(A, act_test(B, f)));
  EXPECT_EQ(act_test(QMatrix::identity(2), f), f);
}

TEST(TestFunctions, FourierMatchesPeriodAverage) {
  std::vector<TestFunction> fs = {
      TestFunction::indicator({Rational(1, 3)}, 2),
      TestFunction::indicator({Rational(1, 2), Rational(1, 3)}, 1),
      TestFunction::indicator({0, Rational(1, 4)}, 3) - TestFunction::indicator({Rational(1, 2), 0}, 1),
      CycNum::root_of_unity(Rational(1, 3)) * TestFunction::indicator({Rational(2, 5)}, 1),
  };
  for (const auto& f : fs) {
    TestFunction fh = fourier(f);
    int n = f.dim();
    Rational step = 1 / f.period();  // f̂ lives on (1/g)Z^n
    for (const auto& k : sample_grid(n, 1)) {
      QVector y(n);
      for (int i = 0; i < n; ++i) y[i] = k[i] * step;
      EXPECT_TRUE(near(fh(y).approx(), fourier_oracle(f, y)));
    }
    QVector off(n, 0);
    off[0] = step / 2;
    EXPECT_TRUE(fh(off).is_zero());
  }
}

TEST(TestFunctions, FourierOfCosetIndicator) {
  // (1/d) e(-a y) on (1/d)Z.
  TestFunction fh = fourier(TestFunction::indicator({Rational(1, 3)}, 2));
  for (long k = -6; k <= 6; ++k) {
    Rational y(k, 2);
    EXPECT_EQ(fh({y}), CycNum::root_of_unity(-y / 3) * Rational(1, 2));
  }
  EXPECT_EQ(fourier(TestFunction::indicator({0}, 1)), TestFunction::indicator({0}, 1));
}

TEST(TestFunctions, FourierInversionIsReflection) {
  QMatrix minus = Rational(-1) * QMatrix::identity(2);
  TestFunction f = TestFunction::indicator({Rational(1, 3), Rational(1, 2)}, 2) +
                   CycNum(3) * TestFunction::indicator({0, Rational(1, 6)}, 1);
  EXPECT_EQ(fourier(fourier(f)), act_test(minus, f));
}

TEST(TestFunctions, ScalarDecompositionReconstructs) {
  TestFunction f = TestFunction::indicator({Rational(1, 3), 0}, 2) + CycNum(-2) * TestFunction::indicator({0, Rational(1, 2)}, 1);
  std::vector<CosetTerm> back;
  for (const auto& t : scalar_modulus_decomposition(f))
    back.push_back({CycNum(Rational(t.b)), Coset{t.a, QVector(2, t.d)}});
  EXPECT_EQ(normalize(2, back), f);
  EXPECT_THROW(scalar_modulus_decomposition(CycNum::root_of_unity(Rational(1, 3)) * f), MathError);
}

TEST(TestFunctions, MinimalPeriodMultiple) {
  TestFunction f = TestFunction::indicator({Rational(1, 3), 0}, 2);
  QVector v{1, 1};
  Rational t = minimal_period_multiple(f, v);
  EXPECT_EQ(t, 2);
  EXPECT_EQ(period_lattice(f), 2);
  TestFunction g = TestFunction::indicator({0, 0}, 1);
  EXPECT_EQ(minimal_period_multiple(g, {Rational(1, 2), Rational(3, 4)}), 4);
  EXPECT_THROW(period_lattice(TestFunction(2)), MathError);
}

TEST(TestFunctions, TensorIsProductOfValues) {
  TestFunction a = TestFunction::indicator({Rational(1, 2)}, 1), b = TestFunction::indicator({Rational(1, 3)}, 2);
  TestFunction t = tensor({a, b});
  for (const auto& x : sample_grid(2, 6)) EXPECT_EQ(t(x), a({x[0]}) * b({x[1]}));
}
