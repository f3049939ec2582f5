#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "shintani/solomon_hu.hpp"

using namespace shintani;

namespace {

// Grid points of step s/2 in the bounding box of (0,1]v_1 + ... + (0,1]v_n.
std::vector<DomainPoint> brute_parallelepiped(const std::vector<QVector>& v, const TestFunction& f) {
  int n = f.dim();
  QVector lo(n, 0), hi(n, 0);
  for (const auto& g : v)
    for (int i = 0; i < n; ++i) (g[i] < 0 ? lo[i] : hi[i]) += g[i];
  Rational s = f.step() / 2;
  std::vector<std::vector<Rational>> axes(n);
  for (int i = 0; i < n; ++i)
    for (Integer k = ceil_q(lo[i] / s); k * s <= hi[i]; ++k) axes[i].push_back(k * s);
  std::vector<DomainPoint> out;
  std::vector<size_t> idx(n, 0);
  if (std::any_of(axes.begin(), axes.end(), [](const auto& a) { return a.empty(); })) return out;
  for (;;) {
    QVector w(n);
    for (int i = 0; i < n; ++i) w[i] = axes[i][idx[i]];
    if (oracle::in_parallelepiped(v, w)) {
      CycNum val = f(w);
      if (!val.is_zero()) out.push_back({w, val});
    }
    int i = 0;
    while (i < n && ++idx[i] == axes[i].size()) idx[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.w < b.w; });
  return out;
}

// Σ f(w) w^e / e!.
MultiSeries brute_exp_sum(const std::vector<DomainPoint>& pts, int n, int P) {
  MultiSeries s(n, P);
  for (int i = 0; i < s.basis().size(); ++i) {
    const Exponent& e = s.basis().exponent(i);
    for (const auto& p : pts) {
      Rational m = 1;
      for (int k = 0; k < n; ++k) {
        for (int t = 0; t < e[k]; ++t) m *= p.w[k];
        m /= oracle::factorial(e[k]);
      }
      s[i] += p.value * CycNum(m);
    }
  }
  return s;
}

TestFunction sample_function(int n) {
  if (n == 3)
    return TestFunction::indicator({Rational(1, 2), 0, Rational(1, 2)}, 1) -
           TestFunction::indicator({0, Rational(1, 2), 0}, 1);
  QVector a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = frac(i + 1, 3);
    b[i] = frac(1, 2 + i);
  }
  return TestFunction::indicator(a, 1) + CycNum(-2) * TestFunction::indicator(b, 2);
}

}  // namespace

TEST(Enumeration, MatchesBoxScan) {
  std::vector<std::vector<QVector>> gen_sets = {
      {{3}},
      {{2, 1}, {-1, 3}},
      {{4, 0}, {2, 2}},
      {{1, 1, 0}, {0, 2, 1}, {2, 0, 3}},
  };
  for (const auto& gens : gen_sets) {
    int n = static_cast<int>(gens.size());
    TestFunction f = sample_function(n);
    auto v = period_scaled(gens, f);
    auto got = enumerate_parallelepiped(v, f);
    auto want = brute_parallelepiped(v, f);
    ASSERT_EQ(got.size(), want.size());
    for (size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].w, want[i].w);
      EXPECT_EQ(got[i].value, want[i].value);
    }
    EXPECT_EQ(exp_sum(got, n, 5), brute_exp_sum(want, n, 5));
    EXPECT_EQ(enumerate_fundamental_domain(gens, f).size(), got.size());
  }
}

TEST(Enumeration, PeriodScalingIsMinimal) {
  TestFunction f = TestFunction::indicator({Rational(1, 2), 0}, 3);
  auto v = period_scaled({{1, 2}, {2, 0}}, f);
  EXPECT_EQ(v[0], (QVector{3, 6}));
  EXPECT_EQ(v[1], (QVector{3, 0}));
}

TEST(Pairing, GeometricSeriesIdentity) {
  // ⟨C, f⟩·∏(1 - e^{v_j·T}) = Σ_{w ∈ P} f(w) e^{w·T}.
  std::vector<std::vector<QVector>> gen_sets = {{{1}}, {{2, 1}, {-1, 3}}, {{1, 1, 0}, {0, 2, 1}, {2, 0, 3}}};
  int D = 4;
  for (const auto& gens : gen_sets) {
    int n = static_cast<int>(gens.size());
    TestFunction f = sample_function(n);
    SimplicialCone cone = SimplicialCone::make(gens);
    auto v = period_scaled(cone.gens, f);
    FormalFraction lhs = sh_pair(cone, f, D);
    for (const auto& vj : v)
      lhs = lhs * FormalFraction(MultiSeries::constant(n, D + n, 1) - exp_affine(0, vj, D + n), {});
    MultiSeries rhs = brute_exp_sum(brute_parallelepiped(v, f), n, D + n);
    EXPECT_TRUE(eq_fraction(lhs, FormalFraction(rhs, {}), D)) << n;
  }
}

TEST(Pairing, OneDimensionalClosedForm) {
  // χ_{a+Z} on the positive ray: e^{aT}/(1 - e^T) for 0 < a ≤ 1.
  int D = 8;
  for (Rational a : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
    TestFunction f = TestFunction::indicator({a}, 1);
    FormalFraction got = phi_nsh({QMatrix::identity(1)}, f, D);
    FormalFraction want = FormalFraction(exp_affine(0, {a}, D + 1), {}) * reciprocal_one_minus(0, {1}, D);
    EXPECT_TRUE(eq_fraction(got, want, D)) << to_string(a);
  }
}

TEST(Pairing, OrthantFromTheShiftTuple) {
  // Support off the coordinate hyperplanes: both cocycles see ∏ e^{a_i T_i}/(1 - e^{T_i}).
  int D = 5;
  for (int n = 1; n <= 3; ++n) {
    std::vector<QMatrix> rho;
    QMatrix p = shift_permutation(n), cur = QMatrix::identity(n);
    for (int j = 0; j < n; ++j) {
      rho.push_back(cur);
      cur = p * cur;
    }
    QVector a(n);
    for (int i = 0; i < n; ++i) a[i] = frac(1, i + 2);
    TestFunction f = TestFunction::indicator(a, 1);
    FormalFraction want(exp_affine(0, a, D + n), {});
    for (int i = 0; i < n; ++i) {
      QVector e(n, 0);
      e[i] = 1;
      want = want * reciprocal_one_minus(0, e, D + n);
    }
    EXPECT_TRUE(eq_fraction(phi_nsh(rho, f, D), want, D)) << n;
    EXPECT_TRUE(eq_fraction(phi_sh(rho, f, D), want, D)) << n;
  }
}

TEST(Pairing, DegenerateTuplesAreRejected) {
  std::vector<QMatrix> same(2, QMatrix::identity(2));
  TestFunction f = TestFunction::indicator({Rational(1, 2), Rational(1, 3)}, 1);
  EXPECT_THROW(phi_nsh(same, f, 4), MathError);
  EXPECT_THROW(phi_sh(same, f, 4), MathError);
  EXPECT_EQ(nsh_generators({QMatrix::from_rows({{1, 2}, {3, 4}})})[0], (QVector{1, 3}));
}
