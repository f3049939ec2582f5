#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shintani/milnor.hpp"

using namespace shintani;

namespace {

constexpr int kD = 6;

FormalFraction dlog1(const TrigUnit& u) { return dlog_unit(u, 1, kD).dT[0]; }

FormalFraction series(const MultiSeries& s) { return FormalFraction(s, {}); }

MultiSeries one_minus_exp(const Rational& q, const QVector& l, int P) {
  return MultiSeries::constant(static_cast<int>(l.size()), P, 1) - exp_affine(q, l, P);
}

std::vector<QMatrix> rho_tuple(const QMatrix& g) {
  int n = g.dim();
  std::vector<QMatrix> out;
  QMatrix p = shift_permutation(n), cur = QMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    out.push_back(g * cur);
    cur = p * cur;
  }
  return out;
}

}  // namespace

TEST(Eta, CosetGivesOneMinusFactor) {
  EXPECT_EQ(eta(TestFunction::indicator({0}, 1)), one_minus_unit(TrigParam::make(0, {1})));
  EXPECT_EQ(eta(TestFunction::indicator({Rational(1, 3)}, 1)),
            one_minus_unit(TrigParam::make(Rational(1, 3), {1})));
  EXPECT_EQ(eta(TestFunction::indicator({Rational(1, 2)}, 3)),
            one_minus_unit(TrigParam::make(Rational(1, 6), {Rational(1, 3)})));
  EXPECT_THROW(eta(CycNum::root_of_unity(Rational(1, 4)) * TestFunction::indicator({0}, 1)), MathError);
}

TEST(Eta, DlogOfOneMinusSolvesItsEquation) {
  // dlog(1 - e((z-a)/d))·(1 - e(-a/d)e^{T/d}) = -(1/d) e(-a/d) e^{T/d}.
  for (auto [a, d] : std::vector<std::pair<Rational, Rational>>{{0, 1}, {Rational(1, 3), 1}, {Rational(1, 2), 3}, {2, 5}}) {
    FormalFraction w = dlog1(eta(TestFunction::indicator({a}, d)));
    Rational q = -a / d;
    QVector l{1 / d};
    FormalFraction lhs = w * series(one_minus_exp(q, l, kD + 2));
    FormalFraction rhs = CycNum(-1 / d) * series(exp_affine(q, l, kD + 2));
    EXPECT_TRUE(eq_fraction(lhs, rhs, kD)) << to_string(a) << " " << to_string(d);
  }
}

TEST(Eta, HomomorphismAtDlogLevel) {
  TestFunction f = TestFunction::indicator({Rational(1, 3)}, 1), g = TestFunction::indicator({0}, 2);
  FormalFraction lhs = dlog1(eta(f + g)), rhs = dlog1(eta(f) * eta(g));
  EXPECT_TRUE(eq_fraction(lhs, rhs, kD));
  EXPECT_TRUE(eq_fraction(dlog1(eta(f) * eta(g)), dlog1(eta(f)) + dlog1(eta(g)), kD));
}

TEST(Eta, RefinedPresentationHasTheSameDlog) {
  for (int m = 2; m <= 4; ++m) {
    Rational a(1, 3), d(2);
    std::vector<ScalarCoset> refined;
    for (int k = 0; k < m; ++k) refined.push_back({1, {a + k * d}, d * m});
    EXPECT_TRUE(eq_fraction(dlog1(eta_cosets(refined)), dlog1(eta(TestFunction::indicator({a}, d))), kD)) << m;
  }
}

TEST(Eta, ReflectionBehaviour) {
  QMatrix minus = QMatrix::from_rows({{-1}});
  for (auto [a, d] : std::vector<std::pair<Rational, Rational>>{{0, 1}, {Rational(1, 3), 2}}) {
    TestFunction f = TestFunction::indicator({a}, d);
    TestFunction mf = act_test(minus, f);
    // (η|γ)(f) = η(γ·f)|γ.
    EXPECT_TRUE(eq_fraction(dlog1(unit_action(minus, eta_plus(mf))), dlog1(eta_plus(f)), kD));
    // η picks up the constant form dlog(-e((-z+a)/d)) = -(1/d) dT.
    FormalFraction diff = dlog1(unit_action(minus, eta(mf))) - dlog1(eta(f));
    EXPECT_TRUE(eq_fraction(diff, FormalFraction::constant(1, kD, CycNum(-1 / d)), kD));
  }
}

TEST(Dlog, SteinbergPairsVanish) {
  TrigParam p = TrigParam::make(Rational(1, 5), {1, 2});
  KSymbol s = {eps_unit(p), one_minus_unit(p)};
  EXPECT_TRUE(dlog_symbol(s, kD).is_zero());
  EXPECT_TRUE(dlog_chain({{1, s}}, 2, kD).is_zero());
}

TEST(Dlog, SwappingEntriesNegates) {
  TrigUnit u = one_minus_unit(TrigParam::make(Rational(1, 3), {1, 1}));
  TrigUnit v = one_minus_unit(TrigParam::make(0, {1, -2})) * eps_unit(TrigParam::make(0, {0, 1}), 2);
  EXPECT_TRUE(eq_fraction(dlog_symbol({u, v}, kD), -dlog_symbol({v, u}, kD), kD));
}

TEST(Dlog, ProductOfOneDimensionalForms) {
  // dlog{1 - e(z1), 1 - e(z2)}·(1 - e^{T1})(1 - e^{T2}) = e^{T1 + T2}.
  KSymbol s = {one_minus_unit(TrigParam::make(0, {1, 0})), one_minus_unit(TrigParam::make(0, {0, 1}))};
  FormalFraction w = dlog_symbol(s, kD);
  FormalFraction lhs = w * series(one_minus_exp(0, {1, 0}, kD + 4)) * series(one_minus_exp(0, {0, 1}, kD + 4));
  EXPECT_TRUE(eq_fraction(lhs, series(exp_affine(0, {1, 1}, kD + 4)), kD));
}

TEST(Dlog, MultilinearInEachEntry) {
  TrigUnit x = one_minus_unit(TrigParam::make(Rational(1, 4), {1, 1}));
  TrigUnit y = one_minus_unit(TrigParam::make(Rational(2, 3), {1, 1}));
  TrigUnit z = one_minus_unit(TrigParam::make(0, {0, 1}));
  FormalFraction lhs = dlog_chain({{1, {x * y, z}}}, 2, kD);
  FormalFraction rhs = dlog_chain({{1, {x, z}}, {1, {y, z}}}, 2, kD);
  EXPECT_TRUE(eq_fraction(lhs, rhs, kD));
}

TEST(Dlog, ChainAgreesWithGenericWedge) {
  QMatrix g = QMatrix::from_rows({{1, 2}, {-1, 1}});
  TestFunction f = TestFunction::indicator({Rational(1, 2), Rational(1, 3)}, 2);
  KChain c = phi_st(rho_tuple(g), f);
  FormalFraction generic = FormalFraction::zero(2, kD);
  for (const auto& t : c) generic = generic + CycNum(Rational(t.coeff)) * dlog_symbol(t.symbol, kD);
  EXPECT_TRUE(eq_fraction(dlog_chain(c, 2, kD), generic, kD));
}

TEST(Stevens, OneDimensionalCochain) {
  for (auto [a, d] : std::vector<std::pair<Rational, Rational>>{{0, 1}, {Rational(1, 3), 1}, {Rational(1, 2), 3}}) {
    TestFunction f = TestFunction::indicator({a}, d);
    KChain c = phi_st({QMatrix::identity(1)}, f);
    EXPECT_TRUE(eq_fraction(dlog_chain(c, 1, kD), dlog1(eta(f)), kD));
    // ξ([-e1*]) differs by a constant form.
    KChain m = xi_st({{-1}}, f);
    FormalFraction diff = dlog_chain(m, 1, kD) - dlog_chain(c, 1, kD);
    EXPECT_TRUE(eq_fraction(diff, FormalFraction::constant(1, kD, CycNum(-1 / d)), kD));
  }
}

TEST(Stevens, ShiftTupleOnProductCoset) {
  QVector a{Rational(1, 3), Rational(1, 2)};
  TestFunction f = TestFunction::indicator(a, 1);
  KChain c = phi_st(rho_tuple(QMatrix::identity(2)), f);
  KSymbol want = {one_minus_unit(TrigParam::make(a[0], {1, 0})), one_minus_unit(TrigParam::make(a[1], {0, 1}))};
  EXPECT_TRUE(eq_fraction(dlog_chain(c, 2, kD), dlog_symbol(want, kD), kD));
}

TEST(Stevens, PositiveScalingOfCovectors) {
  TestFunction f = TestFunction::indicator({Rational(1, 2), 0}, 1);
  std::vector<QVector> l = {{1, 1}, {0, 1}}, lb = {{3, 3}, {0, Rational(1, 2)}};
  EXPECT_TRUE(eq_fraction(dlog_chain(xi_st(l, f), 2, kD), dlog_chain(xi_st(lb, f), 2, kD), kD));
}

TEST(Stevens, TranslatedShiftTuple) {
  // dlog Φ(γρ^j)(f) = γ·dlog Φ(ρ^j)(γ⁻¹·f).
  QMatrix g = QMatrix::from_rows({{2, 1}, {1, 1}});
  TestFunction f = TestFunction::indicator({Rational(1, 2), Rational(1, 3)}, 1);
  FormalFraction lhs = dlog_chain(phi_st(rho_tuple(g), f), 2, kD);
  FormalFraction inner = dlog_chain(phi_st(rho_tuple(QMatrix::identity(2)), act_test(g.inverse(), f)), 2, kD);
  EXPECT_TRUE(eq_fraction(lhs, substitute_top(g, inner), kD));
}

TEST(Stevens, DegenerateCovectorsAreRejected) {
  std::vector<QMatrix> same(2, QMatrix::identity(2));
  EXPECT_THROW(phi_st(same, TestFunction::indicator({0, 0}, 1)), MathError);
}

TEST(Reciprocity, UnitsSumAndWedgeResidual) {
  for (auto [a, d] : std::vector<std::pair<QVector, Rational>>{{{0, 0}, 1}, {{Rational(1, 3), Rational(1, 2)}, 1}}) {
    auto u = stevens_units(a, d);
    ASSERT_EQ(u.size(), 3u);
    EXPECT_TRUE(units_sum_certificate(u, 2, kD));
    EXPECT_TRUE(dedekind_wedge_check(u, 2, kD));
  }
  // A wrong u_0 breaks the certificate.
  auto u = stevens_units({0, 0}, 1);
  u[0] = u[1];
  EXPECT_FALSE(units_sum_certificate(u, 2, kD));
}

TEST(Coboundary, SmallCases) {
  EXPECT_TRUE(stevens_coboundary_check({0, 0}, 1, kD).pass);
  EXPECT_TRUE(stevens_coboundary_check({Rational(1, 3), Rational(1, 2)}, 1, kD).pass);
}
