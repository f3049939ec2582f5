#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shintani/epscone.hpp"

using namespace shintani;

namespace {

QMatrix random_int_matrix(std::mt19937& g, int n, int r = 3) {
  std::uniform_int_distribution<int> d(-r, r);
  QMatrix m(n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = d(g);
  } while (m.det() == 0);
  return m;
}

std::vector<QMatrix> random_tuple(std::mt19937& g, int n) {
  for (;;) {
    std::vector<QMatrix> a;
    for (int j = 0; j < n; ++j) a.push_back(random_int_matrix(g, n));
    if (QMatrix::from_rows(real_limits(a)).det() != 0) return a;
  }
}

// Integer points of [-r, r]^n plus the real limits and their pairwise sums.
std::vector<QVector> probes(const std::vector<QMatrix>& a, int r) {
  int n = static_cast<int>(a.size());
  std::vector<QVector> out{QVector{}};
  for (int i = 0; i < n; ++i) {
    std::vector<QVector> next;
    for (const auto& p : out)
      for (int k = -r; k <= r; ++k) {
        QVector q = p;
        q.push_back(k);
        next.push_back(q);
      }
    out = next;
  }
  auto lim = real_limits(a);
  for (int i = 0; i < n; ++i) {
    out.push_back(lim[i]);
    for (int j = i + 1; j < n; ++j) out.push_back(added(lim[i], lim[j]));
  }
  return out;
}

double eval_at(const EpsPoly& p, const std::vector<double>& eps) {
  double s = 0;
  for (const auto& [m, c] : p.terms()) {
    double t = c.get_d();
    for (size_t i = 0; i < m.size(); ++i) t *= std::pow(eps[i], m[i]);
    s += t;
  }
  return s;
}

}  // namespace

TEST(EpsOrder, LaterVariablesAreSmaller) {
  EXPECT_TRUE(eps_succeeds({1, 0}, {0, 1}));
  EXPECT_TRUE(eps_succeeds({5, 0}, {0, 1}));
  EXPECT_TRUE(eps_succeeds({0, 0}, {1, 0}));
  EXPECT_FALSE(eps_succeeds({0, 1}, {3, 0}));
  EXPECT_FALSE(eps_succeeds({1, 1}, {1, 1}));
}

TEST(EpsOrder, TotalAndCompatibleWithProducts) {
  std::vector<EpsPoly::Monomial> ms;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) ms.push_back({a, b, c});
  for (const auto& r : ms)
    for (const auto& s : ms) {
      if (r == s) continue;
      EXPECT_NE(eps_succeeds(r, s), eps_succeeds(s, r));
      for (const auto& u : ms) {
        EpsPoly::Monomial ru = r, su = s;
        for (int i = 0; i < 3; ++i) {
          ru[i] += u[i];
          su[i] += u[i];
        }
        EXPECT_EQ(eps_succeeds(r, s), eps_succeeds(ru, su));
      }
    }
}

TEST(EpsOrder, SignMatchesTinyNumericValues) {
  std::mt19937 g(2);
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
  std::vector<double> eps = {1e-2, 1e-6, 1e-18};
  for (int t = 0; t < 200; ++t) {
    EpsPoly p(3);
    for (int k = 0; k < 4; ++k) p.add_term({e(g), e(g), e(g)}, c(g));
    if (p.is_zero()) {
      EXPECT_EQ(eps_sign(p), 0);
      continue;
    }
    double v = eval_at(p, eps);
    EXPECT_EQ(eps_sign(p), v > 0 ? 1 : -1);
  }
}

TEST(EpsMatrices, AdjugateInvertsUpToDeterminant) {
  std::mt19937 g(4);
  for (int n = 1; n <= 3; ++n) {
    EpsMat m = perturbation_matrix(random_tuple(g, n));
    EpsMat adj = eps_adjugate(m);
    EpsPoly det = eps_det(m);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        EpsPoly s(n);
        for (int j = 0; j < n; ++j) s = s + m[i][j] * adj[j][k];
        EXPECT_EQ(s, i == k ? det : EpsPoly(n));
      }
  }
}

TEST(PerturbedCones, MatchesConcretePerturbation) {
  std::mt19937 g(6);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 6; ++t) {
      auto a = random_tuple(g, n);
      PerturbedCone cone(a);
      for (const auto& w : probes(a, n == 3 ? 2 : 4))
        ASSERT_EQ(cone(w), oracle::sigma_numeric(a, w, Rational(1, 1000)));
    }
}

TEST(PerturbedCones, FaceDecompositionAgreesEverywhere) {
  std::mt19937 g(8);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 6; ++t) {
      auto a = random_tuple(g, n);
      ConeChain c = face_decompose(a);
      for (const auto& w : probes(a, n == 3 ? 2 : 4)) ASSERT_EQ(chain_eval(c, w), sigma_eval(a, w));
    }
}

TEST(PerturbedCones, DependentLimitsAreRejected) {
  for (int n = 2; n <= 3; ++n) {
    std::vector<QMatrix> a(n, QMatrix::identity(n));
    EXPECT_THROW(face_decompose(a), MathError);
  }
  QMatrix I = QMatrix::identity(2);
  std::vector<QMatrix> rho = {I, QMatrix::from_rows({{0, 1}, {1, 0}})};
  for (QVector w : {QVector{1, 1}, QVector{-1, 1}, QVector{1, 0}, QVector{0, 1}})
    EXPECT_EQ(sigma_eval(rho, w), oracle::sigma_numeric(rho, w, Rational(1, 1000)));
}

TEST(Cones, NaiveCoordinatesReconstruct) {
  std::vector<QVector> gens = {{2, 1}, {-1, 3}};
  QVector w{Rational(1, 2), 5};
  ConeCoords c = naive_cone_coords(gens, w);
  EXPECT_EQ(added(scaled(gens[0], c.lambda[0]), scaled(gens[1], c.lambda[1])), w);
  EXPECT_TRUE(c.member);
  EXPECT_FALSE(naive_cone_coords(gens, {-2, -1}).member);
}

TEST(Cones, GeneratorsArePrimitive) {
  SimplicialCone c = SimplicialCone::make({{Rational(2, 3), Rational(4, 3)}, {0, -6}});
  EXPECT_EQ(c.gens[0], (QVector{1, 2}));
  EXPECT_EQ(c.gens[1], (QVector{0, -1}));
  EXPECT_TRUE(c.contains({1, 1}));
  EXPECT_FALSE(c.contains({1, 2}));  // boundary ray of an open cone
}
