#pragma once
// Independent reference computations for the unit tests. Deliberately naive.

#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "shintani/epscone.hpp"
#include "shintani/json_io.hpp"
#include "shintani/qlinalg.hpp"
#include "shintani/series.hpp"

// gtest printers.
namespace shintani {
inline void PrintTo(const CycNum& x, std::ostream* os) { *os << to_text(x); }
inline void PrintTo(const TestFunction& f, std::ostream* os) { *os << to_json(f).dump(); }
inline void PrintTo(const QMatrix& m, std::ostream* os) { *os << to_json(m).dump(); }
}  // namespace shintani

namespace oracle {

using shintani::QMatrix;
using shintani::QVector;
using shintani::Rational;

inline Rational leibniz_det(const QMatrix& m) {
  int n = m.dim();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Rational t = inv % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) t *= m(i, p[i]);
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Bernoulli numbers (B_1 = -1/2) from Σ_{j≤m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli(int P) {
  std::vector<Rational> B(P + 1);
  B[0] = 1;
  for (int m = 1; m <= P; ++m) {
    Rational s = 0;
    shintani::Integer c = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      s += Rational(c) * B[j];
      c = c * (m + 1 - j) / (j + 1);
    }
    B[m] = -s / (m + 1);
  }
  return B;
}

inline Rational factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline std::complex<double> cexp2pi(double x) { return std::polar(1.0, 2 * M_PI * x); }

// Coefficient of T^e in e(q) e^{λ·T}, as a complex number.
inline std::complex<double> exp_affine_coeff(double q, const std::vector<double>& lambda,
                                             const std::vector<int>& e) {
  std::complex<double> c = cexp2pi(q);
  for (size_t i = 0; i < e.size(); ++i) {
    double t = 1;
    for (int k = 0; k < e[i]; ++k) t *= lambda[i];
    c *= t / factorial(e[i]).get_d();
  }
  return c;
}

// Half-open parallelepiped (0,1]v_1 + ... + (0,1]v_n membership for full rank v.
inline bool in_parallelepiped(const std::vector<QVector>& v, const QVector& w) {
  int n = static_cast<int>(v.size());
  // w = μ·V: solve against V (rows v_j) by Cramer.
  QMatrix V = QMatrix::from_rows(v);
  Rational d = leibniz_det(V);
  for (int j = 0; j < n; ++j) {
    QMatrix Vj = V;
    for (int i = 0; i < n; ++i) Vj(j, i) = w[i];
    Rational mu = leibniz_det(Vj) / d;
    if (mu <= 0 || mu > 1) return false;
  }
  return true;
}

// σ via a concrete tiny perturbation ε_j = t^{(n+1)^{j}}: exact sign and cone membership.
inline int sigma_numeric(const std::vector<QMatrix>& alphas, const QVector& w, const Rational& t) {
  int n = static_cast<int>(alphas.size());
  std::vector<QVector> cols;
  Rational e = t;
  for (int j = 0; j < n; ++j) {
    QVector b(n);
    Rational p = 1;
    for (int k = 0; k < n; ++k) {
      b[k] = p;
      p *= e;
    }
    cols.push_back(shintani::mat_vec(alphas[j], b));
    for (int k = 0; k < n; ++k) e = e * e;  // much smaller for the next index
  }
  QMatrix M = QMatrix::from_columns(cols);
  Rational d = leibniz_det(M);
  if (d == 0) return 0;
  // w = Σ c_j col_j with all c_j > 0.
  for (int j = 0; j < n; ++j) {
    QMatrix Mj = M;
    for (int i = 0; i < n; ++i) Mj(i, j) = w[i];
    if (leibniz_det(Mj) / d <= 0) return 0;
  }
  return d > 0 ? 1 : -1;
}

}  // namespace oracle
