#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "shintani/cyclotomic.hpp"
#include "shintani/lattice.hpp"
#include "shintani/qlinalg.hpp"

namespace shintani {

// ∏ (a_i + d_i Z).
struct Coset {
  QVector base;
  QVector moduli;
};

struct CosetTerm {
  CycNum coeff;
  Coset coset;
};

// Locally constant function on Q^n: supported on s·Z^n, g-periodic, with
// values stored at integer indices k ∈ [0, N)^n (point s·k) where N = g/s.
// Canonical form: minimal scalar period g, then maximal step s. The zero
// function is stored with s = g = 1 and no values.
class TestFunction {
 public:
  using ValueMap = std::map<IVector, CycNum>;

  TestFunction() = default;
  explicit TestFunction(int n) : n_(n) {}

  static TestFunction from_grid(int n, Rational step, Rational period, ValueMap values);
  // χ_{a + dZ^n}.
  static TestFunction indicator(const QVector& a, const Rational& d);

  int dim() const { return n_; }
  const Rational& step() const { return step_; }
  // Support denominator h = 1/s.
  Rational h() const { return 1 / step_; }
  const Rational& period() const { return period_; }
  std::int64_t cells() const;
  const ValueMap& values() const { return vals_; }
  bool is_zero() const { return vals_.empty(); }
  bool has_integer_values() const;

  CycNum operator()(const QVector& x) const;
  // Value at grid index k, reduced mod N.
  CycNum at_index(IVector k) const;

  // Values on a finer grid: step must divide s and g must divide period.
  ValueMap values_on(const Rational& step, const Rational& period) const;

  TestFunction operator-() const;
  friend TestFunction operator+(const TestFunction& a, const TestFunction& b);
  friend TestFunction operator-(const TestFunction& a, const TestFunction& b) { return a + (-b); }
  friend TestFunction operator*(const CycNum& c, const TestFunction& f);
  friend bool operator==(const TestFunction& a, const TestFunction& b) {
    return a.n_ == b.n_ && a.step_ == b.step_ && a.period_ == b.period_ && a.vals_ == b.vals_;
  }
  friend bool operator!=(const TestFunction& a, const TestFunction& b) { return !(a == b); }

  // True when shifting by the index vector w preserves f.
  bool is_index_period(const IVector& w) const;

 private:
  void canonicalize();

  int n_ = 0;
  Rational step_ = 1;
  Rational period_ = 1;
  ValueMap vals_;
};

TestFunction normalize(int n, const std::vector<CosetTerm>& terms);

// (γ·f)(x) = f(x·γ).
TestFunction act_test(const QMatrix& g, const TestFunction& f);

TestFunction tensor(const std::vector<TestFunction>& fs);

// f̂(y) = ∫ f(x) e(-<x,y>) dh(x) with h(χ_{a+dZ}) = 1/d.
TestFunction fourier(const TestFunction& f);

// Minimal scalar period; throws on the zero function.
Rational period_lattice(const TestFunction& f);

// Smallest t > 0 with t·v in the lattice of periods of f.
Rational minimal_period_multiple(const TestFunction& f, const QVector& v);

struct ScalarCoset {
  Integer b;
  QVector a;
  Rational d;
};

// f = Σ b_j χ_{a_j + d_j Z^n}; requires rational-integer values.
std::vector<ScalarCoset> scalar_modulus_decomposition(const TestFunction& f);

}  // namespace shintani
