#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shintani/cyclotomic.hpp"
#include "shintani/qlinalg.hpp"

namespace shintani {

inline constexpr int kDefaultDegree = 8;

struct PrecisionError : MathError {
  using MathError::MathError;
};

using Exponent = std::vector<int>;

// Monomials of total degree ≤ P in n variables, graded by degree and then
// in descending lexicographic order (T1^2, T1T2, T2^2, ...).
class MonomialBasis {
 public:
  static const MonomialBasis& get(int n, int P);
  int nvars() const { return n_; }
  int precision() const { return P_; }
  int size() const { return static_cast<int>(exps_.size()); }
  const Exponent& exponent(int i) const { return exps_[i]; }
  int degree(int i) const { return deg_[i]; }
  // First index of degree d (d may equal P+1 for the end).
  int degree_begin(int d) const { return start_[d]; }
  int index(const Exponent& e) const;
  // For monomial i: pairs (j, k) with exps[i] + exps[j] = exps[k], deg ≤ P.
  const std::vector<std::pair<int, int>>& products(int i) const;

 private:
  MonomialBasis(int n, int P);
  int n_, P_;
  std::vector<Exponent> exps_;
  std::vector<int> deg_;
  std::vector<int> start_;
  mutable std::vector<std::vector<std::pair<int, int>>> prod_;
};

// Power series in T1..Tn known exactly through total degree P.
class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(int n, int P);
  static MultiSeries constant(int n, int P, const CycNum& c);
  // Σ c_i T_i.
  static MultiSeries linear(int n, int P, const QVector& c);

  int nvars() const { return n_; }
  int precision() const { return P_; }
  const MonomialBasis& basis() const { return MonomialBasis::get(n_, P_); }
  const CycNum& operator[](int i) const { return c_[i]; }
  CycNum& operator[](int i) { return c_[i]; }
  CycNum coeff(const Exponent& e) const;
  void set(const Exponent& e, const CycNum& v);

  bool is_zero() const;
  // Lowest degree with a nonzero coefficient; P+1 when zero.
  int valuation() const;
  MultiSeries truncated(int P) const;
  // Precision grows by one: exact product with a linear form.
  MultiSeries times_linear(const QVector& c) const;
  long conductor_lcm() const;

  MultiSeries operator-() const;
  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const CycNum& c, const MultiSeries& a);
  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.n_ == b.n_ && a.P_ == b.P_ && a.c_ == b.c_;
  }

 private:
  int n_ = 0;
  int P_ = 0;
  std::vector<CycNum> c_;
};

// Canonical linear form: primitive integer coefficients, first nonzero positive.
struct LinForm {
  std::vector<Integer> c;
  QVector as_vector() const;
  friend bool operator==(const LinForm& a, const LinForm& b) { return a.c == b.c; }
  friend bool operator<(const LinForm& a, const LinForm& b) { return a.c < b.c; }
};

// c·T = scale·(form·T).
std::pair<LinForm, Rational> canonical_linform(const QVector& c);

// numerator / ∏ denominators; trusted through degree precision - #denominators.
class FormalFraction {
 public:
  FormalFraction() = default;
  FormalFraction(MultiSeries num, std::vector<LinForm> dens);
  static FormalFraction zero(int n, int D) { return FormalFraction(MultiSeries(n, D), {}); }
  static FormalFraction constant(int n, int D, const CycNum& c);

  int nvars() const { return num_.nvars(); }
  const MultiSeries& numerator() const { return num_; }
  const std::vector<LinForm>& denominators() const { return dens_; }
  int trusted_degree() const { return num_.precision() - static_cast<int>(dens_.size()); }
  // Valuation as a Laurent element: numerator valuation minus #denominators.
  int valuation() const;
  bool is_zero() const { return num_.is_zero(); }

  // Re-express over a denominator multiset containing the current one.
  FormalFraction over(const std::vector<LinForm>& dens) const;
  // Drops numerator precision so that the trusted degree is at most D.
  FormalFraction truncated(int D) const;
  // Cancels denominators that divide the numerator exactly.
  FormalFraction simplified() const;

  FormalFraction operator-() const;
  friend FormalFraction operator+(const FormalFraction& a, const FormalFraction& b);
  friend FormalFraction operator-(const FormalFraction& a, const FormalFraction& b) {
    return a + (-b);
  }
  friend FormalFraction operator*(const FormalFraction& a, const FormalFraction& b);
  friend FormalFraction operator*(const CycNum& c, const FormalFraction& a);

 private:
  MultiSeries num_;
  std::vector<LinForm> dens_;
};

using TopForm = FormalFraction;

struct OneForm {
  std::vector<FormalFraction> dT;  // coefficient of dT_i
};

// Union (max multiplicity) of two sorted denominator multisets.
std::vector<LinForm> denominator_union(const std::vector<LinForm>& a, const std::vector<LinForm>& b);

// e(q)·e^{λ·T} through degree D.
MultiSeries exp_affine(const Rational& q, const QVector& lambda, int D);

// 1/(1 - e(q) e^{λ·T}) trusted through degree D.
FormalFraction reciprocal_one_minus(const Rational& q, const QVector& lambda, int D);

// Σ_k s_k (λ·T)^k through degree P.
MultiSeries compose_linear(const std::vector<CycNum>& s, const QVector& lambda, int n, int P);

// Coefficients of u/(e^u - 1) = Σ B_k u^k / k!, with B_1 = -1/2.
std::vector<Rational> bernoulli_kernel(int P);

// 1/(1 - e(q)) for q not an integer.
CycNum inverse_one_minus_root(const Rational& q);

// Power-series coefficients of u·g(u) through degree P, where
// g(u) = ζe^u / (1 - ζe^u) and ζ = e(-r).
std::vector<CycNum> log_kernel(const Rational& r, int P);

// T ↦ T·γ.
MultiSeries substitute(const QMatrix& g, const MultiSeries& s);
FormalFraction substitute(const QMatrix& g, const FormalFraction& f);
// Also multiplies by det γ.
TopForm substitute_top(const QMatrix& g, const TopForm& f);

TopForm wedge(const std::vector<OneForm>& forms);

struct Discrepancy {
  int degree;
  Exponent exponent;
  CycNum lhs;
  CycNum rhs;
};

// Compares cross-multiplied numerators through all available precision.
// Throws PrecisionError when either side is trusted below D.
bool eq_fraction(const FormalFraction& x, const FormalFraction& y, int D);
// First differing coefficient of the cross-multiplied numerators, if any.
std::optional<Discrepancy> first_discrepancy(const FormalFraction& x, const FormalFraction& y, int D);

// zN is e(1/N).
std::string to_text(const CycNum& c);
std::string to_text(const MultiSeries& s);
std::string to_text(const FormalFraction& f);

}  // namespace shintani
