#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "shintani/qlinalg.hpp"

namespace shintani {

struct ConductorOverflow : MathError {
  using MathError::MathError;
};

// Default 2^4·3^2·5·7.
inline constexpr long kDefaultConductorCap = 5040;
void set_conductor_cap(long cap);
long conductor_cap();

// Element of Q(ζ_N) in the power basis ζ_N^0..ζ_N^{φ(N)-1}, reduced mod Φ_N.
// Always stored at its minimal conductor (never ≡ 2 mod 4), with integer
// numerators over one positive denominator, so equality is structural.
class CycNum {
 public:
  CycNum() : num_{0}, den_(1) {}
  CycNum(long v) : num_{Integer(v)}, den_(1) {}  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& q) : num_{q.get_num()}, den_(q.get_den()) {}  // NOLINT

  // e(q) = exp(2πiq).
  static CycNum root_of_unity(const Rational& q);
  // Σ c_i ζ_N^i for arbitrary length; reduced and lowered.
  static CycNum from_coefficients(long N, const std::vector<Rational>& c);

  long conductor() const { return N_; }
  // Power-basis coefficients at the stored conductor (length φ(N)).
  std::vector<Rational> coefficients() const;
  // Coefficients after raising to a multiple M of the conductor.
  std::vector<Rational> coefficients_at(long M) const;

  bool is_zero() const { return N_ == 1 && num_[0] == 0; }
  bool is_rational() const { return N_ == 1; }
  Rational rational_value() const;

  CycNum inv() const;
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& c);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const Rational& c) { return a *= c; }
  friend CycNum operator*(const Rational& c, CycNum a) { return a *= c; }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }
  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.N_ == b.N_ && a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::size_t hash() const;
  // Floating-point embedding ζ_N ↦ exp(2πi/N); debugging aid only.
  std::complex<double> approx() const;

  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

 private:
  friend class CycAccum;
  // Takes ownership of an unreduced group-ring vector (exponents taken mod N).
  static CycNum from_group_ring(long N, std::vector<Integer> v, Integer den);

  long N_ = 1;
  std::vector<Integer> num_;
  Integer den_;
};

struct CycNumHash {
  std::size_t operator()(const CycNum& x) const { return x.hash(); }
};

// Sum of CycNums and products accumulated in Q[x]/(x^L - 1) without
// reduction; finish() reduces once. L must be a multiple of every conductor fed in.
class CycAccum {
 public:
  explicit CycAccum(long L);
  long modulus() const { return L_; }
  void add(const CycNum& x);
  void add(const CycNum& x, const Rational& c);
  void add_shifted(const CycNum& x, long shift);  // x·ζ_L^shift
  void addmul(const CycNum& x, const CycNum& y);
  bool empty() const { return empty_; }
  CycNum finish() const;

 private:
  void rescale_to(const Integer& den);
  void addmul_schoolbook(const CycNum& x, const CycNum& y, const Integer& f);
  void addmul_kronecker(const CycNum& x, const CycNum& y, const Integer& f);
  long L_;
  bool empty_ = true;
  std::vector<Integer> acc_;
  Integer den_ = 1;
};

long lcm_long(long a, long b);
long euler_phi(long N);

}  // namespace shintani
