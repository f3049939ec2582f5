#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shintani {

using Rational = mpq_class;
using Integer = mpz_class;

// Rows are points of V, columns are covectors; λ(x) = x·λ.
using QVector = std::vector<Rational>;

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a/b in lowest terms; mpq_class(a, b) alone does not reduce.
inline Rational frac(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// gcd and lcm in the group Q: gcd(p1/q1, p2/q2) generates p1/q1 Z + p2/q2 Z.
Rational rat_gcd(const Rational& a, const Rational& b);
Rational rat_lcm(const Rational& a, const Rational& b);
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);
// Representative of x modulo m in [0, m).
Rational mod_q(const Rational& x, const Rational& m);
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational dot(const QVector& x, const QVector& y);
QVector scaled(const QVector& v, const Rational& c);
QVector added(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);
// Positive c with v / c a primitive integer vector; v must be nonzero.
Rational content(const QVector& v);

class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_columns(const std::vector<QVector>& cols);
  static QMatrix diagonal(const QVector& d);

  int dim() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  QVector row(int i) const;
  QVector col(int j) const;
  QMatrix transpose() const;
  Rational det() const;
  // Throws MathError when singular.
  QMatrix inverse() const;
  int sign() const;
  bool is_integral() const;
  // Positive rational gcd of all entries (the matrix must be nonzero).
  Rational content() const;

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator*(const Rational& c, const QMatrix& x);
  friend bool operator==(const QMatrix& x, const QMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

// γ·λ as a column product.
QVector mat_vec(const QMatrix& g, const QVector& col);
// x·γ as a row product.
QVector vec_mat(const QVector& row, const QMatrix& g);

struct MatrixOps {
  QMatrix inverse;
  QMatrix transpose;
  Rational det;
  int sign;
};
MatrixOps matrix_ops(const QMatrix& g);

// ρ with ρ(0,n-1) = 1 and ρ(i+1,i) = 1.
QMatrix shift_permutation(int n);
QMatrix matrix_power(const QMatrix& g, int k);

// (γ·λ)(x) = λ(x·γ), i.e. the column γλ.
QVector covector_action(const QMatrix& g, const QVector& lambda);

// The unique γ with γ·λ_i = e*_{i+1}; throws on dependent input.
QMatrix basis_to_group(const std::vector<QVector>& lambdas);

}  // namespace shintani
