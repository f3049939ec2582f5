#include "shintani/qlinalg.hpp"

#include <algorithm>
#include <cctype>

namespace shintani {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw MathError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw MathError("malformed rational literal: " + s);
  if (q.get_den() == 0) throw MathError("zero denominator in literal: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Integer num, den;
  mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_lcm(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) return 0;
  Integer num, den;
  mpz_lcm(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_gcd(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational mod_q(const Rational& x, const Rational& m) {
  if (m <= 0) throw MathError("mod_q: modulus must be positive");
  Rational t = x / m;
  return x - Rational(floor_q(t)) * m;
}

Rational dot(const QVector& x, const QVector& y) {
  if (x.size() != y.size()) throw MathError("dot: dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

QVector scaled(const QVector& v, const Rational& c) {
  QVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

QVector added(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw MathError("vector add: dimension mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational content(const QVector& v) {
  Rational c = 0;
  for (const auto& x : v) c = rat_gcd(c, x);
  if (c == 0) throw MathError("content of zero vector");
  return c;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  int n = static_cast<int>(rows.size());
  QMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw MathError("matrix must be square");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  return from_rows(cols).transpose();
}

QMatrix QMatrix::diagonal(const QVector& d) {
  QMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
  return m;
}

QVector QMatrix::row(int i) const {
  QVector r(n_);
  for (int j = 0; j < n_; ++j) r[j] = (*this)(i, j);
  return r;
}

QVector QMatrix::col(int j) const {
  QVector c(n_);
  for (int i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational QMatrix::det() const {
  QMatrix m = *this;
  Rational d = 1;
  for (int c = 0; c < n_; ++c) {
    int p = c;
    while (p < n_ && m(p, c) == 0) ++p;
    if (p == n_) return 0;
    if (p != c) {
      for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < n_; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (int j = c; j < n_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

QMatrix QMatrix::inverse() const {
  QMatrix m = *this;
  QMatrix inv = identity(n_);
  for (int c = 0; c < n_; ++c) {
    int p = c;
    while (p < n_ && m(p, c) == 0) ++p;
    if (p == n_) throw MathError("singular matrix");
    if (p != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = m(c, c);
    for (int j = 0; j < n_; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (int j = 0; j < n_; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

int QMatrix::sign() const { return sgn(det()); }

bool QMatrix::is_integral() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return is_integer(x); });
}

Rational QMatrix::content() const {
  Rational c = 0;
  for (const auto& x : a_) c = rat_gcd(c, x);
  if (c == 0) throw MathError("content of zero matrix");
  return c;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.n_ != y.n_) throw MathError("matrix product: dimension mismatch");
  int n = x.n_;
  QMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

QMatrix operator*(const Rational& c, const QMatrix& x) {
  QMatrix r = x;
  for (auto& v : r.a_) v *= c;
  return r;
}

QVector mat_vec(const QMatrix& g, const QVector& col) {
  if (static_cast<int>(col.size()) != g.dim()) throw MathError("mat_vec: dimension mismatch");
  QVector r(col.size());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) r[i] += g(i, j) * col[j];
  return r;
}

QVector vec_mat(const QVector& row, const QMatrix& g) {
  if (static_cast<int>(row.size()) != g.dim()) throw MathError("vec_mat: dimension mismatch");
  QVector r(row.size());
  for (int j = 0; j < g.dim(); ++j)
    for (int i = 0; i < g.dim(); ++i) r[j] += row[i] * g(i, j);
  return r;
}

MatrixOps matrix_ops(const QMatrix& g) {
  Rational d = g.det();
  if (d == 0) throw MathError("matrix_ops: singular matrix");
  return {g.inverse(), g.transpose(), d, sgn(d)};
}

QMatrix shift_permutation(int n) {
  if (n < 1) throw MathError("shift_permutation: n must be positive");
  QMatrix r(n);
  r(0, n - 1) = 1;
  for (int i = 0; i + 1 < n; ++i) r(i + 1, i) = 1;
  return r;
}

QMatrix matrix_power(const QMatrix& g, int k) {
  if (k < 0) return matrix_power(g.inverse(), -k);
  QMatrix r = QMatrix::identity(g.dim());
  for (int i = 0; i < k; ++i) r = r * g;
  return r;
}

QVector covector_action(const QMatrix& g, const QVector& lambda) { return mat_vec(g, lambda); }

QMatrix basis_to_group(const std::vector<QVector>& lambdas) {
  // γ·[λ_0 ... λ_{n-1}] = I, so γ is the inverse of the column matrix.
  QMatrix cols = QMatrix::from_columns(lambdas);
  if (cols.det() == 0) throw MathError("basis_to_group: covectors are linearly dependent");
  return cols.inverse();
}

}  // namespace shintani
