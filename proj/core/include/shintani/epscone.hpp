#pragma once

#include <map>
#include <vector>

#include "shintani/qlinalg.hpp"

namespace shintani {

// Polynomial in ε_1..ε_n with rational coefficients.
class EpsPoly {
 public:
  using Monomial = std::vector<int>;

  EpsPoly() = default;
  explicit EpsPoly(int n) : n_(n) {}
  static EpsPoly constant(int n, const Rational& c);
  // c·ε_i^k (i is zero-based).
  static EpsPoly monomial(int n, int i, int k, const Rational& c = 1);

  int nvars() const { return n_; }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Monomial& m, const Rational& c);
  // Leading monomial under the succession order; requires nonzero.
  const Monomial& leading() const;
  Rational leading_coeff() const;

  EpsPoly operator-() const;
  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + (-b); }
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(const Rational& c, const EpsPoly& a);
  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

 private:
  int n_ = 0;
  std::map<Monomial, Rational> t_;
};

// ε^r ≻ ε^s: at the highest index where they differ, r_i < s_i.
bool eps_succeeds(const EpsPoly::Monomial& r, const EpsPoly::Monomial& s);
int eps_sign(const EpsPoly& p);

using EpsMat = std::vector<std::vector<EpsPoly>>;

// Column j is α_j·b(ε_j) with b(ε) = (1, ε, ..., ε^{n-1})ᵀ.
EpsMat perturbation_matrix(const std::vector<QMatrix>& alphas);
EpsPoly eps_det(const EpsMat& m);
EpsMat eps_adjugate(const EpsMat& m);

// σ^Sh(α_1..α_n) with det M and adj M computed once.
class PerturbedCone {
 public:
  explicit PerturbedCone(const std::vector<QMatrix>& alphas);
  int operator()(const QVector& w) const;
  int det_sign() const { return det_sign_; }
  const EpsMat& matrix() const { return m_; }
  const EpsMat& adjugate() const { return adj_; }

 private:
  int n_;
  EpsMat m_;
  EpsMat adj_;
  int det_sign_;
};

// Perturbed cone function at the row w.
int sigma_eval(const std::vector<QMatrix>& alphas, const QVector& w);

struct ConeCoords {
  QVector lambda;
  bool member;
};
// w = Σ λ_j v_j; member of the open cone iff every λ_j > 0.
ConeCoords naive_cone_coords(const std::vector<QVector>& gens, const QVector& w);

// Open cone R+v_1 + ... + R+v_r, generators primitive integral.
struct SimplicialCone {
  std::vector<QVector> gens;
  static SimplicialCone make(std::vector<QVector> gens);
  int dim() const { return static_cast<int>(gens.size()); }
  // Membership for points of the ambient space.
  bool contains(const QVector& w) const;
};

struct ConeTerm {
  int sign;
  SimplicialCone cone;
};
using ConeChain = std::vector<ConeTerm>;

// First columns of the α_j, as rows.
std::vector<QVector> real_limits(const std::vector<QMatrix>& alphas);
// Throws MathError when the real limits are dependent.
ConeChain face_decompose(const std::vector<QMatrix>& alphas);
int chain_eval(const ConeChain& c, const QVector& w);

}  // namespace shintani
