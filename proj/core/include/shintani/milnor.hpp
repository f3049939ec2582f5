#pragma once

#include <optional>
#include <vector>

#include "shintani/schwartz.hpp"
#include "shintani/series.hpp"

namespace shintani {

// ε(z) = e(λ(z) - r) = e(-r) e^{λ·T}; r kept in [0, 1).
struct TrigParam {
  Rational r;
  QVector lambda;
  static TrigParam make(const Rational& r, QVector lambda);
  friend bool operator==(const TrigParam& a, const TrigParam& b) {
    return a.r == b.r && a.lambda == b.lambda;
  }
  friend bool operator<(const TrigParam& a, const TrigParam& b) {
    return a.r != b.r ? a.r < b.r : a.lambda < b.lambda;
  }
};

struct TrigFactor {
  TrigParam p;
  long exp;
};

// sign · ∏ ε^e · ∏ (1 - ε)^e.
struct TrigUnit {
  int sign = 1;
  std::vector<TrigFactor> eps;
  std::vector<TrigFactor> one_minus;

  // Merges equal parameters and drops zero exponents; factors sorted.
  TrigUnit& canonicalize();
  friend TrigUnit operator*(const TrigUnit& a, const TrigUnit& b);
  friend bool operator==(const TrigUnit& a, const TrigUnit& b);
};

TrigUnit one_minus_unit(const TrigParam& p, long e = 1);
TrigUnit eps_unit(const TrigParam& p, long e = 1);

using KSymbol = std::vector<TrigUnit>;

struct KTerm {
  Integer coeff;
  KSymbol symbol;
};
using KChain = std::vector<KTerm>;

// Kubota-Leopoldt distribution on one-dimensional integer-valued test functions.
TrigUnit eta(const TestFunction& f);
// η of an explicit presentation Σ b_j χ_{a_j + d_j Z}, without normalizing it first.
TrigUnit eta_cosets(const std::vector<ScalarCoset>& terms);
TrigUnit eta_plus(const TestFunction& f);

// (F|γ)(x) = F(x·γ⁻¹): λ ↦ γ⁻¹λ.
TrigUnit unit_action(const QMatrix& g, const TrigUnit& u);
KSymbol symbol_action(const QMatrix& g, const KSymbol& s);

KChain xi_st(const std::vector<QVector>& lambdas, const TestFunction& f);
// Covectors γ_j·e_1*, i.e. the first columns.
std::vector<QVector> st_covectors(const std::vector<QMatrix>& gammas);
KChain phi_st(const std::vector<QMatrix>& gammas, const TestFunction& f);

// g(u) = ζe^u/(1 - ζe^u) at u = λ·T with ζ = e(-r), trusted through D.
FormalFraction trig_kernel(const TrigParam& p, int D);

OneForm dlog_unit(const TrigUnit& u, int n, int D);
// Dimension is taken from the covectors; generic wedge evaluation.
TopForm dlog_symbol(const KSymbol& s, int D);
TopForm dlog_chain(const KChain& c, int n, int D);

// Σ_i (-1)^i dlog{u_0, ..., û_i, ..., u_n}; the caller certifies u_0 = u_1 + ... + u_n.
TopForm dedekind_residual(const std::vector<TrigUnit>& u, int n, int D);
bool dedekind_wedge_check(const std::vector<TrigUnit>& u, int n, int D);

// The u_i of the Stevens cocycle proof for χ_{a + dZ^n}: u_0 first.
std::vector<TrigUnit> stevens_units(const QVector& a, const Rational& d);
// Exact check of u_0 = u_1 + ... + u_n at the series level (a certificate, not a proof).
bool units_sum_certificate(const std::vector<TrigUnit>& u, int n, int D);

// Expands entries multiplicatively into single-factor symbols.
KChain expand_chain(const KChain& c);
// True when some entry of the symbol is a pure exponential (or ±1).
bool has_constant_entry(const KSymbol& s);

struct CoboundaryResult {
  TopForm A;
  TopForm R;
  KChain chain;     // Σ (-1)^i ξ(face i)
  KChain residual;  // J-terms whose dlog is R
  bool constant_factors = true;
  bool pass = false;
  std::optional<Discrepancy> discrepancy;
};
CoboundaryResult stevens_coboundary_check(const QVector& a, const Rational& d, int D);

}  // namespace shintani
