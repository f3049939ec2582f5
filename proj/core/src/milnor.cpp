#include "shintani/milnor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace shintani {

TrigParam TrigParam::make(const Rational& r, QVector lambda) {
  if (is_zero(lambda)) throw MathError("trigonometric parameter needs a nonzero covector");
  return TrigParam{mod_q(r, 1), std::move(lambda)};
}

namespace {

void merge_factors(std::vector<TrigFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const TrigFactor& a, const TrigFactor& b) { return a.p < b.p; });
  std::vector<TrigFactor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().p == f.p) {
      out.back().exp += f.exp;
    } else {
      out.push_back(std::move(f));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const TrigFactor& f) { return f.exp == 0; }),
            out.end());
  fs = std::move(out);
}

bool same_factors(const std::vector<TrigFactor>& a, const std::vector<TrigFactor>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].p == b[i].p) || a[i].exp != b[i].exp) return false;
  return true;
}

}  // namespace

TrigUnit& TrigUnit::canonicalize() {
  merge_factors(eps);
  merge_factors(one_minus);
  return *this;
}

TrigUnit operator*(const TrigUnit& a, const TrigUnit& b) {
  TrigUnit r = a;
  r.sign *= b.sign;
  r.eps.insert(r.eps.end(), b.eps.begin(), b.eps.end());
  r.one_minus.insert(r.one_minus.end(), b.one_minus.begin(), b.one_minus.end());
  return r.canonicalize();
}

bool operator==(const TrigUnit& a, const TrigUnit& b) {
  return a.sign == b.sign && same_factors(a.eps, b.eps) && same_factors(a.one_minus, b.one_minus);
}

TrigUnit one_minus_unit(const TrigParam& p, long e) {
  TrigUnit u;
  u.one_minus.push_back({p, e});
  return u;
}

TrigUnit eps_unit(const TrigParam& p, long e) {
  TrigUnit u;
  u.eps.push_back({p, e});
  return u;
}

namespace {

long small_exponent(const Integer& b) {
  if (!b.fits_slong_p()) throw MathError("multiplicity does not fit a machine integer");
  return b.get_si();
}

}  // namespace

TrigUnit eta_cosets(const std::vector<ScalarCoset>& terms) {
  TrigUnit u;
  for (const auto& t : terms) {
    if (t.a.size() != 1) throw MathError("eta: one-dimensional cosets required");
    u.one_minus.push_back({TrigParam::make(t.a[0] / t.d, {1 / t.d}), small_exponent(t.b)});
  }
  return u.canonicalize();
}

TrigUnit eta(const TestFunction& f) {
  if (f.dim() != 1) throw MathError("eta: one-dimensional test function required");
  return eta_cosets(scalar_modulus_decomposition(f));
}

TrigUnit eta_plus(const TestFunction& f) {
  if (f.dim() != 1) throw MathError("eta_plus: one-dimensional test function required");
  TrigUnit u;
  for (const auto& t : scalar_modulus_decomposition(f)) {
    long b = small_exponent(t.b);
    // X - 1/X = -(1/X)(1 - X^2) with X = e((z - a)/2d).
    if (b % 2) u.sign = -u.sign;
    u.eps.push_back({TrigParam::make(-t.a[0] / (2 * t.d), {-1 / (2 * t.d)}), b});
    u.one_minus.push_back({TrigParam::make(t.a[0] / t.d, {1 / t.d}), b});
  }
  return u.canonicalize();
}

TrigUnit unit_action(const QMatrix& g, const TrigUnit& u) {
  QMatrix gi = g.inverse();
  TrigUnit r = u;
  for (auto& f : r.eps) f.p.lambda = mat_vec(gi, f.p.lambda);
  for (auto& f : r.one_minus) f.p.lambda = mat_vec(gi, f.p.lambda);
  return r.canonicalize();
}

KSymbol symbol_action(const QMatrix& g, const KSymbol& s) {
  KSymbol out;
  for (const auto& u : s) out.push_back(unit_action(g, u));
  return out;
}

KChain xi_st(const std::vector<QVector>& lambdas, const TestFunction& f) {
  int n = f.dim();
  if (static_cast<int>(lambdas.size()) != n) throw MathError("xi_st: need n covectors");
  QMatrix g = basis_to_group(lambdas);
  QMatrix gi = g.inverse();
  TestFunction gf = act_test(g, f);
  if (!gf.has_integer_values()) throw MathError("xi_st: γ·f must have integer values");
  KChain out;
  for (const auto& t : scalar_modulus_decomposition(gf)) {
    KSymbol s;
    for (int k = 0; k < n; ++k) {
      // η(χ_{a_k + dZ})(z_k), then |γ sends e_k*/d to γ⁻¹e_k*/d.
      QVector lam = scaled(gi.col(k), 1 / t.d);
      s.push_back(one_minus_unit(TrigParam::make(t.a[k] / t.d, std::move(lam))));
    }
    out.push_back({t.b, std::move(s)});
  }
  return out;
}

std::vector<QVector> st_covectors(const std::vector<QMatrix>& gammas) {
  std::vector<QVector> out;
  for (const auto& g : gammas) out.push_back(g.col(0));
  return out;
}

KChain phi_st(const std::vector<QMatrix>& gammas, const TestFunction& f) {
  auto lambdas = st_covectors(gammas);
  if (QMatrix::from_columns(lambdas).det() == 0)
    throw MathError("phi_st: covectors γ_j·e_1* are linearly dependent");
  return xi_st(lambdas, f);
}

FormalFraction trig_kernel(const TrigParam& p, int D) {
  int n = static_cast<int>(p.lambda.size());
  auto h = log_kernel(p.r, D + 1);
  if (p.r == 0) {
    auto [form, t] = canonical_linform(p.lambda);
    MultiSeries num = CycNum(1 / t) * compose_linear(h, p.lambda, n, D + 1);
    return FormalFraction(std::move(num), {form});
  }
  std::vector<CycNum> g(h.begin() + 1, h.end());
  return FormalFraction(compose_linear(g, p.lambda, n, D), {});
}

OneForm dlog_unit(const TrigUnit& u, int n, int D) {
  OneForm w;
  w.dT.assign(n, FormalFraction::zero(n, D));
  for (const auto& f : u.eps)
    for (int i = 0; i < n; ++i)
      if (f.p.lambda[i] != 0)
        w.dT[i] = w.dT[i] + FormalFraction::constant(n, D, CycNum(f.p.lambda[i] * f.exp));
  for (const auto& f : u.one_minus) {
    FormalFraction g = trig_kernel(f.p, D);
    for (int i = 0; i < n; ++i)
      if (f.p.lambda[i] != 0) w.dT[i] = w.dT[i] + CycNum(-f.p.lambda[i] * f.exp) * g;
  }
  return w;
}

namespace {

int pole_count(const TrigUnit& u) {
  std::vector<LinForm> forms;
  for (const auto& f : u.one_minus)
    if (f.p.r == 0) forms.push_back(canonical_linform(f.p.lambda).first);
  std::sort(forms.begin(), forms.end());
  return static_cast<int>(std::unique(forms.begin(), forms.end()) - forms.begin());
}

}  // namespace

TopForm dlog_symbol(const KSymbol& s, int D) {
  int n = static_cast<int>(s.size());
  std::vector<int> k;
  for (const auto& u : s) k.push_back(pole_count(u));
  int extra = std::accumulate(k.begin(), k.end(), 0) - *std::min_element(k.begin(), k.end());
  std::vector<OneForm> forms;
  for (const auto& u : s) forms.push_back(dlog_unit(u, n, D + extra));
  return wedge(forms).truncated(D);
}

KChain expand_chain(const KChain& c) {
  KChain out;
  for (const auto& t : c) {
    // Per entry: the single-factor units with their exponents.
    std::vector<std::vector<std::pair<TrigUnit, long>>> choices;
    for (const auto& u : t.symbol) {
      std::vector<std::pair<TrigUnit, long>> ch;
      for (const auto& f : u.eps) ch.emplace_back(eps_unit(f.p), f.exp);
      for (const auto& f : u.one_minus) ch.emplace_back(one_minus_unit(f.p), f.exp);
      choices.push_back(std::move(ch));
    }
    std::vector<size_t> idx(choices.size(), 0);
    bool empty = std::any_of(choices.begin(), choices.end(), [](const auto& ch) { return ch.empty(); });
    while (!empty) {
      KTerm e{t.coeff, {}};
      for (size_t i = 0; i < choices.size(); ++i) {
        e.symbol.push_back(choices[i][idx[i]].first);
        e.coeff *= choices[i][idx[i]].second;
      }
      out.push_back(std::move(e));
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return out;
}

bool has_constant_entry(const KSymbol& s) {
  return std::any_of(s.begin(), s.end(), [](const TrigUnit& u) { return u.one_minus.empty(); });
}

namespace {

// One expanded entry: a single ε (kind 0) or 1 - ε (kind 1) factor.
struct EntryKey {
  int kind;
  Rational r;
  friend bool operator<(const EntryKey& a, const EntryKey& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.r < b.r;
  }
  friend bool operator==(const EntryKey& a, const EntryKey& b) { return a.kind == b.kind && a.r == b.r; }
};

using KeyTuple = std::vector<EntryKey>;

// h(u) with dlog of the entry = (h(u)/u)·λ·dT at u = λ·T.
std::vector<CycNum> entry_kernel(const EntryKey& k, int P) {
  std::vector<CycNum> h(P + 1);
  if (k.kind == 0) {
    if (P >= 1) h[1] = CycNum(1);
    return h;
  }
  auto g = log_kernel(k.r, P);
  for (int i = 0; i <= P; ++i) h[i] = -g[i];
  return h;
}

// index in basis(m, P) of (a, exponent j of basis(m-1, P)).
const std::vector<std::vector<int>>& tensor_table(int m, int P) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, P);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const MonomialBasis& child = MonomialBasis::get(m - 1, P);
  const MonomialBasis& full = MonomialBasis::get(m, P);
  std::vector<std::vector<int>> t(child.size());
  for (int j = 0; j < child.size(); ++j)
    for (int a = 0; a + child.degree(j) <= P; ++a) {
      Exponent e{a};
      e.insert(e.end(), child.exponent(j).begin(), child.exponent(j).end());
      t[j].push_back(full.index(e));
    }
  return cache.emplace(key, std::move(t)).first->second;
}

class ProductSum {
 public:
  ProductSum(std::vector<std::pair<KeyTuple, Integer>> terms, int n, int P)
      : terms_(std::move(terms)), n_(n), P_(P) {
    for (const auto& [k, c] : terms_)
      for (const auto& e : k) {
        if (kernels_.count(e)) continue;
        kernels_.emplace(e, entry_kernel(e, P));
        L_ = lcm_long(L_, e.kind ? e.r.get_den().get_si() : 1);
      }
  }

  // Σ_t c_t ∏_i h_{t,i}(u_i).
  MultiSeries run() { return build(0, terms_.size(), 0); }

 private:
  MultiSeries build(size_t lo, size_t hi, int level) {
    int m = n_ - level;
    const MonomialBasis& basis = MonomialBasis::get(m, P_);
    std::vector<CycAccum> acc;
    acc.reserve(basis.size());
    for (int i = 0; i < basis.size(); ++i) acc.emplace_back(L_);
    size_t i = lo;
    while (i < hi) {
      size_t j = i;
      Integer c = 0;
      while (j < hi && terms_[j].first[level] == terms_[i].first[level]) c += terms_[j++].second;
      const auto& h = kernels_.at(terms_[i].first[level]);
      if (m == 1) {
        if (c != 0)
          for (int a = 0; a <= P_; ++a)
            if (!h[a].is_zero()) acc[a].add(h[a], Rational(c));
      } else {
        MultiSeries child = build(i, j, level + 1);
        const auto& tab = tensor_table(m, P_);
        for (int q = 0; q < child.basis().size(); ++q) {
          if (child[q].is_zero()) continue;
          for (size_t a = 0; a < tab[q].size(); ++a)
            if (!h[a].is_zero()) acc[tab[q][a]].addmul(h[a], child[q]);
        }
      }
      i = j;
    }
    MultiSeries out(m, P_);
    for (int k = 0; k < basis.size(); ++k)
      if (!acc[k].empty()) out[k] = acc[k].finish();
    return out;
  }

  std::vector<std::pair<KeyTuple, Integer>> terms_;
  int n_, P_;
  long L_ = 1;
  std::map<EntryKey, std::vector<CycNum>> kernels_;
};

long order_cost(const std::vector<std::pair<KeyTuple, Integer>>& terms, const std::vector<int>& perm,
                int P) {
  int n = static_cast<int>(perm.size());
  long cost = 0;
  for (int level = 0; level + 1 < n; ++level) {
    std::vector<KeyTuple> prefixes;
    for (const auto& [k, c] : terms) {
      KeyTuple p;
      for (int i = 0; i <= level; ++i) p.push_back(k[perm[i]]);
      prefixes.push_back(std::move(p));
    }
    std::sort(prefixes.begin(), prefixes.end());
    long distinct = std::unique(prefixes.begin(), prefixes.end()) - prefixes.begin();
    cost += distinct * MonomialBasis::get(n - level, P).size();
  }
  return cost;
}

TopForm dlog_group(const std::vector<QVector>& lambdas,
                   const std::map<KeyTuple, Integer>& merged, int n, int D) {
  QMatrix M = QMatrix::from_rows(lambdas);
  Rational det = M.det();
  if (det == 0) return FormalFraction::zero(n, D);
  int P = D + n;
  std::vector<std::pair<KeyTuple, Integer>> terms;
  for (const auto& [k, c] : merged)
    if (c != 0) terms.emplace_back(k, c);
  if (terms.empty()) return FormalFraction::zero(n, D);
  std::vector<int> perm(n), best;
  std::iota(perm.begin(), perm.end(), 0);
  long best_cost = -1;
  do {
    long c = order_cost(terms, perm, P);
    if (best_cost < 0 || c < best_cost) {
      best_cost = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& [k, c] : terms) {
    KeyTuple p;
    for (int i : best) p.push_back(k[i]);
    k = std::move(p);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  MultiSeries S = ProductSum(std::move(terms), n, P).run();
  std::vector<QVector> cols;
  for (int i : best) cols.push_back(lambdas[i]);
  MultiSeries num = substitute(QMatrix::from_columns(cols), S);
  Rational scale = det;
  std::vector<LinForm> dens;
  for (const auto& l : lambdas) {
    auto [form, t] = canonical_linform(l);
    dens.push_back(form);
    scale /= t;
  }
  return FormalFraction(CycNum(scale) * num, std::move(dens));
}

}  // namespace

TopForm dlog_chain(const KChain& c, int n, int D) {
  // Expanded terms grouped by their covector tuple.
  std::map<std::vector<QVector>, std::map<KeyTuple, Integer>> groups;
  for (const auto& t : expand_chain(c)) {
    if (static_cast<int>(t.symbol.size()) != n) throw MathError("dlog_chain: symbol length differs from n");
    std::vector<QVector> lam;
    KeyTuple key;
    for (const auto& u : t.symbol) {
      const TrigFactor& f = u.eps.empty() ? u.one_minus[0] : u.eps[0];
      lam.push_back(f.p.lambda);
      key.push_back({u.eps.empty() ? 1 : 0, u.eps.empty() ? f.p.r : Rational(0)});
    }
    groups[lam][key] += t.coeff;
  }
  TopForm total = FormalFraction::zero(n, D);
  for (const auto& [lam, merged] : groups) total = total + dlog_group(lam, merged, n, D);
  return total;
}

TopForm dedekind_residual(const std::vector<TrigUnit>& u, int n, int D) {
  if (static_cast<int>(u.size()) != n + 1) throw MathError("dedekind: need n + 1 units");
  KChain c;
  for (int i = 0; i <= n; ++i) {
    KSymbol s;
    for (int j = 0; j <= n; ++j)
      if (j != i) s.push_back(u[j]);
    c.push_back({i % 2 ? -1 : 1, std::move(s)});
  }
  return dlog_chain(c, n, D);
}

bool dedekind_wedge_check(const std::vector<TrigUnit>& u, int n, int D) {
  return eq_fraction(dedekind_residual(u, n, D), FormalFraction::zero(n, D), D);
}

std::vector<TrigUnit> stevens_units(const QVector& a, const Rational& d) {
  int n = static_cast<int>(a.size());
  std::vector<TrigParam> p;
  Rational asum = 0;
  QVector ones(n, 1 / d);
  for (int m = 0; m < n; ++m) {
    QVector e(n, 0);
    e[m] = 1 / d;
    p.push_back(TrigParam::make(a[m] / d, e));
    asum += a[m];
  }
  std::vector<TrigUnit> u;
  u.push_back(one_minus_unit(TrigParam::make(asum / d, ones)));
  for (int i = 0; i < n; ++i) {
    TrigUnit ui = one_minus_unit(p[i]);
    for (int m = 0; m < i; ++m) ui = ui * eps_unit(p[m]);
    u.push_back(ui);
  }
  return u;
}

namespace {

MultiSeries unit_series(const TrigUnit& u, int n, int D) {
  MultiSeries v = MultiSeries::constant(n, D, CycNum(u.sign));
  for (const auto& f : u.eps) {
    if (f.exp < 0) throw MathError("unit_series: negative exponent");
    for (long k = 0; k < f.exp; ++k) v = v * exp_affine(-f.p.r, f.p.lambda, D);
  }
  for (const auto& f : u.one_minus) {
    if (f.exp < 0) throw MathError("unit_series: negative exponent");
    MultiSeries om = MultiSeries::constant(n, D, CycNum(1)) - exp_affine(-f.p.r, f.p.lambda, D);
    for (long k = 0; k < f.exp; ++k) v = v * om;
  }
  return v;
}

}  // namespace

bool units_sum_certificate(const std::vector<TrigUnit>& u, int n, int D) {
  MultiSeries s(n, D);
  for (size_t i = 1; i < u.size(); ++i) s = s + unit_series(u[i], n, D);
  return s == unit_series(u[0], n, D);
}

CoboundaryResult stevens_coboundary_check(const QVector& a, const Rational& d, int D) {
  int n = static_cast<int>(a.size());
  TestFunction f = TestFunction::indicator(a, d);
  std::vector<QVector> tuple;
  tuple.push_back(QVector(n, 1));
  for (int i = 0; i < n; ++i) {
    QVector e(n, 0);
    e[i] = 1;
    tuple.push_back(e);
  }
  CoboundaryResult res;
  for (int i = 0; i <= n; ++i) {
    std::vector<QVector> face;
    for (int j = 0; j <= n; ++j)
      if (j != i) face.push_back(tuple[j]);
    for (auto& t : xi_st(face, f)) {
      if (i % 2) t.coeff = -t.coeff;
      res.chain.push_back(std::move(t));
    }
  }
  // Σ(-1)^i{u_0..û_i..u_n} has zero dlog; its ε-containing expansion terms are the residual.
  auto u = stevens_units(a, d);
  KChain U;
  for (int i = 0; i <= n; ++i) {
    KSymbol s;
    for (int j = 0; j <= n; ++j)
      if (j != i) s.push_back(u[j]);
    U.push_back({i % 2 ? -1 : 1, std::move(s)});
  }
  for (auto& t : expand_chain(U)) {
    if (!has_constant_entry(t.symbol)) continue;
    t.coeff = -t.coeff;
    res.residual.push_back(std::move(t));
  }
  for (const auto& t : res.residual) res.constant_factors = res.constant_factors && has_constant_entry(t.symbol);
  res.A = dlog_chain(res.chain, n, D);
  res.R = dlog_chain(res.residual, n, D);
  res.discrepancy = first_discrepancy(res.A, res.R, D);
  res.pass = res.constant_factors && !res.discrepancy;
  return res;
}

}  // namespace shintani
