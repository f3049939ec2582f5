#include "shintani/series.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace shintani {

namespace {

void gen_exponents(int n, int d, int var, Exponent& cur, std::vector<Exponent>& out) {
  if (var == n - 1) {
    cur[var] = d;
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[var] = e;
    gen_exponents(n, d - e, var + 1, cur, out);
  }
}

struct BasisStore {
  std::mutex mu;
  std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  std::map<std::pair<int, int>, std::unique_ptr<std::map<Exponent, int>>> index;
  std::map<std::pair<int, int>, std::unique_ptr<std::vector<int>>> up;
  std::map<std::pair<int, int>, std::unique_ptr<std::once_flag>> flags;
};

BasisStore& store() {
  static BasisStore s;
  return s;
}

// index of exps[i] + e_var in basis(n, P+1).
const std::vector<int>& up_table(int n, int P) {
  auto& s = store();
  {
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.up.find({n, P});
    if (it != s.up.end()) return *it->second;
  }
  const MonomialBasis& b = MonomialBasis::get(n, P);
  const MonomialBasis& big = MonomialBasis::get(n, P + 1);
  auto t = std::make_unique<std::vector<int>>(static_cast<size_t>(b.size()) * n);
  for (int i = 0; i < b.size(); ++i)
    for (int v = 0; v < n; ++v) {
      Exponent e = b.exponent(i);
      ++e[v];
      (*t)[static_cast<size_t>(i) * n + v] = big.index(e);
    }
  std::lock_guard<std::mutex> lock(s.mu);
  auto [it, ok] = s.up.emplace(std::make_pair(n, P), std::move(t));
  return *it->second;
}

Rational factorial(int k) {
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return Rational(r);
}

std::string cyc_text(const CycNum& c) {
  if (c.is_rational()) return to_string(c.rational_value());
  std::ostringstream os;
  os << "(";
  bool first = true;
  auto coeffs = c.coefficients();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << (coeffs[i] > 0 ? " + " : " - ");
    else if (coeffs[i] < 0) os << "-";
    first = false;
    Rational a = abs(coeffs[i]);
    if (i == 0) {
      os << to_string(a);
      continue;
    }
    if (a != 1) os << to_string(a) << "*";
    os << "z" << c.conductor();
    if (i > 1) os << "^" << i;
  }
  os << ")";
  return os.str();
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int P) : n_(n), P_(P) {
  if (n < 1 || P < 0) throw MathError("monomial basis: bad shape");
  Exponent cur(n, 0);
  for (int d = 0; d <= P; ++d) {
    start_.push_back(static_cast<int>(exps_.size()));
    gen_exponents(n, d, 0, cur, exps_);
  }
  start_.push_back(static_cast<int>(exps_.size()));
  for (const auto& e : exps_) {
    int s = 0;
    for (int x : e) s += x;
    deg_.push_back(s);
  }
}

const MonomialBasis& MonomialBasis::get(int n, int P) {
  auto& s = store();
  std::lock_guard<std::mutex> lock(s.mu);
  auto key = std::make_pair(n, P);
  auto it = s.cache.find(key);
  if (it != s.cache.end()) return *it->second;
  std::unique_ptr<MonomialBasis> b(new MonomialBasis(n, P));
  auto idx = std::make_unique<std::map<Exponent, int>>();
  for (int i = 0; i < b->size(); ++i) idx->emplace(b->exps_[i], i);
  s.index.emplace(key, std::move(idx));
  s.flags.emplace(key, std::make_unique<std::once_flag>());
  return *s.cache.emplace(key, std::move(b)).first->second;
}

int MonomialBasis::index(const Exponent& e) const {
  auto& s = store();
  const std::map<Exponent, int>* idx;
  {
    std::lock_guard<std::mutex> lock(s.mu);
    idx = s.index.at({n_, P_}).get();
  }
  auto it = idx->find(e);
  if (it == idx->end()) return -1;
  return it->second;
}

const std::vector<std::pair<int, int>>& MonomialBasis::products(int i) const {
  std::once_flag* flag;
  {
    auto& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    flag = s.flags.at({n_, P_}).get();
  }
  std::call_once(*flag, [this] {
    prod_.resize(exps_.size());
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size() && deg_[a] + deg_[b] <= P_; ++b) {
        if (deg_[a] + deg_[b] > P_) break;
        Exponent e = exps_[a];
        for (int v = 0; v < n_; ++v) e[v] += exps_[b][v];
        prod_[a].emplace_back(b, index(e));
      }
  });
  return prod_[i];
}

MultiSeries::MultiSeries(int n, int P) : n_(n), P_(P), c_(MonomialBasis::get(n, P).size()) {}

MultiSeries MultiSeries::constant(int n, int P, const CycNum& c) {
  MultiSeries s(n, P);
  s.c_[0] = c;
  return s;
}

MultiSeries MultiSeries::linear(int n, int P, const QVector& c) {
  MultiSeries s(n, P);
  if (P < 1) return s;
  for (int i = 0; i < n; ++i) s.c_[1 + i] = CycNum(c[i]);
  return s;
}

CycNum MultiSeries::coeff(const Exponent& e) const {
  int i = basis().index(e);
  return i < 0 ? CycNum() : c_[i];
}

void MultiSeries::set(const Exponent& e, const CycNum& v) {
  int i = basis().index(e);
  if (i < 0) throw PrecisionError("monomial beyond series precision");
  c_[i] = v;
}

bool MultiSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const CycNum& x) { return x.is_zero(); });
}

int MultiSeries::valuation() const {
  const auto& b = basis();
  for (int i = 0; i < b.size(); ++i)
    if (!c_[i].is_zero()) return b.degree(i);
  return P_ + 1;
}

MultiSeries MultiSeries::truncated(int P) const {
  if (P > P_) throw PrecisionError("cannot raise series precision by truncation");
  MultiSeries s(n_, P);
  std::copy(c_.begin(), c_.begin() + s.c_.size(), s.c_.begin());
  return s;
}

long MultiSeries::conductor_lcm() const {
  long L = 1;
  for (const auto& x : c_) L = lcm_long(L, x.conductor());
  return L;
}

MultiSeries MultiSeries::times_linear(const QVector& c) const {
  MultiSeries r(n_, P_ + 1);
  const auto& up = up_table(n_, P_);
  long L = conductor_lcm();
  std::vector<CycAccum> acc(r.c_.size(), CycAccum(1));
  std::vector<bool> used(r.c_.size(), false);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (int v = 0; v < n_; ++v) {
      if (c[v] == 0) continue;
      int k = up[i * n_ + v];
      if (!used[k]) {
        acc[k] = CycAccum(L);
        used[k] = true;
      }
      acc[k].add(c_[i], c[v]);
    }
  }
  for (size_t k = 0; k < r.c_.size(); ++k)
    if (used[k]) r.c_[k] = acc[k].finish();
  return r;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  if (a.n_ != b.n_) throw MathError("series sum: dimension mismatch");
  MultiSeries r(a.n_, std::min(a.P_, b.P_));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

MultiSeries operator*(const CycNum& c, const MultiSeries& a) {
  MultiSeries r = a;
  if (c == CycNum(1)) return r;
  for (auto& x : r.c_)
    if (!x.is_zero()) x = c * x;
  return r;
}

namespace {

// Product exact through degree P, which must not exceed what the inputs support.
MultiSeries mul_to(const MultiSeries& a, const MultiSeries& b, int P) {
  int n = a.nvars();
  MultiSeries r(n, P);
  const MonomialBasis& basis = MonomialBasis::get(n, P);
  long L = lcm_long(a.conductor_lcm(), b.conductor_lcm());
  std::vector<CycAccum> acc;
  acc.reserve(basis.size());
  for (int k = 0; k < basis.size(); ++k) acc.emplace_back(L);
  int na = std::min(basis.size(), MonomialBasis::get(n, a.precision()).size());
  int nb = std::min(basis.size(), MonomialBasis::get(n, b.precision()).size());
  for (int i = 0; i < na; ++i) {
    if (a[i].is_zero()) continue;
    for (auto [j, k] : basis.products(i)) {
      if (j >= nb) break;
      if (!b[j].is_zero()) acc[k].addmul(a[i], b[j]);
    }
  }
  for (int k = 0; k < basis.size(); ++k)
    if (!acc[k].empty()) r[k] = acc[k].finish();
  return r;
}

}  // namespace

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  if (a.n_ != b.n_) throw MathError("series product: dimension mismatch");
  return mul_to(a, b, std::min(a.P_, b.P_));
}

QVector LinForm::as_vector() const {
  QVector v(c.size());
  for (size_t i = 0; i < c.size(); ++i) v[i] = Rational(c[i]);
  return v;
}

std::pair<LinForm, Rational> canonical_linform(const QVector& c) {
  if (is_zero(c)) throw MathError("linear form must be nonzero");
  Rational t = content(c);
  for (const auto& x : c)
    if (x != 0) {
      if (x < 0) t = -t;
      break;
    }
  LinForm f;
  for (const auto& x : c) f.c.push_back(Rational(x / t).get_num());
  return {f, t};
}

std::vector<LinForm> denominator_union(const std::vector<LinForm>& a, const std::vector<LinForm>& b) {
  std::vector<LinForm> out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

// a minus b as multisets; b must be contained in a.
std::vector<LinForm> multiset_minus(const std::vector<LinForm>& a, const std::vector<LinForm>& b) {
  std::vector<LinForm> out;
  size_t j = 0;
  for (const auto& x : a) {
    if (j < b.size() && b[j] == x) {
      ++j;
      continue;
    }
    out.push_back(x);
  }
  if (j != b.size()) throw MathError("denominator multiset is not contained");
  return out;
}

std::vector<LinForm> multiset_common(const std::vector<LinForm>& a, const std::vector<LinForm>& b) {
  std::vector<LinForm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<MultiSeries> divide_linear(const MultiSeries& s, const LinForm& f) {
  int n = s.nvars();
  int P = s.precision();
  if (P < 1) return std::nullopt;
  const MonomialBasis& b = s.basis();
  if (!s[0].is_zero()) return std::nullopt;
  int j = 0;
  while (f.c[j] == 0) ++j;
  MultiSeries q(n, P - 1);
  const MonomialBasis& qb = q.basis();
  long L = s.conductor_lcm();
  for (int d = 1; d <= P; ++d) {
    std::map<int, CycNum> rem;
    for (int i = b.degree_begin(d); i < b.degree_begin(d + 1); ++i)
      if (!s[i].is_zero()) rem.emplace(i, s[i]);
    std::vector<int> order;
    for (int i = b.degree_begin(d); i < b.degree_begin(d + 1); ++i) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return b.exponent(x)[j] > b.exponent(y)[j]; });
    for (int i : order) {
      if (b.exponent(i)[j] == 0) break;
      auto it = rem.find(i);
      if (it == rem.end() || it->second.is_zero()) continue;
      CycNum qc = it->second * frac(1, f.c[j]);
      rem.erase(it);
      Exponent beta = b.exponent(i);
      --beta[j];
      q[qb.index(beta)] = qc;
      for (int v = 0; v < n; ++v) {
        if (v == j || f.c[v] == 0) continue;
        Exponent e = beta;
        ++e[v];
        int k = b.index(e);
        CycNum delta = qc * Rational(f.c[v]);
        auto [jt, ins] = rem.try_emplace(k, -delta);
        if (!ins) jt->second -= delta;
      }
    }
    for (const auto& kv : rem)
      if (!kv.second.is_zero()) return std::nullopt;
  }
  (void)L;
  return q;
}

}  // namespace

FormalFraction::FormalFraction(MultiSeries num, std::vector<LinForm> dens)
    : num_(std::move(num)), dens_(std::move(dens)) {
  std::sort(dens_.begin(), dens_.end());
  if (num_.precision() < static_cast<int>(dens_.size()))
    throw PrecisionError("numerator precision below denominator count");
}

FormalFraction FormalFraction::constant(int n, int D, const CycNum& c) {
  return FormalFraction(MultiSeries::constant(n, D, c), {});
}

int FormalFraction::valuation() const {
  return num_.valuation() - static_cast<int>(dens_.size());
}

FormalFraction FormalFraction::over(const std::vector<LinForm>& dens) const {
  std::vector<LinForm> extra = multiset_minus(dens, dens_);
  MultiSeries num = num_;
  for (const auto& f : extra) num = num.times_linear(f.as_vector());
  return FormalFraction(std::move(num), dens);
}

FormalFraction FormalFraction::truncated(int D) const {
  int P = D + static_cast<int>(dens_.size());
  if (P >= num_.precision()) return *this;
  return FormalFraction(num_.truncated(P), dens_);
}

FormalFraction FormalFraction::simplified() const {
  MultiSeries num = num_;
  std::vector<LinForm> kept;
  for (const auto& f : dens_) {
    auto q = divide_linear(num, f);
    if (q) {
      num = std::move(*q);
    } else {
      kept.push_back(f);
    }
  }
  return FormalFraction(std::move(num), std::move(kept));
}

FormalFraction FormalFraction::operator-() const { return FormalFraction(-num_, dens_); }

FormalFraction operator+(const FormalFraction& a, const FormalFraction& b) {
  if (a.nvars() != b.nvars()) throw MathError("fraction sum: dimension mismatch");
  if (a.dens_ == b.dens_) return FormalFraction(a.num_ + b.num_, a.dens_);
  std::vector<LinForm> u = denominator_union(a.dens_, b.dens_);
  return FormalFraction(a.over(u).num_ + b.over(u).num_, u);
}

FormalFraction operator*(const FormalFraction& a, const FormalFraction& b) {
  if (a.nvars() != b.nvars()) throw MathError("fraction product: dimension mismatch");
  int va = a.num_.valuation(), vb = b.num_.valuation();
  int P = std::min(a.num_.precision() + std::min(vb, b.num_.precision()),
                   b.num_.precision() + std::min(va, a.num_.precision()));
  int k = static_cast<int>(a.dens_.size() + b.dens_.size());
  std::vector<LinForm> dens = a.dens_;
  dens.insert(dens.end(), b.dens_.begin(), b.dens_.end());
  // Cap the work at what the inputs' trusted degrees can support.
  int cap = std::min(a.trusted_degree(), b.trusted_degree()) + k +
            std::max(0, std::max(va, vb));
  P = std::max(std::min(P, cap), k);
  return FormalFraction(mul_to(a.num_, b.num_, P), std::move(dens));
}

FormalFraction operator*(const CycNum& c, const FormalFraction& a) {
  return FormalFraction(c * a.num_, a.dens_);
}

MultiSeries compose_linear(const std::vector<CycNum>& s, const QVector& lambda, int n, int P) {
  MultiSeries r(n, P);
  const MonomialBasis& b = r.basis();
  for (int i = 0; i < b.size(); ++i) {
    int d = b.degree(i);
    if (d >= static_cast<int>(s.size()) || s[d].is_zero()) continue;
    Rational m = factorial(d);
    for (int v = 0; v < n; ++v) {
      int e = b.exponent(i)[v];
      if (e == 0) continue;
      if (lambda[v] == 0) {
        m = 0;
        break;
      }
      Rational p = 1;
      for (int t = 0; t < e; ++t) p *= lambda[v];
      m *= p / factorial(e);
    }
    if (m != 0) r[i] = s[d] * m;
  }
  return r;
}

MultiSeries exp_affine(const Rational& q, const QVector& lambda, int D) {
  CycNum z = CycNum::root_of_unity(q);
  std::vector<CycNum> s(D + 1);
  for (int k = 0; k <= D; ++k) s[k] = z * (1 / factorial(k));
  return compose_linear(s, lambda, static_cast<int>(lambda.size()), D);
}

std::vector<Rational> bernoulli_kernel(int P) {
  static std::mutex mu;
  static std::vector<Rational> B{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(B.size()) <= P) {
    int m = static_cast<int>(B.size());
    Rational s = 0;
    Integer binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += Rational(binom) * B[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    B.push_back(-s / (m + 1));
  }
  std::vector<Rational> out(P + 1);
  for (int k = 0; k <= P; ++k) out[k] = B[k] / factorial(k);
  return out;
}

CycNum inverse_one_minus_root(const Rational& q) {
  Rational f = q - Rational(floor_q(q));
  if (f == 0) throw MathError("1/(1 - e(q)) undefined for integer q");
  long N = f.get_den().get_si();
  long a = f.get_num().get_si();
  std::vector<Rational> c(N, 0);
  for (long k = 1; k < N; ++k) c[(a * k) % N] += frac(-k, N);
  return CycNum::from_coefficients(N, c);
}

namespace {

// Coefficients of 1/(1 - ζe^u) with ζ = e(q), q not an integer.
std::vector<CycNum> reciprocal_kernel(const Rational& q, int P) {
  CycNum w = inverse_one_minus_root(q);
  CycNum c = CycNum::root_of_unity(q) * w;
  long L = lcm_long(w.conductor(), c.conductor());
  std::vector<CycNum> b(P + 1);
  b[0] = w;
  for (int k = 1; k <= P; ++k) {
    CycAccum acc(L);
    for (int j = 1; j <= k; ++j) acc.add(b[k - j], 1 / factorial(j));
    b[k] = c * acc.finish();
  }
  return b;
}

}  // namespace

std::vector<CycNum> log_kernel(const Rational& r, int P) {
  std::vector<CycNum> out(P + 1);
  if (is_integer(r)) {
    auto B = bernoulli_kernel(P);
    for (int k = 0; k <= P; ++k) out[k] = CycNum(-B[k] - (k == 1 ? Rational(1) : Rational(0)));
    return out;
  }
  if (P == 0) return out;
  auto b = reciprocal_kernel(-r, P - 1);
  b[0] -= CycNum(1);
  for (int k = 1; k <= P; ++k) out[k] = b[k - 1];
  return out;
}

FormalFraction reciprocal_one_minus(const Rational& q, const QVector& lambda, int D) {
  int n = static_cast<int>(lambda.size());
  if (is_zero(lambda)) {
    if (is_integer(q)) throw MathError("reciprocal_one_minus: division by zero (q integer, λ = 0)");
    return FormalFraction::constant(n, D, inverse_one_minus_root(q));
  }
  if (!is_integer(q)) return FormalFraction(compose_linear(reciprocal_kernel(q, D), lambda, n, D), {});
  auto B = bernoulli_kernel(D + 1);
  std::vector<CycNum> s(D + 2);
  for (int k = 0; k <= D + 1; ++k) s[k] = CycNum(-B[k]);
  auto [form, t] = canonical_linform(lambda);
  MultiSeries num = CycNum(1 / t) * compose_linear(s, lambda, n, D + 1);
  return FormalFraction(std::move(num), {form});
}

MultiSeries substitute(const QMatrix& g, const MultiSeries& s) {
  int n = s.nvars();
  if (g.dim() != n) throw MathError("substitute: dimension mismatch");
  int P = s.precision();
  const MonomialBasis& b = s.basis();
  // Image of each monomial as a dense vector on its degree block.
  std::vector<std::vector<Rational>> img(b.size());
  img[0] = {Rational(1)};
  for (int i = 1; i < b.size(); ++i) {
    const Exponent& e = b.exponent(i);
    int j = 0;
    while (e[j] == 0) ++j;
    Exponent pe = e;
    --pe[j];
    int parent = b.index(pe);
    int d = b.degree(i);
    int pbeg = b.degree_begin(d - 1);
    int beg = b.degree_begin(d);
    std::vector<Rational> out(b.degree_begin(d + 1) - beg);
    const auto& up = up_table(n, P);
    for (size_t t = 0; t < img[parent].size(); ++t) {
      if (img[parent][t] == 0) continue;
      int mono = pbeg + static_cast<int>(t);
      for (int v = 0; v < n; ++v) {
        if (g(v, j) == 0) continue;
        out[up[static_cast<size_t>(mono) * n + v] - beg] += img[parent][t] * g(v, j);
      }
    }
    img[i] = std::move(out);
  }
  MultiSeries r(n, P);
  long L = s.conductor_lcm();
  for (int d = 0; d <= P; ++d) {
    int beg = b.degree_begin(d), end = b.degree_begin(d + 1);
    for (int k = beg; k < end; ++k) {
      CycAccum acc(L);
      for (int i = beg; i < end; ++i)
        if (!s[i].is_zero() && img[i][k - beg] != 0) acc.add(s[i], img[i][k - beg]);
      r[k] = acc.finish();
    }
  }
  return r;
}

FormalFraction substitute(const QMatrix& g, const FormalFraction& f) {
  MultiSeries num = substitute(g, f.numerator());
  std::vector<LinForm> dens;
  Rational scale = 1;
  for (const auto& form : f.denominators()) {
    auto [p, t] = canonical_linform(mat_vec(g, form.as_vector()));
    dens.push_back(p);
    scale /= t;
  }
  return FormalFraction(CycNum(scale) * num, std::move(dens));
}

TopForm substitute_top(const QMatrix& g, const TopForm& f) {
  return CycNum(g.det()) * substitute(g, f);
}

TopForm wedge(const std::vector<OneForm>& forms) {
  int n = static_cast<int>(forms.size());
  if (n == 0) throw MathError("wedge: no forms");
  for (const auto& w : forms)
    if (static_cast<int>(w.dT.size()) != n) throw MathError("wedge: dimension mismatch");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::optional<FormalFraction> total;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    bool skip = false;
    for (int i = 0; i < n && !skip; ++i) skip = forms[i].dT[perm[i]].is_zero();
    if (skip) continue;
    FormalFraction term = forms[0].dT[perm[0]];
    for (int i = 1; i < n; ++i) term = term * forms[i].dT[perm[i]];
    if (inv % 2) term = -term;
    total = total ? *total + term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!total) {
    int D = forms[0].dT[0].trusted_degree();
    for (const auto& w : forms)
      for (const auto& c : w.dT) D = std::min(D, c.trusted_degree());
    return FormalFraction::zero(n, D);
  }
  return *total;
}

namespace {

std::pair<MultiSeries, MultiSeries> cross_numerators(const FormalFraction& x,
                                                     const FormalFraction& y, int D) {
  if (x.nvars() != y.nvars()) throw MathError("comparison: dimension mismatch");
  if (x.trusted_degree() < D || y.trusted_degree() < D)
    throw PrecisionError("comparison needs both sides trusted through degree " + std::to_string(D) +
                         " (have " + std::to_string(x.trusted_degree()) + " and " +
                         std::to_string(y.trusted_degree()) + ")");
  auto common = multiset_common(x.denominators(), y.denominators());
  auto onlyx = multiset_minus(x.denominators(), common);
  auto onlyy = multiset_minus(y.denominators(), common);
  MultiSeries l = x.numerator();
  for (const auto& f : onlyy) l = l.times_linear(f.as_vector());
  MultiSeries r = y.numerator();
  for (const auto& f : onlyx) r = r.times_linear(f.as_vector());
  int P = std::min(l.precision(), r.precision());
  return {l.truncated(P), r.truncated(P)};
}

}  // namespace

std::optional<Discrepancy> first_discrepancy(const FormalFraction& x, const FormalFraction& y,
                                             int D) {
  auto [l, r] = cross_numerators(x, y, D);
  const MonomialBasis& b = l.basis();
  for (int i = 0; i < b.size(); ++i)
    if (l[i] != r[i]) return Discrepancy{b.degree(i), b.exponent(i), l[i], r[i]};
  return std::nullopt;
}

bool eq_fraction(const FormalFraction& x, const FormalFraction& y, int D) {
  return !first_discrepancy(x, y, D).has_value();
}

std::string to_text(const CycNum& c) { return cyc_text(c); }

std::string to_text(const MultiSeries& s) {
  std::ostringstream os;
  const MonomialBasis& b = s.basis();
  bool first = true;
  for (int i = 0; i < b.size(); ++i) {
    if (s[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << cyc_text(s[i]);
    for (int v = 0; v < s.nvars(); ++v) {
      int e = b.exponent(i)[v];
      if (e == 0) continue;
      os << "*T" << (v + 1);
      if (e > 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << " + O(deg " << (s.precision() + 1) << ")";
  return os.str();
}

std::string to_text(const FormalFraction& f) {
  std::ostringstream os;
  os << "[" << to_text(f.numerator()) << "]";
  for (const auto& d : f.denominators()) {
    os << " / (";
    bool first = true;
    for (size_t i = 0; i < d.c.size(); ++i) {
      if (d.c[i] == 0) continue;
      if (!first) os << (d.c[i] > 0 ? " + " : " - ");
      else if (d.c[i] < 0) os << "-";
      first = false;
      Integer a = abs(d.c[i]);
      if (a != 1) os << a.get_str() << "*";
      os << "T" << (i + 1);
    }
    os << ")";
  }
  return os.str();
}

}  // namespace shintani
