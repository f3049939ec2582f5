#include "shintani/epscone.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace shintani {

EpsPoly EpsPoly::constant(int n, const Rational& c) {
  EpsPoly p(n);
  p.add_term(Monomial(n, 0), c);
  return p;
}

EpsPoly EpsPoly::monomial(int n, int i, int k, const Rational& c) {
  EpsPoly p(n);
  Monomial m(n, 0);
  m[i] = k;
  p.add_term(m, c);
  return p;
}

void EpsPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = t_.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

bool eps_succeeds(const EpsPoly::Monomial& r, const EpsPoly::Monomial& s) {
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i)
    if (r[i] != s[i]) return r[i] < s[i];
  return false;
}

const EpsPoly::Monomial& EpsPoly::leading() const {
  if (t_.empty()) throw MathError("leading term of zero");
  auto best = t_.begin();
  for (auto it = t_.begin(); it != t_.end(); ++it)
    if (eps_succeeds(it->first, best->first)) best = it;
  return best->first;
}

Rational EpsPoly::leading_coeff() const { return t_.at(leading()); }

int eps_sign(const EpsPoly& p) {
  if (p.is_zero()) return 0;
  return sgn(p.leading_coeff());
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly r = *this;
  for (auto& kv : r.t_) kv.second = -kv.second;
  return r;
}

EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly r = a;
  if (r.n_ == 0) r.n_ = b.n_;
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly r(std::max(a.n_, b.n_));
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      EpsPoly::Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

EpsPoly operator*(const Rational& c, const EpsPoly& a) {
  EpsPoly r(a.n_);
  if (c == 0) return r;
  r.t_ = a.t_;
  for (auto& kv : r.t_) kv.second *= c;
  return r;
}

EpsMat perturbation_matrix(const std::vector<QMatrix>& alphas) {
  int n = static_cast<int>(alphas.size());
  EpsMat m(n, std::vector<EpsPoly>(n, EpsPoly(n)));
  for (int j = 0; j < n; ++j) {
    if (alphas[j].dim() != n) throw MathError("perturbation_matrix: dimension mismatch");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        m[i][j] = m[i][j] + EpsPoly::monomial(n, j, k, alphas[j](i, k));
  }
  return m;
}

namespace {

EpsPoly leibniz(const EpsMat& m, const std::vector<int>& rows, const std::vector<int>& cols, int n) {
  EpsPoly total(n);
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    EpsPoly term = EpsPoly::constant(n, inv % 2 ? -1 : 1);
    for (size_t i = 0; i < perm.size() && !term.is_zero(); ++i)
      term = term * m[rows[i]][cols[perm[i]]];
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

EpsPoly eps_det(const EpsMat& m) {
  int n = static_cast<int>(m.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return leibniz(m, idx, idx, n);
}

EpsMat eps_adjugate(const EpsMat& m) {
  int n = static_cast<int>(m.size());
  EpsMat adj(n, std::vector<EpsPoly>(n, EpsPoly(n)));
  if (n == 1) {
    adj[0][0] = EpsPoly::constant(1, 1);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      EpsPoly minor = leibniz(m, rows, cols, n);
      adj[i][j] = (i + j) % 2 ? -minor : minor;
    }
  return adj;
}

PerturbedCone::PerturbedCone(const std::vector<QMatrix>& alphas)
    : n_(static_cast<int>(alphas.size())), m_(perturbation_matrix(alphas)) {
  det_sign_ = eps_sign(eps_det(m_));
  if (det_sign_ == 0) throw MathError("sigma_eval: perturbation matrix is singular");
  adj_ = eps_adjugate(m_);
}

int PerturbedCone::operator()(const QVector& w) const {
  if (static_cast<int>(w.size()) != n_) throw MathError("sigma_eval: dimension mismatch");
  for (int i = 0; i < n_; ++i) {
    EpsPoly s(n_);
    for (int j = 0; j < n_; ++j)
      if (w[j] != 0) s = s + w[j] * adj_[i][j];
    if (eps_sign(s) != det_sign_) return 0;
  }
  return det_sign_;
}

int sigma_eval(const std::vector<QMatrix>& alphas, const QVector& w) {
  return PerturbedCone(alphas)(w);
}

namespace {

// λ with Σ λ_j gens_j = w, if any; nullopt when w is outside the span.
// Throws when the generators are dependent.
std::optional<QVector> solve_rows(const std::vector<QVector>& gens, const QVector& w) {
  int r = static_cast<int>(gens.size());
  int n = static_cast<int>(w.size());
  // Augmented n × (r+1) system with columns = generators.
  std::vector<QVector> a(n, QVector(r + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) {
      if (static_cast<int>(gens[j].size()) != n) throw MathError("cone: dimension mismatch");
      a[i][j] = gens[j][i];
    }
    a[i][r] = w[i];
  }
  int row = 0;
  std::vector<int> pivot_row(r, -1);
  for (int c = 0; c < r; ++c) {
    int p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw MathError("cone generators are linearly dependent");
    std::swap(a[p], a[row]);
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[row][c];
      for (int k = c; k <= r; ++k) a[i][k] -= f * a[row][k];
    }
    pivot_row[c] = row++;
  }
  for (int i = row; i < n; ++i)
    if (a[i][r] != 0) return std::nullopt;
  QVector lambda(r);
  for (int c = 0; c < r; ++c) lambda[c] = a[pivot_row[c]][r] / a[pivot_row[c]][c];
  return lambda;
}

}  // namespace

ConeCoords naive_cone_coords(const std::vector<QVector>& gens, const QVector& w) {
  if (gens.size() != w.size()) throw MathError("naive_cone_coords: need n generators");
  auto lambda = solve_rows(gens, w);
  ConeCoords out{*lambda, true};
  for (const auto& x : out.lambda) out.member = out.member && x > 0;
  return out;
}

SimplicialCone SimplicialCone::make(std::vector<QVector> gens) {
  for (auto& v : gens) {
    if (is_zero(v)) throw MathError("cone generator is zero");
    v = scaled(v, 1 / content(v));
  }
  if (!gens.empty()) solve_rows(gens, QVector(gens[0].size()));  // independence
  return SimplicialCone{std::move(gens)};
}

bool SimplicialCone::contains(const QVector& w) const {
  auto lambda = solve_rows(gens, w);
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x > 0; });
}

std::vector<QVector> real_limits(const std::vector<QMatrix>& alphas) {
  std::vector<QVector> c;
  for (const auto& a : alphas) c.push_back(a.col(0));
  return c;
}

ConeChain face_decompose(const std::vector<QMatrix>& alphas) {
  int n = static_cast<int>(alphas.size());
  auto c = real_limits(alphas);
  if (QMatrix::from_rows(c).det() == 0)
    throw MathError("face_decompose: real limit generators are dependent (unsupported input)");
  PerturbedCone sigma(alphas);
  ConeChain chain;
  for (int mask = 1; mask < (1 << n); ++mask) {
    QVector w(n, 0);
    std::vector<QVector> gens;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) {
        w = added(w, c[j]);
        gens.push_back(c[j]);
      }
    int s = sigma(w);
    if (s != 0) chain.push_back({s, SimplicialCone::make(gens)});
  }
  return chain;
}

int chain_eval(const ConeChain& c, const QVector& w) {
  int total = 0;
  for (const auto& t : c)
    if (t.cone.contains(w)) total += t.sign;
  return total;
}

}  // namespace shintani
