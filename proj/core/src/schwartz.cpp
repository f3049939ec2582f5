#include "shintani/schwartz.hpp"

#include <algorithm>
#include <numeric>

namespace shintani {

namespace {

std::int64_t as_index(const Rational& q, const char* what) {
  if (!is_integer(q)) throw MathError(std::string(what) + ": expected an integer ratio");
  if (!q.get_num().fits_slong_p()) throw MathError(std::string(what) + ": grid too large");
  return q.get_num().get_si();
}

std::int64_t pmod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::int64_t> prime_factors64(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

void add_value(TestFunction::ValueMap& m, IVector k, const CycNum& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m.try_emplace(std::move(k), v);
  if (!inserted) it->second += v;
}

// Enumerates the Cartesian product of per-axis value lists.
template <typename F>
void for_each_product(const std::vector<std::vector<std::int64_t>>& axes, F&& fn) {
  size_t n = axes.size();
  for (const auto& a : axes)
    if (a.empty()) return;
  std::vector<size_t> pos(n, 0);
  IVector cur(n);
  while (true) {
    for (size_t i = 0; i < n; ++i) cur[i] = axes[i][pos[i]];
    fn(cur);
    size_t i = 0;
    while (i < n && ++pos[i] == axes[i].size()) pos[i++] = 0;
    if (i == n) break;
  }
}

}  // namespace

std::int64_t TestFunction::cells() const { return as_index(period_ / step_, "cells"); }

TestFunction TestFunction::from_grid(int n, Rational step, Rational period, ValueMap values) {
  if (step <= 0 || period <= 0) throw MathError("grid step and period must be positive");
  TestFunction f(n);
  f.step_ = step;
  f.period_ = period;
  std::int64_t N = f.cells();
  for (auto& [k, v] : values) {
    if (static_cast<int>(k.size()) != n) throw MathError("grid point has wrong dimension");
    IVector r(n);
    for (int i = 0; i < n; ++i) r[i] = pmod(k[i], N);
    add_value(f.vals_, std::move(r), v);
  }
  f.canonicalize();
  return f;
}

TestFunction TestFunction::indicator(const QVector& a, const Rational& d) {
  CosetTerm t{CycNum(1), Coset{a, QVector(a.size(), d)}};
  return normalize(static_cast<int>(a.size()), {t});
}

bool TestFunction::has_integer_values() const {
  return std::all_of(vals_.begin(), vals_.end(), [](const auto& kv) {
    return kv.second.is_rational() && kv.second.denominator() == 1;
  });
}

CycNum TestFunction::at_index(IVector k) const {
  std::int64_t N = cells();
  for (auto& x : k) x = pmod(x, N);
  auto it = vals_.find(k);
  return it == vals_.end() ? CycNum() : it->second;
}

CycNum TestFunction::operator()(const QVector& x) const {
  if (static_cast<int>(x.size()) != n_) throw MathError("evaluation point has wrong dimension");
  if (is_zero()) return CycNum();
  IVector k(n_);
  for (int i = 0; i < n_; ++i) {
    Rational y = x[i] / step_;
    if (!is_integer(y)) return CycNum();
    k[i] = pmod(mpz_class(y.get_num() % cells()).get_si(), cells());
  }
  return at_index(std::move(k));
}

bool TestFunction::is_index_period(const IVector& w) const {
  std::int64_t N = cells();
  IVector q(n_);
  for (const auto& [k, v] : vals_) {
    for (int i = 0; i < n_; ++i) q[i] = pmod(k[i] + w[i], N);
    auto it = vals_.find(q);
    if (it == vals_.end() || it->second != v) return false;
  }
  return true;
}

void TestFunction::canonicalize() {
  for (auto it = vals_.begin(); it != vals_.end();)
    it = it->second.is_zero() ? vals_.erase(it) : std::next(it);
  if (vals_.empty()) {
    step_ = 1;
    period_ = 1;
    return;
  }
  std::int64_t N = cells();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int64_t p : prime_factors64(N)) {
      std::int64_t M = N / p;
      bool ok = true;
      for (int i = 0; i < n_ && ok; ++i) {
        IVector w(n_, 0);
        w[i] = M;
        ok = is_index_period(w);
      }
      if (!ok) continue;
      ValueMap next;
      for (auto& [k, v] : vals_)
        if (std::all_of(k.begin(), k.end(), [M](std::int64_t x) { return x < M; }))
          next.emplace(k, v);
      vals_ = std::move(next);
      period_ /= p;
      N = M;
      changed = true;
      break;
    }
  }
  std::int64_t c = N;
  for (const auto& kv : vals_)
    for (auto x : kv.first) c = std::gcd(c, x);
  if (c > 1) {
    ValueMap next;
    for (auto& [k, v] : vals_) {
      IVector r = k;
      for (auto& x : r) x /= c;
      next.emplace(std::move(r), v);
    }
    vals_ = std::move(next);
    step_ *= c;
  }
}

TestFunction::ValueMap TestFunction::values_on(const Rational& step, const Rational& period) const {
  std::int64_t refine = as_index(step_ / step, "values_on step");
  std::int64_t reps = as_index(period / period_, "values_on period");
  std::int64_t jump = as_index(period_ / step, "values_on");
  std::vector<std::vector<std::int64_t>> axes(n_);
  ValueMap out;
  std::vector<std::int64_t> shifts(reps);
  for (std::int64_t t = 0; t < reps; ++t) shifts[t] = t * jump;
  std::vector<std::vector<std::int64_t>> shift_axes(n_, shifts);
  for (const auto& [k, v] : vals_) {
    for_each_product(shift_axes, [&](const IVector& t) {
      IVector q(n_);
      for (int i = 0; i < n_; ++i) q[i] = k[i] * refine + t[i];
      out.emplace(std::move(q), v);
    });
  }
  return out;
}

TestFunction TestFunction::operator-() const {
  TestFunction r = *this;
  for (auto& kv : r.vals_) kv.second = -kv.second;
  return r;
}

TestFunction operator+(const TestFunction& a, const TestFunction& b) {
  if (a.n_ != b.n_) throw MathError("test function sum: dimension mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Rational s = rat_gcd(a.step_, b.step_);
  Rational g = rat_lcm(a.period_, b.period_);
  TestFunction::ValueMap m = a.values_on(s, g);
  for (auto& [k, v] : b.values_on(s, g)) add_value(m, k, v);
  return TestFunction::from_grid(a.n_, s, g, std::move(m));
}

TestFunction operator*(const CycNum& c, const TestFunction& f) {
  TestFunction::ValueMap m;
  for (const auto& [k, v] : f.vals_) add_value(m, k, c * v);
  return TestFunction::from_grid(f.n_, f.step_, f.period_, std::move(m));
}

TestFunction normalize(int n, const std::vector<CosetTerm>& terms) {
  Rational s = 0, g = 0;
  for (const auto& t : terms) {
    if (static_cast<int>(t.coset.base.size()) != n || static_cast<int>(t.coset.moduli.size()) != n)
      throw MathError("coset has wrong dimension");
    if (t.coeff.is_zero()) continue;
    for (int i = 0; i < n; ++i) {
      if (t.coset.moduli[i] <= 0) throw MathError("coset moduli must be positive");
      s = rat_gcd(s, t.coset.base[i]);
      s = rat_gcd(s, t.coset.moduli[i]);
      g = g == 0 ? t.coset.moduli[i] : rat_lcm(g, t.coset.moduli[i]);
    }
  }
  if (g == 0) return TestFunction(n);
  TestFunction::ValueMap m;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    std::vector<std::vector<std::int64_t>> axes(n);
    for (int i = 0; i < n; ++i) {
      const Rational& d = t.coset.moduli[i];
      Rational a = mod_q(t.coset.base[i], d);
      std::int64_t count = as_index(g / d, "normalize");
      for (std::int64_t j = 0; j < count; ++j)
        axes[i].push_back(as_index((a + d * j) / s, "normalize"));
    }
    for_each_product(axes, [&](const IVector& k) { add_value(m, k, t.coeff); });
  }
  return TestFunction::from_grid(n, s, g, std::move(m));
}

TestFunction act_test(const QMatrix& g, const TestFunction& f) {
  int n = f.dim();
  if (g.dim() != n) throw MathError("act_test: dimension mismatch");
  if (f.is_zero()) return f;
  QMatrix gi = g.inverse();
  Rational c = g.content();
  Rational ci = gi.content();
  Rational step = f.step() * ci;
  Rational period = f.period() / c;
  std::int64_t N2 = as_index(period / step, "act_test");
  // Basis of g·Z^n·γ^{-1} in units of the new step.
  IMatrix basis(n, std::vector<Integer>(n));
  Rational scale = f.period() / step;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = scale * gi(i, j);
      if (!is_integer(v)) throw MathError("act_test: internal lattice not integral");
      basis[i][j] = v.get_num();
    }
  std::vector<IVector> reps = quotient_reps(basis, N2, n);
  // Support point s·k maps to k·(γ^{-1}/ci) in new units.
  QMatrix unit = (1 / ci) * gi;
  TestFunction::ValueMap m;
  for (const auto& [k, v] : f.values()) {
    QVector kq(k.begin(), k.end());
    QVector x0 = vec_mat(kq, unit);
    IVector base(n);
    for (int i = 0; i < n; ++i) base[i] = as_index(x0[i], "act_test");
    for (const auto& r : reps) {
      IVector q(n);
      for (int i = 0; i < n; ++i) q[i] = pmod(base[i] + r[i], N2);
      m.emplace(std::move(q), v);
    }
  }
  return TestFunction::from_grid(n, step, period, std::move(m));
}

TestFunction tensor(const std::vector<TestFunction>& fs) {
  int n = static_cast<int>(fs.size());
  if (n == 0) throw MathError("tensor: no factors");
  for (const auto& f : fs)
    if (f.dim() != 1) throw MathError("tensor: factors must be one-dimensional");
  for (const auto& f : fs)
    if (f.is_zero()) return TestFunction(n);
  Rational s = 0, g = 0;
  for (const auto& f : fs) {
    s = rat_gcd(s, f.step());
    g = g == 0 ? f.period() : rat_lcm(g, f.period());
  }
  std::vector<std::vector<std::pair<std::int64_t, CycNum>>> axes(n);
  for (int i = 0; i < n; ++i)
    for (auto& [k, v] : fs[i].values_on(s, g)) axes[i].emplace_back(k[0], v);
  TestFunction::ValueMap m;
  std::vector<size_t> pos(n, 0);
  while (true) {
    IVector k(n);
    CycNum v(1);
    for (int i = 0; i < n; ++i) {
      k[i] = axes[i][pos[i]].first;
      v *= axes[i][pos[i]].second;
    }
    add_value(m, std::move(k), v);
    int i = 0;
    while (i < n && ++pos[i] == axes[i].size()) pos[i++] = 0;
    if (i == n) break;
  }
  return TestFunction::from_grid(n, s, g, std::move(m));
}

TestFunction fourier(const TestFunction& f) {
  int n = f.dim();
  if (f.is_zero()) return f;
  std::int64_t N = f.cells();
  long L = N;
  for (const auto& kv : f.values()) L = lcm_long(L, kv.second.conductor());
  long unit = L / N;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= N;
  Rational scale = 1;
  for (int i = 0; i < n; ++i) scale /= f.period();

  auto index_of = [&](std::int64_t flat) {
    IVector l(n);
    for (int i = n - 1; i >= 0; --i) {
      l[i] = flat % N;
      flat /= N;
    }
    return l;
  };

  TestFunction::ValueMap out;
  std::int64_t supp = static_cast<std::int64_t>(f.values().size());
  if (supp <= n * N) {
    for (std::int64_t flat = 0; flat < total; ++flat) {
      IVector l = index_of(flat);
      CycAccum acc(L);
      for (const auto& [k, v] : f.values()) {
        std::int64_t e = 0;
        for (int i = 0; i < n; ++i) e = (e + k[i] * l[i]) % N;
        acc.add_shifted(v, -static_cast<long>(e) * unit);
      }
      CycNum val = acc.finish() * scale;
      if (!val.is_zero()) out.emplace(std::move(l), std::move(val));
    }
  } else {
    // Separable transform, one axis at a time.
    std::vector<CycNum> data(total);
    for (const auto& [k, v] : f.values()) {
      std::int64_t flat = 0;
      for (int i = 0; i < n; ++i) flat = flat * N + k[i];
      data[flat] = v;
    }
    std::int64_t stride = 1;
    for (int axis = n - 1; axis >= 0; --axis) {
      std::vector<CycNum> next(total);
      for (std::int64_t flat = 0; flat < total; ++flat) {
        std::int64_t l = (flat / stride) % N;
        std::int64_t base = flat - l * stride;
        CycAccum acc(L);
        for (std::int64_t k = 0; k < N; ++k) {
          const CycNum& v = data[base + k * stride];
          if (!v.is_zero()) acc.add_shifted(v, -static_cast<long>((k * l) % N) * unit);
        }
        next[flat] = acc.finish();
      }
      data = std::move(next);
      stride *= N;
    }
    for (std::int64_t flat = 0; flat < total; ++flat)
      if (!data[flat].is_zero()) out.emplace(index_of(flat), data[flat] * scale);
  }
  return TestFunction::from_grid(n, 1 / f.period(), 1 / f.step(), std::move(out));
}

Rational period_lattice(const TestFunction& f) {
  if (f.is_zero()) throw MathError("period_lattice: zero function");
  return f.period();
}

Rational minimal_period_multiple(const TestFunction& f, const QVector& v) {
  if (is_zero(v)) throw MathError("minimal_period_multiple: zero direction");
  Rational cv = content(v);
  if (f.is_zero()) return 1 / cv;
  std::int64_t N = f.cells();
  IVector p(v.size());
  for (size_t i = 0; i < v.size(); ++i) p[i] = as_index(v[i] / cv, "minimal_period_multiple");
  auto shift = [&](std::int64_t j) {
    IVector w(p.size());
    for (size_t i = 0; i < p.size(); ++i) w[i] = pmod(p[i] * (j % N), N);
    return w;
  };
  std::int64_t j = N;
  for (std::int64_t q : prime_factors64(N))
    while (j % q == 0 && f.is_index_period(shift(j / q))) j /= q;
  return f.step() * j / cv;
}

std::vector<ScalarCoset> scalar_modulus_decomposition(const TestFunction& f) {
  std::vector<ScalarCoset> out;
  for (const auto& [k, v] : f.values()) {
    if (!v.is_rational() || v.denominator() != 1)
      throw MathError("scalar_modulus_decomposition: values must be rational integers");
    QVector a(k.size());
    for (size_t i = 0; i < k.size(); ++i) a[i] = f.step() * k[i];
    out.push_back({v.numerators()[0], std::move(a), f.period()});
  }
  return out;
}

}  // namespace shintani
