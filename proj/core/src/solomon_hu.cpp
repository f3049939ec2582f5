#include "shintani/solomon_hu.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace shintani {

std::vector<QVector> period_scaled(const std::vector<QVector>& gens, const TestFunction& f) {
  std::vector<QVector> out;
  for (const auto& g : gens) out.push_back(scaled(g, minimal_period_multiple(f, g)));
  return out;
}

namespace {

// r columns of the r × n matrix V giving the nonsingular minor of least |det|.
std::vector<int> best_minor(const std::vector<IVector>& V, int n) {
  int r = static_cast<int>(V.size());
  std::vector<int> best;
  Rational best_det = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    std::vector<int> cols;
    for (int i = 0; i < n; ++i)
      if (pick[i]) cols.push_back(i);
    QMatrix B(r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) B(i, j) = Rational(static_cast<long>(V[i][cols[j]]));
    Rational d = abs(B.det());
    if (d != 0 && (best.empty() || d < best_det)) {
      best = cols;
      best_det = d;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (best.empty()) throw MathError("parallelepiped generators are linearly dependent");
  return best;
}

std::vector<IVector> grid_units(const std::vector<QVector>& v, const TestFunction& f) {
  int r = static_cast<int>(v.size());
  int n = f.dim();
  const Rational& s = f.step();
  std::vector<IVector> V(r, IVector(n));
  for (int j = 0; j < r; ++j) {
    if (static_cast<int>(v[j].size()) != n) throw MathError("generator dimension mismatch");
    for (int i = 0; i < n; ++i) {
      Rational x = v[j][i] / s;
      if (!is_integer(x) || !x.get_num().fits_slong_p())
        throw MathError("generator is not on the support grid of the test function");
      V[j][i] = x.get_num().get_si();
    }
  }
  return V;
}

Rational minor_det(const std::vector<IVector>& V, const std::vector<int>& cols) {
  int r = static_cast<int>(V.size());
  QMatrix B(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) B(i, j) = Rational(static_cast<long>(V[i][cols[j]]));
  return abs(B.det());
}

}  // namespace

Integer domain_work(const std::vector<QVector>& gens, const TestFunction& f) {
  if (gens.empty() || f.is_zero()) return 0;
  auto V = grid_units(period_scaled(gens, f), f);
  return minor_det(V, best_minor(V, f.dim())).get_num();
}

namespace {

using i128 = __int128;

// Grid points x = μV, μ ∈ (0,1]^r, with f(s·x) ≠ 0; indices in pts, values by pointer.
struct GridPoints {
  int n = 0;
  std::vector<std::int64_t> xs;
  std::vector<const CycNum*> vals;
  size_t size() const { return vals.size(); }
};

GridPoints enumerate_grid(const std::vector<IVector>& V, const TestFunction& f) {
  GridPoints out;
  int n = f.dim();
  out.n = n;
  int r = static_cast<int>(V.size());
  if (r == 0 || f.is_zero()) return out;
  std::vector<int> cols = best_minor(V, n);
  QMatrix B(r);
  IMatrix Bi(r, std::vector<Integer>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      B(i, j) = Rational(static_cast<long>(V[i][cols[j]]));
      Bi[i][j] = static_cast<long>(V[i][cols[j]]);
    }
  // B^{-1} = adj / δ with δ > 0.
  Rational det = B.det();
  QMatrix Binv = B.inverse();
  Integer delta = Rational(abs(det)).get_num();
  if (!delta.fits_slong_p()) throw MathError("parallelepiped too large");
  const std::int64_t dl = delta.get_si();
  std::vector<std::vector<std::int64_t>> adj(r, std::vector<std::int64_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational a = Binv(i, j) * Rational(delta);
      if (!is_integer(a) || !a.get_num().fits_slong_p()) throw MathError("parallelepiped too large");
      adj[i][j] = a.get_num().get_si();
    }
  IMatrix H = hermite_basis(Bi, r);
  std::vector<std::int64_t> box(r);
  for (int i = 0; i < r; ++i) box[i] = H[i][i].get_si();

  // Flat index of a grid point mod N, for value lookup.
  const std::int64_t N = f.cells();
  std::unordered_map<std::int64_t, const CycNum*> table;
  table.reserve(f.values().size() * 2);
  for (const auto& [k, v] : f.values()) {
    std::int64_t key = 0;
    for (int i = n - 1; i >= 0; --i) key = key * N + k[i];
    table.emplace(key, &v);
  }

  std::vector<std::int64_t> k(r, 0), m(r);
  std::vector<std::int64_t> x(n);
  for (;;) {
    for (int j = 0; j < r; ++j) {
      i128 num = 0;
      for (int i = 0; i < r; ++i) num += static_cast<i128>(k[i]) * adj[i][j];
      std::int64_t t = static_cast<std::int64_t>(((num % dl) + dl) % dl);
      m[j] = t == 0 ? dl : t;
    }
    bool integral = true;
    for (int i = 0; i < n && integral; ++i) {
      i128 xi = 0;
      for (int j = 0; j < r; ++j) xi += static_cast<i128>(m[j]) * V[j][i];
      integral = xi % dl == 0;
      x[i] = static_cast<std::int64_t>(xi / dl);
    }
    if (integral) {
      std::int64_t key = 0;
      for (int i = n - 1; i >= 0; --i) key = key * N + ((x[i] % N) + N) % N;
      auto it = table.find(key);
      if (it != table.end()) {
        out.xs.insert(out.xs.end(), x.begin(), x.end());
        out.vals.push_back(it->second);
      }
    }
    int i = 0;
    while (i < r && ++k[i] == box[i]) k[i++] = 0;
    if (i == r) break;
  }
  return out;
}

// Σ_x v(x) e^{s·x·T} through degree P from integer moments.
MultiSeries grid_exp_sum(const GridPoints& g, const Rational& s, int P) {
  int n = g.n;
  MultiSeries out(n, P);
  if (g.size() == 0) return out;
  const MonomialBasis& b = out.basis();
  std::vector<int> parent(b.size(), -1), var(b.size(), -1);
  for (int i = 1; i < b.size(); ++i) {
    Exponent e = b.exponent(i);
    int j = 0;
    while (e[j] == 0) ++j;
    --e[j];
    parent[i] = b.index(e);
    var[i] = j;
  }
  std::unordered_map<CycNum, int, CycNumHash> cls;
  std::vector<CycNum> order;
  std::vector<int> pt_cls(g.size());
  for (size_t k = 0; k < g.size(); ++k) {
    auto [it, ins] = cls.try_emplace(*g.vals[k], static_cast<int>(order.size()));
    if (ins) order.push_back(*g.vals[k]);
    pt_cls[k] = it->second;
  }
  std::int64_t maxabs = 0;
  for (auto v : g.xs) maxabs = std::max(maxabs, v < 0 ? -v : v);
  int bits = 0;
  while (bits < 63 && (std::int64_t{1} << bits) <= maxabs) ++bits;

  std::vector<std::vector<Integer>> moments(order.size(), std::vector<Integer>(b.size(), 0));
  if (bits * P <= 100) {
    // 128-bit partial sums, flushed before they can overflow.
    const std::int64_t chunk = std::int64_t{1} << std::min(30, 125 - bits * P);
    std::vector<std::vector<i128>> part(order.size(), std::vector<i128>(b.size(), 0));
    std::vector<std::int64_t> used(order.size(), 0);
    auto flush = [&](size_t c) {
      for (int i = 0; i < b.size(); ++i) {
        i128 v = part[c][i];
        if (v == 0) continue;
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        Integer z = static_cast<unsigned long>(u >> 64);
        z <<= 64;
        z += static_cast<unsigned long>(u & ~std::uint64_t{0});
        if (neg) z = -z;
        moments[c][i] += z;
        part[c][i] = 0;
      }
      used[c] = 0;
    };
    std::vector<i128> pw(b.size());
    for (size_t k = 0; k < g.size(); ++k) {
      int c = pt_cls[k];
      const std::int64_t* x = &g.xs[k * n];
      auto& m = part[c];
      pw[0] = 1;
      m[0] += 1;
      for (int i = 1; i < b.size(); ++i) {
        pw[i] = pw[parent[i]] * x[var[i]];
        m[i] += pw[i];
      }
      if (++used[c] == chunk) flush(c);
    }
    for (size_t c = 0; c < order.size(); ++c) flush(c);
  } else {
    std::vector<Integer> pw(b.size());
    for (size_t k = 0; k < g.size(); ++k) {
      const std::int64_t* x = &g.xs[k * n];
      auto& m = moments[pt_cls[k]];
      pw[0] = 1;
      m[0] += 1;
      for (int i = 1; i < b.size(); ++i) {
        pw[i] = pw[parent[i]] * static_cast<long>(x[var[i]]);
        m[i] += pw[i];
      }
    }
  }
  // s^{|α|} / α!.
  std::vector<Rational> scale(b.size());
  for (int i = 0; i < b.size(); ++i) {
    Rational q = 1;
    for (int j = 0; j < b.degree(i); ++j) q *= s;
    Integer fact = 1;
    for (int e : b.exponent(i))
      for (int t = 2; t <= e; ++t) fact *= t;
    scale[i] = q / fact;
  }
  long L = 1;
  for (const auto& c : order) L = lcm_long(L, c.conductor());
  for (int i = 0; i < b.size(); ++i) {
    CycAccum acc(L);
    for (size_t c = 0; c < order.size(); ++c) {
      const Integer& m = moments[c][i];
      if (m != 0) acc.add(order[c], Rational(m) * scale[i]);
    }
    if (!acc.empty()) out[i] = acc.finish();
  }
  return out;
}

}  // namespace

std::vector<DomainPoint> enumerate_parallelepiped(const std::vector<QVector>& v, const TestFunction& f) {
  std::vector<DomainPoint> out;
  if (v.empty() || f.is_zero()) return out;
  GridPoints g = enumerate_grid(grid_units(v, f), f);
  int n = f.dim();
  for (size_t k = 0; k < g.size(); ++k) {
    QVector w(n);
    for (int i = 0; i < n; ++i) w[i] = f.step() * static_cast<long>(g.xs[k * n + i]);
    out.push_back({std::move(w), *g.vals[k]});
  }
  std::sort(out.begin(), out.end(), [](const DomainPoint& a, const DomainPoint& b) { return a.w < b.w; });
  return out;
}

std::vector<DomainPoint> enumerate_fundamental_domain(const std::vector<QVector>& gens,
                                                      const TestFunction& f) {
  return enumerate_parallelepiped(period_scaled(gens, f), f);
}

MultiSeries exp_sum(const std::vector<DomainPoint>& pts, int n, int P) {
  if (pts.empty()) return MultiSeries(n, P);
  Integer den = 1;
  for (const auto& p : pts)
    for (const auto& x : p.w) den = lcm(den, Integer(x.get_den()));
  GridPoints g;
  g.n = n;
  for (const auto& p : pts) {
    for (const auto& x : p.w) {
      Integer xi = Rational(x * den).get_num();
      if (!xi.fits_slong_p()) throw MathError("exp_sum: coordinates too large");
      g.xs.push_back(xi.get_si());
    }
    g.vals.push_back(&p.value);
  }
  return grid_exp_sum(g, Rational(1) / den, P);
}

FormalFraction sh_pair_with(const std::vector<QVector>& v, const TestFunction& f, int D) {
  int n = f.dim();
  int r = static_cast<int>(v.size());
  GridPoints pts;
  pts.n = n;
  if (r > 0 && !f.is_zero()) pts = enumerate_grid(grid_units(v, f), f);
  std::optional<FormalFraction> kernel;
  for (const auto& g : v) {
    FormalFraction k = reciprocal_one_minus(0, g, D + r - 1);
    kernel = kernel ? *kernel * k : k;
  }
  FormalFraction sum(grid_exp_sum(pts, f.step(), D + r), {});
  if (!kernel) return sum;
  return (*kernel * sum).truncated(D);
}

FormalFraction sh_pair(const SimplicialCone& cone, const TestFunction& f, int D) {
  return sh_pair_with(period_scaled(cone.gens, f), f, D);
}

std::vector<QVector> nsh_generators(const std::vector<QMatrix>& gammas) {
  std::vector<QVector> gens;
  for (const auto& g : gammas) gens.push_back(g.col(0));
  return gens;
}

FormalFraction phi_nsh(const std::vector<QMatrix>& gammas, const TestFunction& f, int D) {
  int n = f.dim();
  if (static_cast<int>(gammas.size()) != n) throw MathError("phi_nsh: need n matrices");
  auto gens = nsh_generators(gammas);
  if (QMatrix::from_rows(gens).det() == 0)
    throw MathError("phi_nsh: first columns are linearly dependent (degenerate cone)");
  return sh_pair(SimplicialCone::make(gens), f, D);
}

FormalFraction phi_sh(const std::vector<QMatrix>& alphas, const TestFunction& f, int D) {
  int n = f.dim();
  if (static_cast<int>(alphas.size()) != n) throw MathError("phi_sh: need n matrices");
  FormalFraction total = FormalFraction::zero(n, D);
  for (const auto& t : face_decompose(alphas)) {
    FormalFraction p = sh_pair(t.cone, f, D);
    total = total + (t.sign > 0 ? p : -p);
  }
  return total;
}

}  // namespace shintani
