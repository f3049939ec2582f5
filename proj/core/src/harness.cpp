#include "shintani/harness.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "shintani/solomon_hu.hpp"

namespace shintani {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

json matrices_json(const std::vector<QMatrix>& gs) {
  json out = json::array();
  for (const auto& g : gs) out.push_back(to_json(g));
  return out;
}

std::string trial_name(const std::string& what, int n, int t) {
  return what + " n=" + std::to_string(n) + " #" + std::to_string(t);
}

}  // namespace

bool VerificationReport::pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return !items.empty();
}

void VerificationReport::add(std::string name, bool ok, json detail) {
  items.push_back({std::move(name), ok, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& it : other.items) items.push_back({other.check + ": " + it.name, it.pass, it.detail});
  seconds += other.seconds;
}

json VerificationReport::to_json(bool timing) const {
  json its = json::array();
  for (const auto& it : items) its.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
  json out{{"check", check}, {"pass", pass()}, {"inputs", inputs}, {"items", its}};
  if (timing) out["seconds"] = seconds;
  return out;
}

std::string VerificationReport::to_text(bool timing) const {
  std::ostringstream os;
  os << "check: " << check << '\n';
  int failed = 0;
  for (const auto& it : items) {
    os << "  " << (it.pass ? "[PASS] " : "[FAIL] ") << it.name;
    if (!it.pass && !it.detail.empty()) os << "  " << it.detail.dump();
    os << '\n';
    failed += !it.pass;
  }
  os << (pass() ? "PASS" : "FAIL") << "  " << items.size() - failed << "/" << items.size() << " items";
  if (timing) os << "  " << seconds << " s";
  os << '\n';
  return os.str();
}

QMatrix Rng::matrix(int n, long lo, long hi) {
  for (;;) {
    QMatrix g(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = uniform(lo, hi);
    if (g.det() != 0) return g;
  }
}

Rational Rng::fraction(long max_den, long scale) {
  long q = uniform(1, max_den);
  Rational r(uniform(0, q * scale - 1), q);
  r.canonicalize();
  return r;
}

TestFunction Rng::indicator(int n) {
  Rational d = uniform(1, 3);
  QVector a(n);
  for (auto& x : a) x = fraction(6, d.get_num().get_si());
  return TestFunction::indicator(a, d);
}

ComparisonInstance random_comparison_instance(Rng& rng, int n) {
  ComparisonInstance c;
  for (;;) {
    c.gammas.clear();
    for (int j = 0; j < n; ++j) c.gammas.push_back(rng.matrix(n));
    if (QMatrix::from_columns(st_covectors(c.gammas)).det() != 0) break;
  }
  c.f = rng.indicator(n);
  return c;
}

VerificationReport compare_main(const std::vector<QMatrix>& gammas, const TestFunction& f, int D) {
  VerificationReport r;
  r.check = "compare-main";
  r.inputs = {{"gammas", matrices_json(gammas)}, {"f", to_json(f)}, {"degree", D}};
  auto t0 = Clock::now();
  const std::string name = "dlog Phi^St(f) = (-1)^n Phi^NSh(fourier f) w_T";
  try {
    int n = f.dim();
    TopForm lhs = dlog_chain(phi_st(gammas, f), n, D);
    TopForm rhs = CycNum(n % 2 ? -1 : 1) * phi_nsh(gammas, fourier(f), D);
    int sdet = sgn(QMatrix::from_columns(st_covectors(gammas)).det());
    json detail{{"sign_det_first_columns", sdet}};
    auto disc = first_discrepancy(lhs, rhs, D);
    if (disc) {
      detail["first_discrepancy"] = to_json(*disc);
      // Diagnostic only: the identity with the orientation sign of the first columns.
      detail["holds_with_sign_det"] = eq_fraction(lhs, CycNum(sdet) * rhs, D);
    }
    r.add(name, !disc, detail);
  } catch (const MathError& e) {
    r.add(name, false, {{"error", e.what()}});
  }
  r.seconds = since(t0);
  return r;
}

namespace {

// n matrices whose first columns are independent.
std::vector<QMatrix> nsh_tuple(Rng& rng, int n) {
  for (;;) {
    std::vector<QMatrix> gs;
    for (int j = 0; j < n; ++j) gs.push_back(rng.matrix(n));
    if (QMatrix::from_rows(nsh_generators(gs)).det() != 0) return gs;
  }
}

std::vector<QMatrix> times_each(const QMatrix& g, const std::vector<QMatrix>& as) {
  std::vector<QMatrix> out;
  for (const auto& a : as) out.push_back(g * a);
  return out;
}

// α_j with a nonsingular perturbation matrix both as given and after γ.
std::vector<QMatrix> sh_tuple(Rng& rng, int n, const QMatrix& g, bool independent_limits) {
  for (;;) {
    std::vector<QMatrix> as;
    for (int j = 0; j < n; ++j) as.push_back(rng.matrix(n));
    if (independent_limits && QMatrix::from_rows(real_limits(as)).det() == 0) continue;
    try {
      PerturbedCone a(as);
      PerturbedCone b(times_each(g, as));
      return as;
    } catch (const MathError&) {
    }
  }
}

QVector random_point(Rng& rng, int n, long r) {
  for (;;) {
    QVector w(n);
    for (auto& x : w) x = rng.uniform(-r, r);
    if (!is_zero(w)) return w;
  }
}

// Sums stay on grids of at most 36 cells per axis; larger ones only cost time.
// Keeps the fundamental-domain enumeration of random instances cheap.
const Integer kWorkBudget = 20000;

Integer nsh_work(const std::vector<QMatrix>& gs, const TestFunction& f) {
  return domain_work(nsh_generators(gs), f);
}

Integer sh_work(const std::vector<QMatrix>& as, const TestFunction& f) {
  Integer w = 0;
  for (const auto& t : face_decompose(as)) w += domain_work(t.cone.gens, f);
  return w;
}

TestFunction random_test_function(Rng& rng, int n) {
  for (;;) {
    TestFunction f = rng.indicator(n);
    if (!rng.uniform(0, 1)) return f;
    // Both terms are redrawn: a fine first coset can never get back under the cap.
    long c = rng.uniform(1, 2) * (rng.uniform(0, 1) ? 1 : -1);
    TestFunction s = f + CycNum(c) * rng.indicator(n);
    if (!s.is_zero() && s.cells() <= 36) return s;
  }
}

}  // namespace

VerificationReport suite_equivariance(std::uint64_t seed, int n, int trials, int D,
                                      const EquivarianceOptions& opt) {
  VerificationReport r;
  r.check = "suite-equivariance";
  r.inputs = {{"seed", seed}, {"n", n}, {"trials", trials}, {"degree", D}};
  auto t0 = Clock::now();
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    if (opt.nsh) {
      QMatrix g;
      TestFunction f;
      std::vector<QMatrix> gs;
      do {
        g = rng.matrix(n);
        f = rng.indicator(n);
        gs = nsh_tuple(rng, n);
      } while (nsh_work(times_each(g, gs), f) > kWorkBudget ||
               nsh_work(gs, act_test(g.transpose(), f)) > kWorkBudget);
      json d{{"gamma", to_json(g)}, {"f", to_json(f)}, {"gammas", matrices_json(gs)}};
      try {
        FormalFraction lhs = phi_nsh(times_each(g, gs), f, D);
        FormalFraction rhs = substitute(g, phi_nsh(gs, act_test(g.transpose(), f), D));
        r.add(trial_name("NSh", n, t), eq_fraction(lhs, rhs, D), d);
      } catch (const MathError& e) {
        d["error"] = e.what();
        r.add(trial_name("NSh", n, t), false, d);
      }
    }
    if (opt.sh) {
      QMatrix g;
      TestFunction f;
      std::vector<QMatrix> as;
      do {
        g = rng.matrix(n);
        f = rng.indicator(n);
        as = sh_tuple(rng, n, g, true);
      } while (sh_work(times_each(g, as), f) > kWorkBudget ||
               sh_work(as, act_test(g.transpose(), f)) > kWorkBudget);
      json d{{"gamma", to_json(g)}, {"f", to_json(f)}, {"alphas", matrices_json(as)}};
      try {
        FormalFraction lhs = phi_sh(times_each(g, as), f, D);
        FormalFraction rhs = CycNum(g.sign()) * substitute(g, phi_sh(as, act_test(g.transpose(), f), D));
        r.add(trial_name("Sh", n, t), eq_fraction(lhs, rhs, D), d);
      } catch (const MathError& e) {
        d["error"] = e.what();
        r.add(trial_name("Sh", n, t), false, d);
      }
    }
    if (opt.cone) {
      QMatrix g = rng.matrix(n);
      auto as = sh_tuple(rng, n, g, false);
      PerturbedCone a(as);
      PerturbedCone ga(times_each(g, as));
      QMatrix git = g.inverse().transpose();
      bool ok = true;
      json bad = json::array();
      for (int k = 0; k < 20; ++k) {
        QVector w = random_point(rng, n, 4);
        if (ga(w) != g.sign() * a(vec_mat(w, git))) {
          ok = false;
          bad.push_back(to_json(w));
        }
      }
      json d{{"gamma", to_json(g)}, {"alphas", matrices_json(as)}};
      if (!ok) d["failing_points"] = bad;
      r.add(trial_name("cone action", n, t), ok, d);
    }
    if (opt.stevens) {
      QMatrix g = rng.matrix(n);
      TestFunction f = rng.indicator(n);
      auto gs = nsh_tuple(rng, n);
      json d{{"gamma", to_json(g)}, {"f", to_json(f)}, {"gammas", matrices_json(gs)}};
      try {
        TopForm lhs = dlog_chain(phi_st(times_each(g, gs), f), n, D);
        TopForm rhs = substitute_top(g, dlog_chain(phi_st(gs, act_test(g.inverse(), f)), n, D));
        r.add(trial_name("St", n, t), eq_fraction(lhs, rhs, D), d);
      } catch (const MathError& e) {
        d["error"] = e.what();
        r.add(trial_name("St", n, t), false, d);
      }
    }
    if (opt.fourier) {
      QMatrix g;
      TestFunction h;
      do {
        g = rng.matrix(n);
        h = random_test_function(rng, n);
      } while (act_test(g, h).cells() > 144);
      Rational adet = abs(g.det());
      QMatrix git = g.inverse().transpose();
      TestFunction lhs = fourier(act_test(g, h));
      TestFunction bare = act_test(git, fourier(h));
      json d{{"gamma", to_json(g)}, {"f", to_json(h)}};
      r.add(trial_name("fourier action", n, t), lhs == CycNum(adet) * bare, d);
      if (opt.mutation && adet != 1)
        r.add(trial_name("fourier action without |det| is rejected", n, t), lhs != bare, d);
      QVector a(n);
      Rational m = rng.uniform(1, 3);
      if (rng.uniform(0, 1)) m = m / rng.uniform(1, 3);
      for (auto& x : a) x = rng.fraction(6) * m;
      TestFunction direct = fourier(TestFunction::indicator(a, m));
      r.add(trial_name("coset fourier formula", n, t), direct == coset_fourier_formula(a, m),
            {{"a", to_json(a)}, {"d", to_json(m)}});
    }
  }
  r.seconds = since(t0);
  return r;
}

TestFunction coset_fourier_formula(const QVector& a, const Rational& d) {
  int n = static_cast<int>(a.size());
  Rational s = 1 / d;
  // g must lie in (1/d)Z and make every a_i g integral.
  Rational g = s;
  for (const auto& x : a)
    if (x != 0) g = rat_lcm(g, 1 / abs(x));
  Rational Nq = g / s;
  if (!is_integer(Nq)) throw MathError("coset_fourier_formula: bad grid");
  long N = Nq.get_num().get_si();
  Rational scale = 1;
  for (int i = 0; i < n; ++i) scale /= d;
  TestFunction::ValueMap vals;
  IVector k(n, 0);
  for (;;) {
    Rational phase = 0;
    for (int i = 0; i < n; ++i) phase -= a[i] * static_cast<long>(k[i]) / d;
    vals[k] = CycNum::root_of_unity(phase) * scale;
    int i = 0;
    while (i < n && ++k[i] == N) k[i++] = 0;
    if (i == n) break;
  }
  return TestFunction::from_grid(n, s, g, std::move(vals));
}

VerificationReport cone_probe(int n) {
  VerificationReport r;
  r.check = "cone-probe";
  r.inputs = {{"n", n}};
  auto t0 = Clock::now();
  QMatrix rho = shift_permutation(n);
  std::vector<QMatrix> as;
  for (int j = 0; j < n; ++j) as.push_back(matrix_power(rho, j));
  PerturbedCone sigma(as);
  IVector k(n, -2);
  long probes = 0;
  json bad = json::array();
  for (;;) {
    QVector w(n);
    bool orthant = true;
    for (int i = 0; i < n; ++i) {
      w[i] = static_cast<long>(k[i]);
      orthant = orthant && k[i] > 0;
    }
    if (!is_zero(w)) {
      ++probes;
      if (sigma(w) != (orthant ? 1 : 0)) bad.push_back(to_json(w));
    }
    int i = 0;
    while (i < n && ++k[i] == 3) k[i++] = -2;
    if (i == n) break;
  }
  json d{{"probes", probes}};
  if (!bad.empty()) d["failing_points"] = bad;
  r.add("sigma(1, rho, ...) is the open orthant on {-2..2}^n, n=" + std::to_string(n), bad.empty(), d);
  ConeChain c = face_decompose(as);
  bool single = c.size() == 1 && c[0].sign == 1 && c[0].cone.dim() == n;
  if (single) {
    auto gens = c[0].cone.gens;
    std::sort(gens.begin(), gens.end());
    std::vector<QVector> unit;
    for (int i = 0; i < n; ++i) unit.push_back(QMatrix::identity(n).row(i));
    std::sort(unit.begin(), unit.end());
    single = gens == unit;
  }
  r.add("face decomposition is the orthant alone, n=" + std::to_string(n), single, {{"chain", to_json(c)}});
  r.seconds = since(t0);
  return r;
}

VerificationReport adjugate_table(int n) {
  VerificationReport r;
  r.check = "adjugate-table";
  r.inputs = {{"n", n}};
  QMatrix rho = shift_permutation(n);
  std::vector<QMatrix> as;
  for (int j = 0; j < n; ++j) as.push_back(matrix_power(rho, j));
  PerturbedCone sigma(as);
  const auto& adj = sigma.adjugate();
  bool ok = true;
  json bad = json::array();
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i) {
      EpsPoly::Monomial m(n, 0);
      Rational c = 1;
      if (k == 1) {
        if (i >= 2) {
          m[i - 1] = n - i + 1;
          c = -1;
        }
      } else if (i < k) {
        m[i - 1] = k - i;
        c = -1;
      } else if (i > k) {
        m[0] = k - 1;
        m[i - 1] += n - i + 1;
      }
      const EpsPoly& e = adj[k - 1][i - 1];
      bool hit = !e.is_zero() && e.leading() == m && e.leading_coeff() == c;
      if (!hit) {
        ok = false;
        bad.push_back({{"k", k}, {"i", i}, {"entry", to_json(e)}});
      }
    }
  json d = json::object();
  if (!ok) d["mismatches"] = bad;
  r.add("leading terms of adj M for the rho tuple, n=" + std::to_string(n), ok, d);
  return r;
}

VerificationReport cocycle_constancy(std::uint64_t seed, int tuples, int probes) {
  VerificationReport r;
  r.check = "cocycle-constancy";
  r.inputs = {{"seed", seed}, {"tuples", tuples}, {"probes", probes}};
  auto t0 = Clock::now();
  const int n = 2;
  Rng rng(seed);
  for (int t = 0; t < tuples; ++t) {
    std::vector<QMatrix> a;
    std::vector<PerturbedCone> faces;
    for (;;) {
      a = {rng.matrix(n), rng.matrix(n), rng.matrix(n)};
      try {
        faces = {PerturbedCone({a[1], a[2]}), PerturbedCone({a[0], a[2]}), PerturbedCone({a[0], a[1]})};
        break;
      } catch (const MathError&) {
      }
    }
    std::set<int> seen;
    int used = 0;
    while (used < probes) {
      QVector w = random_point(rng, n, 20);
      bool generic = true;
      for (const auto& g : a) generic = generic && w[0] * g(1, 0) - w[1] * g(0, 0) != 0;
      if (!generic) continue;
      ++used;
      seen.insert(faces[0](w) - faces[1](w) + faces[2](w));
    }
    json vals = json::array();
    for (int v : seen) vals.push_back(v);
    r.add("delta sigma constant, tuple #" + std::to_string(t), seen.size() == 1,
          {{"alphas", matrices_json(a)}, {"values", vals}, {"probes", used}});
  }
  r.seconds = since(t0);
  return r;
}

VerificationReport suite_cone(int n, std::uint64_t seed) {
  VerificationReport r;
  r.check = "suite-cone";
  r.inputs = {{"n", n}, {"seed", seed}};
  r.merge(cone_probe(n));
  if (n >= 2) r.merge(adjugate_table(n));
  if (n == 2) r.merge(cocycle_constancy(seed, 10, 50));
  EquivarianceOptions opt{false, false, false, false, true, false};
  r.merge(suite_equivariance(seed, n, 10, 0, opt));
  return r;
}

VerificationReport suite_reciprocity(std::uint64_t seed, int n, int D, int trials) {
  VerificationReport r;
  r.check = "suite-reciprocity";
  r.inputs = {{"seed", seed}, {"n", n}, {"degree", D}, {"trials", trials}};
  auto t0 = Clock::now();
  Rng rng(seed);
  for (long d = 1; d <= 2; ++d)
    for (int t = 0; t < trials; ++t) {
      QVector a(n);
      for (auto& x : a) x = rng.fraction(6, d);
      auto u = stevens_units(a, d);
      json in{{"a", to_json(a)}, {"d", d}};
      std::string tag = " d=" + std::to_string(d) + " #" + std::to_string(t);
      r.add("u0 = u1 + ... + un" + tag, units_sum_certificate(u, n, D), in);
      bool ok = false;
      json det = in;
      try {
        ok = dedekind_wedge_check(u, n, D);
      } catch (const MathError& e) {
        det["error"] = e.what();
      }
      r.add("alternating dlog sum vanishes" + tag, ok, det);
    }
  r.seconds = since(t0);
  return r;
}

VerificationReport suite_coboundary(int n, int D, std::uint64_t seed) {
  VerificationReport r;
  r.check = "suite-coboundary";
  r.inputs = {{"n", n}, {"degree", D}, {"seed", seed}};
  auto t0 = Clock::now();
  std::vector<std::pair<QVector, Rational>> params;
  auto q = [](const char* s) { return parse_rational(s); };
  if (n == 2) {
    params = {{{0, 0}, 1},
              {{q("1/3"), q("1/2")}, 1},
              {{q("1/2"), q("1/4")}, 2},
              {{q("2/3"), q("1/6")}, 3},
              {{q("1/5"), 0}, 1}};
  } else if (n == 3) {
    params = {{{0, 0, 0}, 1},
              {{0, 0, 0}, 2},
              {{q("1/2"), q("1/3"), q("1/4")}, 1},
              {{q("1/3"), 0, q("2/3")}, 2},
              {{q("1/6"), q("1/2"), q("5/6")}, 3}};
  }
  Rng rng(seed);
  Rational d = rng.uniform(1, 2);
  QVector a(n);
  for (auto& x : a) x = rng.fraction(4, d.get_num().get_si());
  params.emplace_back(a, d);
  for (const auto& [pa, pd] : params) {
    json det{{"a", to_json(pa)}, {"d", to_json(pd)}};
    bool ok = false;
    try {
      auto c = stevens_coboundary_check(pa, pd, D);
      det["chain_terms"] = c.chain.size();
      det["residual_terms"] = c.residual.size();
      det["constant_factors"] = c.constant_factors;
      if (c.discrepancy) det["first_discrepancy"] = to_json(*c.discrepancy);
      ok = c.pass;
    } catch (const MathError& e) {
      det["error"] = e.what();
    }
    r.add("coboundary certificate a=" + det["a"].dump() + " d=" + to_string(pd), ok, det);
  }
  r.seconds = since(t0);
  return r;
}

VerificationReport suite_refinement(std::uint64_t seed, int D, int trials) {
  VerificationReport r;
  r.check = "suite-refinement";
  r.inputs = {{"seed", seed}, {"degree", D}, {"trials", trials}};
  auto t0 = Clock::now();
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Rational d = rng.uniform(1, 3);
    if (rng.uniform(0, 1)) d = d / 2;
    Rational a = mod_q(rng.fraction(6, 3), d);
    QVector a2{a, mod_q(rng.fraction(6, 3), d)};
    for (long m = 2; m <= 4; ++m) {
      std::string tag = " a=" + to_string(a) + " d=" + to_string(d) + " m=" + std::to_string(m);
      json in{{"a", to_json(a)}, {"d", to_json(d)}, {"m", m}};
      std::vector<ScalarCoset> refined;
      std::vector<CosetTerm> refined_terms;
      for (long b = 0; b < m; ++b) {
        Rational ab = a + d * b;
        refined.push_back({1, {ab}, d * m});
        refined_terms.push_back({1, Coset{{ab}, {d * m}}});
      }
      OneForm direct = dlog_unit(eta_cosets({{1, {a}, d}}), 1, D);
      OneForm split = dlog_unit(eta_cosets(refined), 1, D);
      r.add("dlog eta refinement" + tag, eq_fraction(direct.dT[0], split.dT[0], D), in);
      r.add("normalize refinement" + tag,
            normalize(1, {{1, Coset{{a}, {d}}}}) == normalize(1, refined_terms), in);
      std::vector<CosetTerm> grid;
      for (long b0 = 0; b0 < m; ++b0)
        for (long b1 = 0; b1 < m; ++b1)
          grid.push_back({1, Coset{{a2[0] + d * b0, a2[1] + d * b1}, {d * m, d * m}}});
      r.add("normalize refinement n=2" + tag,
            normalize(2, {{1, Coset{a2, {d, d}}}}) == normalize(2, grid) &&
                normalize(2, grid) == TestFunction::indicator(a2, d),
            in);
    }
  }
  r.seconds = since(t0);
  return r;
}

VerificationReport eta_closed_form(int D) {
  VerificationReport r;
  r.check = "lemma-closed-form";
  r.inputs = {{"degree", D}};
  auto t0 = Clock::now();
  auto q = [](const char* s) { return parse_rational(s); };
  std::vector<std::pair<Rational, Rational>> cases = {
      {0, 1}, {q("1/3"), 1}, {q("1/2"), 2}, {q("2/3"), 3}};
  QMatrix one = QMatrix::identity(1);
  for (const auto& [a, d] : cases) {
    TestFunction f = TestFunction::indicator({a}, d);
    FormalFraction lhs = phi_nsh({one}, fourier(f), D);
    // (1/d) x/(1-x), x = e(-a/d) e^{T/d}.
    FormalFraction x(exp_affine(-a / d, {1 / d}, D + 2), {});
    FormalFraction rhs = CycNum(1 / d) * (x * reciprocal_one_minus(-a / d, {1 / d}, D + 2));
    auto disc = first_discrepancy(lhs, rhs, D);
    json det{{"a", to_json(a)}, {"d", to_json(d)}};
    if (disc) det["first_discrepancy"] = to_json(*disc);
    r.add("Phi^NSh(1)(fourier chi) closed form a=" + to_string(a) + " d=" + to_string(d), !disc, det);
  }
  r.seconds = since(t0);
  return r;
}

VerificationReport suite_comparison(std::uint64_t seed, int n, int trials, int D) {
  VerificationReport r;
  r.check = "suite-comparison";
  r.inputs = {{"seed", seed}, {"n", n}, {"trials", trials}, {"degree", D}};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto c = random_comparison_instance(rng, n);
    auto one = compare_main(c.gammas, c.f, D);
    for (auto& it : one.items) {
      it.detail["gammas"] = one.inputs["gammas"];
      it.detail["f"] = one.inputs["f"];
      r.add(trial_name("main comparison", n, t), it.pass, it.detail);
    }
    r.seconds += one.seconds;
  }
  return r;
}

}  // namespace shintani
