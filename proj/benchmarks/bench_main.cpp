#include <benchmark/benchmark.h>

#include "shintani/harness.hpp"
#include "shintani/solomon_hu.hpp"

using namespace shintani;

namespace {

std::vector<QMatrix> rho_tuple(const QMatrix& g) {
  int n = g.dim();
  std::vector<QMatrix> out;
  QMatrix p = shift_permutation(n), cur = QMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    out.push_back(g * cur);
    cur = p * cur;
  }
  return out;
}

QMatrix sample_matrix(int n) {
  QMatrix g = QMatrix::identity(n);
  for (int i = 0; i + 1 < n; ++i) g(i, i + 1) = i + 2;
  g(n - 1, 0) = -1;
  return g;
}

TestFunction sample_function(int n) {
  QVector a(n);
  for (int i = 0; i < n; ++i) a[i] = Rational(1, i + 2);
  return TestFunction::indicator(a, 2);
}

void BM_CyclotomicProduct(benchmark::State& st) {
  long N = st.range(0);
  CycNum x, y;
  for (long k = 1; k < N; k += 2) {
    x += CycNum::root_of_unity(frac(k, N)) * Rational(k, 7);
    y += CycNum::root_of_unity(frac(3 * k, N)) * Rational(-k, 5);
  }
  for (auto _ : st) {
    CycAccum acc(N);
    acc.addmul(x, y);
    benchmark::DoNotOptimize(acc.finish());
  }
}
BENCHMARK(BM_CyclotomicProduct)->Arg(24)->Arg(120)->Arg(696);

void BM_Fourier(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  TestFunction f = act_test(sample_matrix(n), sample_function(n));
  for (auto _ : st) benchmark::DoNotOptimize(fourier(f));
}
BENCHMARK(BM_Fourier)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PerturbedCone(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  auto a = rho_tuple(sample_matrix(n));
  QVector w(n, 1);
  for (auto _ : st) benchmark::DoNotOptimize(sigma_eval(a, w));
}
BENCHMARK(BM_PerturbedCone)->DenseRange(2, 4);

void BM_NaiveShintani(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  auto g = rho_tuple(sample_matrix(n));
  TestFunction fh = fourier(sample_function(n));
  for (auto _ : st) benchmark::DoNotOptimize(phi_nsh(g, fh, 8));
}
BENCHMARK(BM_NaiveShintani)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_StevensDlog(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  auto g = rho_tuple(sample_matrix(n));
  KChain c = phi_st(g, sample_function(n));
  for (auto _ : st) benchmark::DoNotOptimize(dlog_chain(c, n, 8));
}
BENCHMARK(BM_StevensDlog)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CompareMain(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  Rng rng(1);
  auto c = random_comparison_instance(rng, n);
  for (auto _ : st) benchmark::DoNotOptimize(compare_main(c.gammas, c.f, 8));
}
BENCHMARK(BM_CompareMain)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
