#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shintani/json_io.hpp"

namespace shintani {

struct CheckItem {
  std::string name;
  bool pass;
  json detail;
};

struct VerificationReport {
  std::string check;
  json inputs = json::object();
  std::vector<CheckItem> items;
  double seconds = 0;

  bool pass() const;
  void add(std::string name, bool ok, json detail = json::object());
  void merge(const VerificationReport& other);
  // Runtime is left out unless asked for, so reports are reproducible byte for byte.
  json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  // Integer entries in [lo, hi], nonsingular.
  QMatrix matrix(int n, long lo = -3, long hi = 3);
  // p/q with 1 ≤ q ≤ max_den and 0 ≤ p < q·scale.
  Rational fraction(long max_den, long scale = 1);
  // χ_{a + dZ^n}, d ∈ {1,2,3}, denominators of a at most 6.
  TestFunction indicator(int n);

 private:
  std::mt19937_64 g_;
};

struct ComparisonInstance {
  std::vector<QMatrix> gammas;
  TestFunction f;
};
// γ_j with entries in [-3, 3] and independent first columns; f from Rng::indicator.
ComparisonInstance random_comparison_instance(Rng& rng, int n);

VerificationReport compare_main(const std::vector<QMatrix>& gammas, const TestFunction& f, int D);

struct EquivarianceOptions {
  bool nsh = true;
  bool sh = true;
  bool fourier = true;
  bool stevens = true;
  bool cone = true;
  bool mutation = true;
};
VerificationReport suite_equivariance(std::uint64_t seed, int n, int trials, int D,
                                      const EquivarianceOptions& opt = {});

// (1/d^n) e(-<a,y>) χ_{(1/d)Z^n} built directly on its grid.
TestFunction coset_fourier_formula(const QVector& a, const Rational& d);

VerificationReport suite_cone(int n, std::uint64_t seed = 1);
// σ^Sh(1, ρ, ..., ρ^{n-1}) against the open orthant on {-2..2}^n.
VerificationReport cone_probe(int n);
// Leading monomials of adj M for the ρ-tuple against the closed-form table.
VerificationReport adjugate_table(int n);
// w ↦ Σ(-1)^i σ(α_0..α̂_i..α_2)(w) constant over generic probes, n = 2.
VerificationReport cocycle_constancy(std::uint64_t seed, int tuples, int probes);

VerificationReport suite_reciprocity(std::uint64_t seed, int n, int D, int trials = 2);
VerificationReport suite_coboundary(int n, int D, std::uint64_t seed = 1);
VerificationReport suite_refinement(std::uint64_t seed, int D, int trials = 4);
VerificationReport eta_closed_form(int D);
VerificationReport suite_comparison(std::uint64_t seed, int n, int trials, int D);

}  // namespace shintani
