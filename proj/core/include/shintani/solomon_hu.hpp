#pragma once

#include <vector>

#include "shintani/epscone.hpp"
#include "shintani/schwartz.hpp"
#include "shintani/series.hpp"

namespace shintani {

struct DomainPoint {
  QVector w;
  CycNum value;
};

// Each generator scaled by the smallest t > 0 making it a period of f.
std::vector<QVector> period_scaled(const std::vector<QVector>& gens, const TestFunction& f);

// Nonzero values of f on (0,1]v_1 + ... + (0,1]v_r, the v_j taken as given
// (they must be periods of f). Points in lexicographic order.
std::vector<DomainPoint> enumerate_parallelepiped(const std::vector<QVector>& v, const TestFunction& f);

// Same, after scaling the cone generators into the period lattice of f.
std::vector<DomainPoint> enumerate_fundamental_domain(const std::vector<QVector>& gens,
                                                      const TestFunction& f);

// Candidate points the enumeration of the period-scaled parallelepiped visits.
Integer domain_work(const std::vector<QVector>& gens, const TestFunction& f);

// Σ_w f(w) e^{w·T}, exact through degree P.
MultiSeries exp_sum(const std::vector<DomainPoint>& pts, int n, int P);

FormalFraction sh_pair(const SimplicialCone& cone, const TestFunction& f, int D);
// Pairing with explicitly chosen period generators (no rescaling).
FormalFraction sh_pair_with(const std::vector<QVector>& v, const TestFunction& f, int D);

// Rows e_1·γ_jᵀ, i.e. the first columns of the γ_j.
std::vector<QVector> nsh_generators(const std::vector<QMatrix>& gammas);

FormalFraction phi_nsh(const std::vector<QMatrix>& gammas, const TestFunction& f, int D);
FormalFraction phi_sh(const std::vector<QMatrix>& alphas, const TestFunction& f, int D);

}  // namespace shintani
