#include "shintani/lattice.hpp"

#include <utility>

namespace shintani {

IMatrix hermite_basis(IMatrix gens, int n) {
  IMatrix basis;
  for (int c = 0; c < n; ++c) {
    // Euclid on column c among the remaining rows.
    while (true) {
      int best = -1;
      for (int r = 0; r < static_cast<int>(gens.size()); ++r)
        if (gens[r][c] != 0 && (best < 0 || abs(gens[r][c]) < abs(gens[best][c]))) best = r;
      if (best < 0) throw MathError("hermite_basis: lattice is not of full rank");
      bool done = true;
      for (int r = 0; r < static_cast<int>(gens.size()); ++r) {
        if (r == best || gens[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), gens[r][c].get_mpz_t(), gens[best][c].get_mpz_t());
        for (int j = c; j < n; ++j) gens[r][j] -= q * gens[best][j];
        if (gens[r][c] != 0) done = false;
      }
      if (done) {
        auto row = std::move(gens[best]);
        gens.erase(gens.begin() + best);
        if (row[c] < 0)
          for (auto& x : row) x = -x;
        basis.push_back(std::move(row));
        break;
      }
    }
  }
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < c; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis[r][c].get_mpz_t(), basis[c][c].get_mpz_t());
      if (q != 0)
        for (int j = c; j < n; ++j) basis[r][j] -= q * basis[c][j];
    }
  return basis;
}

std::vector<IVector> quotient_reps(const IMatrix& gens, std::int64_t N, int n) {
  IMatrix all = gens;
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> e(n, 0);
    e[i] = Integer(static_cast<long>(N));
    all.push_back(std::move(e));
  }
  IMatrix h = hermite_basis(std::move(all), n);
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  std::vector<std::int64_t> counts(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Integer v = h[i][j] % Integer(static_cast<long>(N));
      if (v < 0) v += static_cast<long>(N);
      rows[i][j] = v.get_si();
    }
    counts[i] = N / h[i][i].get_si();
  }
  std::vector<IVector> out{IVector(n, 0)};
  for (int i = 0; i < n; ++i) {
    std::vector<IVector> next;
    next.reserve(out.size() * counts[i]);
    for (const auto& p : out)
      for (std::int64_t t = 0; t < counts[i]; ++t) {
        IVector q = p;
        for (int j = 0; j < n; ++j) q[j] = (q[j] + t * rows[i][j]) % N;
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<IVector> box_reps(const IMatrix& hnf) {
  int n = static_cast<int>(hnf.size());
  std::vector<IVector> out{IVector(n, 0)};
  for (int i = 0; i < n; ++i) {
    std::int64_t h = hnf[i][i].get_si();
    std::vector<IVector> next;
    next.reserve(out.size() * h);
    for (const auto& p : out)
      for (std::int64_t t = 0; t < h; ++t) {
        IVector q = p;
        q[i] = t;
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace shintani
