#pragma once

#include <cstdint>
#include <vector>

#include "shintani/qlinalg.hpp"

namespace shintani {

using IVector = std::vector<std::int64_t>;
using IMatrix = std::vector<std::vector<Integer>>;

// Upper-triangular basis (positive diagonal) of the full-rank lattice spanned by the rows of gens.
IMatrix hermite_basis(IMatrix gens, int n);

// Representatives of L / N·Z^n, where L is spanned by gens and contains N·Z^n.
// Coordinates are reduced into [0, N).
std::vector<IVector> quotient_reps(const IMatrix& gens, std::int64_t N, int n);

// Representatives of Z^n / L for L given by an upper-triangular basis.
std::vector<IVector> box_reps(const IMatrix& hnf);

}  // namespace shintani
