#pragma once

#include <cstdint>
#include <vector>

namespace orbitzeta {

using IntRows = std::vector<std::vector<std::int64_t>>;

/// Row-style Hermite normal form of a generating set of a full-rank
/// sublattice of Z^d: returns d upper-triangular rows with positive
/// diagonal and 0 <= H[i][j] < H[j][j] above the diagonal.
/// Throws DomainError when the rows do not span a rank-d lattice.
IntRows hermite_form(IntRows generators, int dim);

/// Nonunit invariant factors d_1 | d_2 | ... of a nonsingular square
/// integer matrix (Smith normal form diagonal with the 1's dropped).
std::vector<std::int64_t> smith_invariants(IntRows matrix);

}  // namespace orbitzeta
