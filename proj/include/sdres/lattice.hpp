#pragma once

#include <optional>
#include <vector>

#include "sdres/bigint.hpp"

namespace sdres {

using IntVector = std::vector<long>;
using IntMatrix = std::vector<IntVector>;

// Row Hermite normal form basis of the lattice spanned by the rows of `gens`.
// Pivots are positive and entries above each pivot are reduced into
// [0, pivot). Zero rows are dropped, so the result has rank-many rows.
IntMatrix hermite_basis(const IntMatrix& gens);

// Integer rank of the row space.
int lattice_rank(const IntMatrix& gens);

// Coordinates c with sum_j c[j] * basis[j] == v, if v lies in the integer span
// of the (linearly independent) basis rows.
std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& v);

// Rational solution of the same system; nullopt if v is outside the real span.
std::optional<std::vector<Rational>> span_coordinates(const IntMatrix& basis, const IntVector& v);

}  // namespace sdres
