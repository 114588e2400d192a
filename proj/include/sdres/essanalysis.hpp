#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdres/diffpoly.hpp"

namespace sdres {

struct RankOptions {
  std::uint64_t seed = 0;
  int trials = 3;
  // Confirms the randomized rank by exact elimination over Z[u, x].
  bool paranoid = false;
};

struct RankReport {
  int rank = 0;
  std::vector<int> pivot_columns;  // positions into the matrix columns
  std::uint64_t seed = 0;
  int trials = 0;
};

// Rank over Q(u)(x) of a symbolic support matrix. Every coefficient symbol is
// replaced by an independent integer from [-2^31, 2^31]; the resulting matrix
// over Z[x] is reduced fraction-free. The maximum over `trials` draws is kept.
RankReport symbolic_rank(const SupportMatrix& m, const RankOptions& opts = {});

// Exact rank with the coefficient symbols kept symbolic (slow path).
int exact_symbolic_rank(const SupportMatrix& m);

// rank(M_P) == n. Throws Error(DimensionMismatch) unless system.size() == n+1.
bool is_transformally_essential(const std::vector<DiffPolynomial>& system, int n,
                                const RankOptions& opts = {});

// Positions (into `system`) of the unique super-essential subsystem, found by
// greedy removal in increasing index order. Throws Error(NotEssential).
std::vector<int> find_super_essential(const std::vector<DiffPolynomial>& system, int n,
                                      const RankOptions& opts = {});

// Largest diagonal sum over all k x k submatrices, k = min(rows, cols).
// Solved as a maximum-weight assignment; -inf entries are forbidden edges.
Ord jacobi_number(const OrderMatrix& a);

struct JacobiBounds {
  std::vector<Ord> jacobi;               // Jac(A with row i removed)
  std::vector<int> column_gcd_degrees;   // deg f_c per kept column
  int gcd_degree_sum = 0;
  std::vector<Ord> modified;             // jacobi[i] - gcd_degree_sum

  bool operator==(const JacobiBounds&) const = default;
};

struct Specialization {
  std::vector<DiffPolynomial> polys;  // m+1 polynomials, original indices kept
  std::vector<int> kept_vars;         // m variables
  std::vector<int> dropped_vars;      // set to 1
};

// Bounds for a specialized super-essential system in the variables `vars`.
// Throws Error(JacobiUndefined) if a bound is -inf or negative.
JacobiBounds modified_jacobi_bounds(const std::vector<DiffPolynomial>& system,
                                    const std::vector<int>& vars);
inline JacobiBounds modified_jacobi_bounds(const Specialization& s) {
  return modified_jacobi_bounds(s.polys, s.kept_vars);
}

struct SpecializeOptions {
  RankOptions rank;
  // Forces the kept variables instead of searching.
  std::optional<std::vector<int>> kept_vars;
  // Column subsets beyond this count fall back to echelon pivots.
  std::size_t max_candidates = 5000;
};

// Chooses m kept variables such that the support submatrix has rank m and no
// two terms of a polynomial collapse, then sets every other variable to 1.
// Among valid choices the one with the smallest sum of modified Jacobi bounds
// wins, ties going to the lexicographically smallest variable set.
// Throws Error(RankDrop) when no valid choice exists.
Specialization select_and_specialize(const std::vector<DiffPolynomial>& system_t, int n,
                                     const SpecializeOptions& opts = {});

}  // namespace sdres
