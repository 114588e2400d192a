#pragma once

#include <vector>

#include "sdres/diffpoly.hpp"
#include "sdres/essanalysis.hpp"
#include "sdres/lattice.hpp"

namespace sdres {

// delta^level P_poly read as an ordinary Laurent polynomial in the flattened
// variables y_j^{(k)}. terms[0] is the distinguished term.
struct AlgPolynomial {
  int poly = 0;
  int level = 0;
  std::vector<DiffTerm> terms;

  std::set<VarRef> variables() const;
  // Exponent vector of term t relative to terms[0], over `vars`.
  IntVector relative_exponents(std::size_t t, const std::vector<VarRef>& vars) const;
  std::string to_string() const;
};

// Ordering used for subset ranking: (poly, level) lexicographic.
inline bool alg_less(const AlgPolynomial& a, const AlgPolynomial& b) {
  return a.poly != b.poly ? a.poly < b.poly : a.level < b.level;
}

// Row r, column c: sum_k c_{rk} * (alpha_k - alpha_0)[c].
struct AlgSupportMatrix {
  std::vector<VarRef> cols;
  std::vector<std::vector<std::map<CoeffRef, long>>> rows;
};

AlgSupportMatrix alg_support_matrix(const std::vector<AlgPolynomial>& polys,
                                    const std::vector<VarRef>& cols);
AlgSupportMatrix alg_support_matrix(const std::vector<AlgPolynomial>& polys);
std::vector<VarRef> alg_variables(const std::vector<AlgPolynomial>& polys);

// Randomized rank (max over trials), with the same seeding rule as symbolic_rank.
int alg_rank(const AlgSupportMatrix& m, const RankOptions& opts = {});
int alg_rank(const std::vector<AlgPolynomial>& polys, const RankOptions& opts = {});

// rank == size-1 and every proper subset has full rank.
bool is_alg_essential(const std::vector<AlgPolynomial>& polys, const RankOptions& opts = {});

// { delta^l P_i : 0 <= l <= bound_i }. Throws InvalidArgument on -inf bounds.
std::vector<AlgPolynomial> prolong(const std::vector<DiffPolynomial>& system,
                                   const std::vector<Ord>& bounds);
inline std::vector<AlgPolynomial> prolong(const std::vector<DiffPolynomial>& system,
                                          const JacobiBounds& bounds) {
  return prolong(system, bounds.modified);
}

struct POffset {
  std::vector<AlgPolynomial> polys;
  int p = 0;
  int full_rank = 0;  // rank of the unreduced algebraic support matrix
};

// p = |alg| - rank - 1; drops the top p prolongation levels of every P_i.
// Throws CorankLost when the input or the reduced system has full rank.
POffset p_offset_reduce(const std::vector<AlgPolynomial>& alg, const RankOptions& opts = {});

// The essential subset of minimal ranking under (poly, level) order.
// Throws NoEssentialSubset.
std::vector<AlgPolynomial> find_minimal_essential(std::vector<AlgPolynomial> alg,
                                                  const RankOptions& opts = {});

struct VariableReduction {
  std::vector<AlgPolynomial> polys;  // only kept variables remain
  std::vector<VarRef> kept;
  std::vector<VarRef> dropped;
};

// Keeps k = |sub| - 1 variables, the lexicographically first choice for which
// the reduced system is essential in exactly k variables and no two terms of
// a polynomial collapse. Throws RankDrop.
VariableReduction variable_essential_reduce(const std::vector<AlgPolynomial>& sub,
                                            const RankOptions& opts = {},
                                            std::size_t max_candidates = 20000);

struct ZTerm {
  CoeffRef coeff;
  IntVector exps;
};

struct ZPolynomial {
  int poly = 0;
  int level = 0;
  std::vector<ZTerm> terms;  // terms[0] has the zero exponent vector
};

struct ZSystem {
  int dim = 0;
  std::vector<ZPolynomial> polys;
  std::string to_string() const;
};

// Row j of `basis` is the exponent vector, over `vars`, of the monomial that
// becomes z_{j+1}.
struct LatticeMap {
  std::vector<VarRef> vars;
  IntMatrix basis;

  IntVector to_original(const IntVector& z_exps) const;
  std::string to_string() const;
};

struct StrongEssential {
  ZSystem system;
  LatticeMap map;
};

// Rewrites the system in coordinates of a basis of the lattice spanned by all
// relative exponent vectors. Throws DegenerateLattice if that rank is < k.
StrongEssential strong_essential_transform(const std::vector<AlgPolynomial>& sub);

}  // namespace sdres
