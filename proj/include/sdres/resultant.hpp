#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sdres/algred.hpp"
#include "sdres/multipoly.hpp"

namespace sdres {

struct SupportSet {
  int index = 0;  // position in the z-system
  std::vector<IntVector> points;  // points[0] is the origin
};

// Throws InvalidArgument if a polynomial has fewer than two terms or its
// first term is not at the origin.
std::vector<SupportSet> extract_supports(const ZSystem& z);

struct Lifting {
  std::vector<std::vector<Rational>> heights;  // per support, per point
  std::vector<Rational> delta;
};

struct CellPoint {
  IntVector point;
  std::vector<std::vector<int>> cell;  // F_i as indices into supports[i].points
  int row_poly = 0;    // i of the row content
  int row_vertex = 0;  // a, as an index into supports[i].points
  bool mixed = false;  // exactly one singleton summand
};

struct MixedDecomposition {
  int dim = 0;
  Lifting lifting;
  std::vector<CellPoint> points;  // lexicographic order
  std::vector<int> mixed_counts;  // per support: points in cells mixed for it
};

// Lattice points p with p - delta in the Minkowski sum of the supports' hulls,
// in lexicographic order.
std::vector<IntVector> perturbed_lattice_points(const std::vector<SupportSet>& supports,
                                                const std::vector<Rational>& delta);

struct SubdivisionOptions {
  int delta_candidates = 6;
};

// Lattice points of the perturbed Minkowski sum with their lower-envelope
// cells. Throws DegenerateLifting if some cell is not fine or not unique.
MixedDecomposition mixed_subdivision(const std::vector<SupportSet>& supports, std::uint64_t seed,
                                     const SubdivisionOptions& opts = {});

struct RowTag {
  int poly = 0;  // position in the z-system
  IntVector point;
  IntVector shift;  // p - a
};

struct NewtonMatrixPair {
  PolyMatrix m1;
  PolyMatrix m2;
  std::vector<RowTag> tags;
  std::vector<std::size_t> m2_rows;  // positions into m1
};

NewtonMatrixPair build_matrices(const MixedDecomposition& decomp, const ZSystem& z);

struct ResultantPoly {
  MultiPoly poly;
  // Degree in the coefficients of each prolonged polynomial (poly, level).
  std::map<std::pair<int, int>, int> block_degrees;
  // ord(SR, u_i): largest shift of a u_i coefficient that occurs.
  std::map<int, Ord> order_profile;
  bool homogeneous = true;
};

// Fills block_degrees, order_profile and homogeneity for `poly`, normalizing
// it to primitive form with a positive leading coefficient.
ResultantPoly make_resultant(MultiPoly poly, const ZSystem& z);

// det(M1) / det(M2). Throws ZeroDenominator or NotDivisible.
MultiPoly determinant_quotient(const NewtonMatrixPair& pair);
ResultantPoly quotient_resultant(const NewtonMatrixPair& pair, const ZSystem& z);

// Classical resultant of two univariate polynomials (k = 1).
PolyMatrix sylvester_matrix(const ZSystem& z);

struct ResultantOptions {
  std::uint64_t seed = 0;
  int max_retries = 8;
  bool sylvester_fast_path = true;
  SubdivisionOptions subdivision;
};

struct ResultantComputation {
  ResultantPoly resultant;
  std::size_t m1_dim = 0;
  std::size_t m2_dim = 0;
  int attempts = 0;
  bool sylvester = false;
  // Degree of the quotient in each polynomial's coefficients matched the
  // mixed volume of the other supports.
  bool degree_certified = false;
  NewtonMatrixPair matrices;
};

// Throws RetriesExhausted when every lifting failed.
ResultantComputation sparse_resultant(const ZSystem& z, const ResultantOptions& opts = {});

}  // namespace sdres
