#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdres/diffpoly.hpp"
#include "sdres/multipoly.hpp"
#include "sdres/parser.hpp"
#include "sdres/rng.hpp"

namespace sdres::testing {

std::string data_path(const std::string& name);
std::string read_file(const std::string& path);
SystemSource load_system(const std::string& name);

// Reads "+ δu00 δ^2u01 ..." lines, one term per line with unit coefficient.
MultiPoly load_resultant(const std::string& name);

// Random polynomial over symbols 0..nsyms-1.
MultiPoly random_poly(Rng& rng, int max_terms, int nsyms, int max_deg, long coeff_bound);

// Cofactor expansion along the first row.
MultiPoly laplace_determinant(const PolyMatrix& m);

// Maximum diagonal sum over every injective row-to-column map.
Ord brute_force_jacobi(const OrderMatrix& a);

// Assigns random nonzero values to every y and every non-distinguished
// coefficient, then solves each P_i^(l) = 0 for its distinguished coefficient.
// Returns SR evaluated at that point.
Rational evaluate_at_random_zero(const MultiPoly& sr, const SystemSource& src, Rng& rng);

// Random generic system with n variables, n+1 polynomials, orders <= max_order
// and at most max_terms terms per polynomial.
SystemSource random_system(Rng& rng, int n, int max_order, int max_terms);

}  // namespace sdres::testing
