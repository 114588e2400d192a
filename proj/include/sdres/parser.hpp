#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdres/diffpoly.hpp"

namespace sdres {

struct SystemSource {
  int n = 0;  // number of variables: one less than the number of polynomials
  std::vector<DiffPolynomial> polys;

  bool operator==(const SystemSource& o) const { return n == o.n && polys == o.polys; }
};

// Grammar, one polynomial per line, '#' starts a comment:
//   line   := "P" INT "=" term ("+" term)*
//   term   := "u" ("*" factor)* | factor ("*" factor)*
//   factor := "y[" INT "," INT "]" ("^" SINT)?
// Every term must start with "u"; the coefficient of term j of P_i becomes
// u_{ij}. Errors: SyntaxError (with line:column), DuplicateVariable,
// NonGenericTerm, DimensionMismatch.
SystemSource parse_system(std::string_view text);

// Inverse of parse_system.
std::string print_system(const SystemSource& src);

}  // namespace sdres
