#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdres/multipoly.hpp"
#include "sdres/unipoly.hpp"

namespace sdres {

// y_var^{(shift)}; var counts from 1.
struct VarRef {
  int var = 1;
  int shift = 0;
  auto operator<=>(const VarRef&) const = default;
};

// delta^shift u_{poly,term}.
struct CoeffRef {
  int poly = 0;
  int term = 0;
  int shift = 0;
  auto operator<=>(const CoeffRef&) const = default;
};

std::string to_string(const VarRef& v);     // "y[1,2]"
std::string to_string(const CoeffRef& c);   // "δ^2u01", "u[10,3]" for wide indices

// Coefficient symbols live in the MultiPoly symbol space under a packed id so
// that grlex order on ids is (poly, term, shift) order.
inline constexpr int kMaxCoeffIndex = 1024;
SymbolId coeff_symbol(const CoeffRef& c);
CoeffRef coeff_from_symbol(SymbolId id);
std::string coeff_symbol_name(SymbolId id);

// Order value: an integer or -infinity. -inf absorbs under addition.
class Ord {
 public:
  constexpr Ord() = default;  // -inf
  constexpr Ord(int v) : finite_(true), value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Ord neg_inf() { return Ord(); }

  constexpr bool finite() const { return finite_; }
  // Precondition: finite().
  constexpr int value() const { return value_; }

  constexpr Ord operator+(Ord o) const {
    return (finite_ && o.finite_) ? Ord(value_ + o.value_) : neg_inf();
  }
  constexpr bool operator==(const Ord& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  constexpr bool operator<(const Ord& o) const {
    if (!o.finite_) return false;
    if (!finite_) return true;
    return value_ < o.value_;
  }
  constexpr bool operator<=(const Ord& o) const { return !(o < *this); }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_ = false;
  int value_ = 0;
};

// Product of y_i^{(k)} with signed exponents. No zero exponents are stored.
class LaurentMonomial {
 public:
  LaurentMonomial() = default;
  explicit LaurentMonomial(std::map<VarRef, int> exps);

  const std::map<VarRef, int>& exponents() const { return exps_; }
  int exponent(const VarRef& v) const;
  bool is_one() const { return exps_.empty(); }

  LaurentMonomial operator*(const LaurentMonomial& o) const;
  LaurentMonomial operator/(const LaurentMonomial& o) const;
  LaurentMonomial shifted(int l) const;
  // Drops every factor whose variable is in `vars` (sets those y_j to 1).
  LaurentMonomial without_vars(const std::set<int>& vars) const;

  bool operator==(const LaurentMonomial& o) const { return exps_ == o.exps_; }
  auto operator<=>(const LaurentMonomial& o) const = default;

  std::string to_string() const;

 private:
  std::map<VarRef, int> exps_;
};

struct DiffTerm {
  CoeffRef coeff;
  LaurentMonomial mono;
};

// Generic Laurent difference polynomial sum_k u_{ik} M_{ik}. The first term is
// the distinguished u_{i0} M_{i0} term that symbolic support vectors are taken
// relative to.
class DiffPolynomial {
 public:
  DiffPolynomial() = default;
  DiffPolynomial(int index, std::vector<DiffTerm> terms);

  int index() const { return index_; }
  const std::vector<DiffTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Set of variable indices appearing in any term.
  std::set<int> variables() const;

  // True if two terms share a monomial (the polynomial is no longer generic).
  bool has_repeated_monomials() const;

  std::string to_string() const;

  bool operator==(const DiffPolynomial& o) const;

 private:
  int index_ = 0;
  std::vector<DiffTerm> terms_;
};

struct NormForm {
  DiffPolynomial poly;
  LaurentMonomial multiplier;  // multiplier * f == poly
};

// Throws Error(ZeroPolynomial) on an empty polynomial.
NormForm norm_form(const DiffPolynomial& f);

// delta^l f: every variable and coefficient shift grows by l.
DiffPolynomial shift(const DiffPolynomial& f, int l);

// Sets y_j and all of its transforms to 1 for j in `vars`.
DiffPolynomial set_vars_to_one(const DiffPolynomial& f, const std::set<int>& vars);

// ord(N(f), y_var); -inf when y_var does not occur.
Ord order_of(const DiffPolynomial& f, int var);
// max over all variables.
Ord order_of(const DiffPolynomial& f);

// Entry sum_k u_{ik} g_k(x) of a symbolic support matrix.
class SymbolicEntry {
 public:
  SymbolicEntry() = default;
  void add(const CoeffRef& c, const UniPoly& g);

  bool is_zero() const { return parts_.empty(); }
  const std::map<CoeffRef, UniPoly>& parts() const { return parts_; }

  // Substitutes integers for the coefficient symbols.
  UniPoly specialize(const std::map<CoeffRef, BigInt>& values) const;
  // Exact form in Z[u..][x], with x as the symbol `x_symbol`.
  MultiPoly to_multipoly(SymbolId x_symbol) const;

  bool operator==(const SymbolicEntry& o) const { return parts_ == o.parts_; }

  std::string to_string() const;

 private:
  std::map<CoeffRef, UniPoly> parts_;
};

// Rows are symbolic support vectors of the system's polynomials; columns are
// labelled by variable index.
struct SupportMatrix {
  std::vector<int> row_polys;
  std::vector<int> col_vars;
  std::vector<std::vector<SymbolicEntry>> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return col_vars.size(); }

  SupportMatrix select_rows(const std::vector<std::size_t>& which) const;
  SupportMatrix select_cols(const std::vector<std::size_t>& which) const;
  std::set<CoeffRef> coefficients() const;
  std::string to_string() const;
};

// Component j is the u-weighted symbolic support vector of M_{ik}/M_{i0} in
// variable vars[j].
std::vector<SymbolicEntry> symbolic_support_vector(const DiffPolynomial& f,
                                                   const std::vector<int>& vars);
// Variables 1..n.
std::vector<SymbolicEntry> symbolic_support_vector(const DiffPolynomial& f, int n);

SupportMatrix symbolic_support_matrix(const std::vector<DiffPolynomial>& system,
                                      const std::vector<int>& vars);
SupportMatrix symbolic_support_matrix(const std::vector<DiffPolynomial>& system, int n);

struct OrderMatrix {
  std::vector<std::vector<Ord>> entries;

  std::size_t num_rows() const { return entries.size(); }
  std::size_t num_cols() const { return entries.empty() ? 0 : entries.front().size(); }
  OrderMatrix without_row(std::size_t r) const;
  bool operator==(const OrderMatrix& o) const { return entries == o.entries; }
  std::string to_string() const;
};

OrderMatrix order_matrix(const std::vector<DiffPolynomial>& system, const std::vector<int>& vars);
OrderMatrix order_matrix(const std::vector<DiffPolynomial>& system, int n);

std::vector<int> all_vars(int n);

}  // namespace sdres
