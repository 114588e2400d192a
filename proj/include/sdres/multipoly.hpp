#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sdres/bigint.hpp"

namespace sdres {

using SymbolId = std::uint32_t;

// Power product over symbol ids, factors kept sorted by id with nonzero
// exponents.
class Monomial {
 public:
  using Factor = std::pair<SymbolId, std::uint32_t>;

  Monomial() = default;
  Monomial(std::initializer_list<Factor> factors);
  explicit Monomial(std::vector<Factor> factors);

  static Monomial symbol(SymbolId id, std::uint32_t exp = 1) {
    return exp == 0 ? Monomial() : Monomial({{id, exp}});
  }

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(SymbolId id) const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(*this) on the right operand.
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic order on symbol ids: higher total degree first, then the
// monomial with the larger exponent at the smallest differing symbol id.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct Term {
  Monomial mono;
  BigInt coeff;
};

// Sparse polynomial with integer coefficients. Terms are sorted in descending
// grlex order and never carry zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly symbol(SymbolId id);
  static MultiPoly monomial(Monomial m, BigInt c);
  // Builds from arbitrary (possibly repeated, possibly zero) terms.
  static MultiPoly from_terms(std::vector<Term> terms);
  // Terms must already be distinct, nonzero and in descending grlex order.
  static MultiPoly from_canonical(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  std::uint32_t total_degree() const;
  std::vector<SymbolId> symbols() const;

  BigInt content() const;
  // Divides out the integer content and makes the leading coefficient positive.
  MultiPoly normalized() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Renders using the supplied symbol names, e.g. "3*a^2*b - c".
  std::string to_string(const std::function<std::string(SymbolId)>& name) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);

// Returns q with q*b == a. Throws Error(NotDivisible) when b does not divide a
// and Error(ZeroDenominator) when b is zero.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Fraction-free (Bareiss) elimination with full pivoting. Pivots are chosen by
// a Markowitz-style sparsity score so very sparse matrices stay sparse.
MultiPoly determinant(PolyMatrix m);

using Assignment = std::map<SymbolId, BigInt>;
using RationalAssignment = std::map<SymbolId, Rational>;

// Throws Error(MissingSymbol) if p uses a symbol absent from the assignment.
BigInt evaluate(const MultiPoly& p, const Assignment& values);
Rational evaluate(const MultiPoly& p, const RationalAssignment& values);

// Replaces symbols by integers where the assignment has them, keeping the rest.
MultiPoly substitute(const MultiPoly& p, const Assignment& values);

// Maximum over terms of the total exponent of symbols accepted by `in_block`.
std::uint32_t block_degree(const MultiPoly& p, const std::function<bool(SymbolId)>& in_block);

}  // namespace sdres
