#pragma once

#include <string>
#include <vector>

#include "sdres/bigint.hpp"

namespace sdres {

// Dense polynomial in Z[x]; coefficient i multiplies x^i. The leading
// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs);
  UniPoly(long c);  // NOLINT(google-explicit-constructor)

  static UniPoly monomial(BigInt c, int power);
  static UniPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt content() const;
  // Content removed, leading coefficient positive.
  UniPoly primitive() const;

  BigInt eval(const BigInt& at) const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const BigInt& c) const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return coeffs_ != o.coeffs_; }

  // x^k * this.
  UniPoly shifted(int k) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Returns q with q*b == a over Z[x]; throws Error(NotDivisible) otherwise.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);

// Primitive gcd in Z[x] with positive leading coefficient.
// gcd(0, 0) throws Error(InvalidArgument).
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

}  // namespace sdres
