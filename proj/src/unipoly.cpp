#include "sdres/unipoly.hpp"

#include <sstream>

#include "sdres/error.hpp"

namespace sdres {

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

UniPoly UniPoly::monomial(BigInt c, int power) {
  if (c == 0) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1, 0);
  v.back() = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UniPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : BigInt(0);
}

BigInt UniPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return UniPoly(std::move(v));
}

BigInt UniPoly::eval(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const BigInt& c) const {
  std::vector<BigInt> v = coeffs_;
  for (auto& e : v) e *= c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::NotDivisible, "univariate division leaves a remainder");
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const BigInt& lead = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    BigInt& top = rem[i];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(ErrorKind::NotDivisible, "univariate division leaves a remainder");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    const int shift = i - b.degree();
    for (int j = 0; j <= b.degree(); ++j) rem[shift + j] -= c * b.coeffs()[j];
    q[shift] = std::move(c);
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(ErrorKind::NotDivisible, "univariate division leaves a remainder");
  return UniPoly(std::move(q));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly pseudo_remainder(UniPoly a, const UniPoly& b) {
  const BigInt& lead = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    UniPoly t = UniPoly::monomial(a.leading(), a.degree() - b.degree());
    a = a * lead - t * b;
  }
  return a;
}

}  // namespace

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd(0, 0) is undefined");
  UniPoly p = a.primitive();
  UniPoly q = b.primitive();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    UniPoly r = pseudo_remainder(p, q).primitive();
    p = std::move(q);
    q = std::move(r);
  }
  return p.primitive();
}

}  // namespace sdres
