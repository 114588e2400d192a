#include "sdres/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sdres/error.hpp"

namespace sdres {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(std::vector<Factor>(factors)) {}

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  for (const auto& [id, e] : factors_) {
    if (!merged.empty() && merged.back().first == id)
      merged.back().second += e;
    else
      merged.emplace_back(id, e);
  }
  std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
  factors_ = std::move(merged);
  for (const auto& f : factors_) degree_ += f.second;
}

std::uint32_t Monomial::exponent(SymbolId id) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{id, 0});
  return (it != factors_.end() && it->first == id) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [id, e] : factors_) {
    while (it != other.factors_.end() && it->first < id) ++it;
    if (it == other.factors_.end() || it->first != id || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial r;
  auto b = other.factors_.begin();
  for (const auto& [id, e] : factors_) {
    std::uint32_t sub = 0;
    if (b != other.factors_.end() && b->first == id) sub = (b++)->second;
    if (e != sub) r.factors_.emplace_back(id, e - sub);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i] == fb[i]) continue;
    // The monomial holding the smaller symbol id (or more of it) is larger.
    if (fa[i].first != fb[i].first) return fa[i].first > fb[i].first;
    return fa[i].second < fb[i].second;
  }
  return fa.size() < fb.size();
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(long c) : MultiPoly(BigInt(c)) {}

MultiPoly::MultiPoly(const BigInt& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::symbol(SymbolId id) { return monomial(Monomial::symbol(id), 1); }

MultiPoly MultiPoly::monomial(Monomial m, BigInt c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, BigInt, GrlexGreater> acc;
  for (auto& t : terms) acc[t.mono] += t.coeff;
  MultiPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_canonical(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::vector<SymbolId> MultiPoly::symbols() const {
  std::vector<SymbolId> ids;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) ids.push_back(f.first);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

BigInt MultiPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly MultiPoly::normalized() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (terms_.front().coeff < 0) g = -g;
  MultiPoly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two descending term lists with a sign on the second operand.
MultiPoly merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].mono, a[i].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].mono, b[j].mono)) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : BigInt(-b[j].coeff)});
      ++j;
    } else {
      BigInt c = sign > 0 ? BigInt(a[i].coeff + b[j].coeff) : BigInt(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return MultiPoly::from_canonical(std::move(out));
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const { return merge(terms_, o.terms_, +1); }

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return merge(terms_, o.terms_, -1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<Monomial, BigInt, GrlexGreater> acc;
  BigInt prod;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      mpz_mul(prod.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
      acc[a.mono * b.mono] += prod;
    }
  }
  MultiPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string MultiPoly::to_string(const std::function<std::string(SymbolId)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    BigInt a = abs(c);
    bool wrote = false;
    if (a != 1 || t.mono.is_one()) {
      os << a.get_str();
      wrote = true;
    }
    for (const auto& [id, e] : t.mono.factors()) {
      if (wrote) os << "*";
      os << name(id);
      if (e != 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

std::string MultiPoly::to_string() const {
  return to_string([](SymbolId id) { return "s" + std::to_string(id); });
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
  if (a.is_zero()) return {};
  const Term& lead = b.leading();
  if (b.size() == 1) {
    std::vector<Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lead.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
        throw Error(ErrorKind::NotDivisible, "polynomial division leaves a remainder");
      BigInt c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
      q.push_back({t.mono / lead.mono, std::move(c)});
    }
    // Dividing every monomial by a fixed monomial preserves the order.
    return MultiPoly::from_canonical(std::move(q));
  }

  std::map<Monomial, BigInt, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  BigInt prod;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first) ||
        !mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t()))
      throw Error(ErrorKind::NotDivisible, "polynomial division leaves a remainder");
    Monomial qm = it->first / lead.mono;
    BigInt qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    for (const auto& t : b.terms()) {
      mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
      auto [pos, inserted] = rem.try_emplace(qm * t.mono, 0);
      pos->second -= prod;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return MultiPoly::from_canonical(std::move(quotient));
}

MultiPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;

  // Row/column permutations are applied virtually.
  std::vector<std::size_t> rows(n);
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  int sign = 1;
  MultiPoly prev = 1;

  for (std::size_t k = 0; k < n; ++k) {
    // Markowitz pivot: minimize (row nnz - 1) * (col nnz - 1), then term count.
    std::vector<std::size_t> row_nnz(n, 0);
    std::vector<std::size_t> col_nnz(n, 0);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (!m[rows[i]][cols[j]].is_zero()) {
          ++row_nnz[i];
          ++col_nnz[j];
        }
    std::size_t best_i = n;
    std::size_t best_j = n;
    std::size_t best_score = 0;
    std::size_t best_size = 0;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        const MultiPoly& e = m[rows[i]][cols[j]];
        if (e.is_zero()) continue;
        std::size_t score = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (best_i == n || score < best_score || (score == best_score && e.size() < best_size)) {
          best_i = i;
          best_j = j;
          best_score = score;
          best_size = e.size();
        }
      }
    }
    if (best_i == n) return 0;
    if (best_i != k) {
      std::swap(rows[k], rows[best_i]);
      sign = -sign;
    }
    if (best_j != k) {
      std::swap(cols[k], cols[best_j]);
      sign = -sign;
    }
    if (k + 1 == n) break;

    const MultiPoly pivot = m[rows[k]][cols[k]];
    for (std::size_t i = k + 1; i < n; ++i) {
      auto& row = m[rows[i]];
      const MultiPoly lead = row[cols[k]];
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly& e = row[cols[j]];
        const MultiPoly& top = m[rows[k]][cols[j]];
        if (lead.is_zero() || top.is_zero()) {
          if (e.is_zero()) continue;
          e = exact_divide(pivot * e, prev);
        } else {
          e = exact_divide(pivot * e - lead * top, prev);
        }
      }
      row[cols[k]] = MultiPoly();
    }
    prev = pivot;
  }
  MultiPoly d = m[rows[n - 1]][cols[n - 1]];
  return sign > 0 ? d : -d;
}

namespace {

template <typename Value, typename Map>
Value evaluate_impl(const MultiPoly& p, const Map& values) {
  Value total = 0;
  for (const auto& t : p.terms()) {
    Value term = t.coeff;
    for (const auto& [id, e] : t.mono.factors()) {
      auto it = values.find(id);
      if (it == values.end())
        throw Error(ErrorKind::MissingSymbol, "no value for symbol " + std::to_string(id));
      for (std::uint32_t k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace

BigInt evaluate(const MultiPoly& p, const Assignment& values) {
  return evaluate_impl<BigInt>(p, values);
}

Rational evaluate(const MultiPoly& p, const RationalAssignment& values) {
  Rational r = evaluate_impl<Rational>(p, values);
  r.canonicalize();
  return r;
}

MultiPoly substitute(const MultiPoly& p, const Assignment& values) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    BigInt c = t.coeff;
    std::vector<Monomial::Factor> kept;
    for (const auto& [id, e] : t.mono.factors()) {
      auto it = values.find(id);
      if (it == values.end()) {
        kept.emplace_back(id, e);
      } else {
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), it->second.get_mpz_t(), e);
        c *= pw;
      }
    }
    out.push_back({Monomial(std::move(kept)), std::move(c)});
  }
  return MultiPoly::from_terms(std::move(out));
}

std::uint32_t block_degree(const MultiPoly& p, const std::function<bool(SymbolId)>& in_block) {
  std::uint32_t best = 0;
  for (const auto& t : p.terms()) {
    std::uint32_t d = 0;
    for (const auto& [id, e] : t.mono.factors())
      if (in_block(id)) d += e;
    best = std::max(best, d);
  }
  return best;
}

}  // namespace sdres
