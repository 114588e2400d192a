#include "sdres/diffpoly.hpp"

#include <algorithm>
#include <sstream>

#include "sdres/error.hpp"

namespace sdres {

std::string to_string(const VarRef& v) {
  return "y[" + std::to_string(v.var) + "," + std::to_string(v.shift) + "]";
}

std::string to_string(const CoeffRef& c) {
  std::string prefix;
  if (c.shift == 1)
    prefix = "δ";
  else if (c.shift > 1)
    prefix = "δ^" + std::to_string(c.shift);
  if (c.poly < 10 && c.term < 10) return prefix + "u" + std::to_string(c.poly) + std::to_string(c.term);
  return prefix + "u[" + std::to_string(c.poly) + "," + std::to_string(c.term) + "]";
}

SymbolId coeff_symbol(const CoeffRef& c) {
  if (c.poly < 0 || c.term < 0 || c.shift < 0 || c.poly >= kMaxCoeffIndex ||
      c.term >= kMaxCoeffIndex || c.shift >= kMaxCoeffIndex)
    throw Error(ErrorKind::InvalidArgument, "coefficient index out of range: " + to_string(c));
  return (static_cast<SymbolId>(c.poly) << 20) | (static_cast<SymbolId>(c.term) << 10) |
         static_cast<SymbolId>(c.shift);
}

CoeffRef coeff_from_symbol(SymbolId id) {
  return {static_cast<int>(id >> 20), static_cast<int>((id >> 10) & 0x3ff),
          static_cast<int>(id & 0x3ff)};
}

std::string coeff_symbol_name(SymbolId id) { return to_string(coeff_from_symbol(id)); }

// ---------------------------------------------------------------------------
// LaurentMonomial

LaurentMonomial::LaurentMonomial(std::map<VarRef, int> exps) : exps_(std::move(exps)) {
  std::erase_if(exps_, [](const auto& kv) { return kv.second == 0; });
}

int LaurentMonomial::exponent(const VarRef& v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& o) const {
  std::map<VarRef, int> e = exps_;
  for (const auto& [v, k] : o.exps_) e[v] += k;
  return LaurentMonomial(std::move(e));
}

LaurentMonomial LaurentMonomial::operator/(const LaurentMonomial& o) const {
  std::map<VarRef, int> e = exps_;
  for (const auto& [v, k] : o.exps_) e[v] -= k;
  return LaurentMonomial(std::move(e));
}

LaurentMonomial LaurentMonomial::shifted(int l) const {
  std::map<VarRef, int> e;
  for (const auto& [v, k] : exps_) e[{v.var, v.shift + l}] = k;
  return LaurentMonomial(std::move(e));
}

LaurentMonomial LaurentMonomial::without_vars(const std::set<int>& vars) const {
  std::map<VarRef, int> e;
  for (const auto& [v, k] : exps_)
    if (!vars.contains(v.var)) e[v] = k;
  return LaurentMonomial(std::move(e));
}

std::string LaurentMonomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [v, k] : exps_) {
    if (!s.empty()) s += "*";
    s += sdres::to_string(v);
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

// ---------------------------------------------------------------------------
// DiffPolynomial

DiffPolynomial::DiffPolynomial(int index, std::vector<DiffTerm> terms)
    : index_(index), terms_(std::move(terms)) {}

std::set<int> DiffPolynomial::variables() const {
  std::set<int> vars;
  for (const auto& t : terms_)
    for (const auto& [v, k] : t.mono.exponents()) vars.insert(v.var);
  return vars;
}

bool DiffPolynomial::has_repeated_monomials() const {
  std::set<LaurentMonomial> seen;
  for (const auto& t : terms_)
    if (!seen.insert(t.mono).second) return true;
  return false;
}

std::string DiffPolynomial::to_string() const {
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += sdres::to_string(t.coeff);
    if (!t.mono.is_one()) s += "*" + t.mono.to_string();
  }
  return s.empty() ? "0" : s;
}

bool DiffPolynomial::operator==(const DiffPolynomial& o) const {
  if (index_ != o.index_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

NormForm norm_form(const DiffPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "norm form of the zero polynomial");
  // Minimum exponent of each VarRef over all terms (absent counts as 0).
  std::map<VarRef, int> minimum;
  for (const auto& t : f.terms())
    for (const auto& [v, k] : t.mono.exponents()) minimum.try_emplace(v, k);
  for (auto& [v, m] : minimum)
    for (const auto& t : f.terms()) m = std::min(m, t.mono.exponent(v));
  std::map<VarRef, int> mult;
  for (const auto& [v, m] : minimum)
    if (m != 0) mult[v] = -m;
  LaurentMonomial multiplier(std::move(mult));
  std::vector<DiffTerm> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back({t.coeff, t.mono * multiplier});
  return {DiffPolynomial(f.index(), std::move(terms)), std::move(multiplier)};
}

DiffPolynomial shift(const DiffPolynomial& f, int l) {
  if (l < 0) throw Error(ErrorKind::InvalidArgument, "negative transforms are not supported");
  std::vector<DiffTerm> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms())
    terms.push_back({{t.coeff.poly, t.coeff.term, t.coeff.shift + l}, t.mono.shifted(l)});
  return DiffPolynomial(f.index(), std::move(terms));
}

DiffPolynomial set_vars_to_one(const DiffPolynomial& f, const std::set<int>& vars) {
  std::vector<DiffTerm> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back({t.coeff, t.mono.without_vars(vars)});
  return DiffPolynomial(f.index(), std::move(terms));
}

Ord order_of(const DiffPolynomial& f, int var) {
  const DiffPolynomial n = norm_form(f).poly;
  Ord best = Ord::neg_inf();
  for (const auto& t : n.terms())
    for (const auto& [v, k] : t.mono.exponents())
      if (v.var == var && best < Ord(v.shift)) best = v.shift;
  return best;
}

Ord order_of(const DiffPolynomial& f) {
  Ord best = Ord::neg_inf();
  for (int var : f.variables()) {
    Ord o = order_of(f, var);
    if (best < o) best = o;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Symbolic support vectors

void SymbolicEntry::add(const CoeffRef& c, const UniPoly& g) {
  if (g.is_zero()) return;
  UniPoly sum = parts_[c] + g;
  if (sum.is_zero())
    parts_.erase(c);
  else
    parts_[c] = std::move(sum);
}

UniPoly SymbolicEntry::specialize(const std::map<CoeffRef, BigInt>& values) const {
  UniPoly r;
  for (const auto& [c, g] : parts_) {
    auto it = values.find(c);
    if (it == values.end())
      throw Error(ErrorKind::MissingSymbol, "no value for coefficient " + sdres::to_string(c));
    r += g * it->second;
  }
  return r;
}

MultiPoly SymbolicEntry::to_multipoly(SymbolId x_symbol) const {
  std::vector<Term> terms;
  for (const auto& [c, g] : parts_) {
    const SymbolId u = coeff_symbol(c);
    for (int i = 0; i <= g.degree(); ++i) {
      if (g.coeffs()[i] == 0) continue;
      terms.push_back({Monomial({{u, 1}, {x_symbol, static_cast<std::uint32_t>(i)}}), g.coeffs()[i]});
    }
  }
  return MultiPoly::from_terms(std::move(terms));
}

std::string SymbolicEntry::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (const auto& [c, g] : parts_) {
    if (!s.empty()) s += " + ";
    const std::string gs = g.to_string();
    const auto nonzero = std::count_if(g.coeffs().begin(), g.coeffs().end(),
                                       [](const BigInt& v) { return v != 0; });
    if (gs == "1")
      s += sdres::to_string(c);
    else
      s += (nonzero == 1 ? gs : "(" + gs + ")") + "*" + sdres::to_string(c);
  }
  return s;
}

std::vector<SymbolicEntry> symbolic_support_vector(const DiffPolynomial& f,
                                                   const std::vector<int>& vars) {
  std::vector<SymbolicEntry> out(vars.size());
  if (f.is_zero()) return out;
  const LaurentMonomial& base = f.terms().front().mono;
  for (std::size_t k = 1; k < f.terms().size(); ++k) {
    const DiffTerm& t = f.terms()[k];
    const LaurentMonomial ratio = t.mono / base;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      std::vector<BigInt> coeffs;
      for (const auto& [v, e] : ratio.exponents()) {
        if (v.var != vars[j]) continue;
        if (coeffs.size() <= static_cast<std::size_t>(v.shift)) coeffs.resize(v.shift + 1, 0);
        coeffs[v.shift] += e;
      }
      out[j].add(t.coeff, UniPoly(std::move(coeffs)));
    }
  }
  return out;
}

std::vector<int> all_vars(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

std::vector<SymbolicEntry> symbolic_support_vector(const DiffPolynomial& f, int n) {
  return symbolic_support_vector(f, all_vars(n));
}

SupportMatrix symbolic_support_matrix(const std::vector<DiffPolynomial>& system,
                                      const std::vector<int>& vars) {
  SupportMatrix m;
  m.col_vars = vars;
  for (const auto& p : system) {
    m.row_polys.push_back(p.index());
    m.rows.push_back(symbolic_support_vector(p, vars));
  }
  return m;
}

SupportMatrix symbolic_support_matrix(const std::vector<DiffPolynomial>& system, int n) {
  return symbolic_support_matrix(system, all_vars(n));
}

SupportMatrix SupportMatrix::select_rows(const std::vector<std::size_t>& which) const {
  SupportMatrix m;
  m.col_vars = col_vars;
  for (std::size_t r : which) {
    m.row_polys.push_back(row_polys.at(r));
    m.rows.push_back(rows.at(r));
  }
  return m;
}

SupportMatrix SupportMatrix::select_cols(const std::vector<std::size_t>& which) const {
  SupportMatrix m;
  m.row_polys = row_polys;
  for (std::size_t c : which) m.col_vars.push_back(col_vars.at(c));
  for (const auto& row : rows) {
    std::vector<SymbolicEntry> r;
    for (std::size_t c : which) r.push_back(row.at(c));
    m.rows.push_back(std::move(r));
  }
  return m;
}

std::set<CoeffRef> SupportMatrix::coefficients() const {
  std::set<CoeffRef> out;
  for (const auto& row : rows)
    for (const auto& e : row)
      for (const auto& [c, g] : e.parts()) out.insert(c);
  return out;
}

std::string SupportMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "(";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " | " : " ") << row[j].to_string();
    os << " )\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Order matrix

OrderMatrix order_matrix(const std::vector<DiffPolynomial>& system, const std::vector<int>& vars) {
  OrderMatrix a;
  for (const auto& p : system) {
    std::vector<Ord> row;
    row.reserve(vars.size());
    for (int v : vars) row.push_back(order_of(p, v));
    a.entries.push_back(std::move(row));
  }
  return a;
}

OrderMatrix order_matrix(const std::vector<DiffPolynomial>& system, int n) {
  return order_matrix(system, all_vars(n));
}

OrderMatrix OrderMatrix::without_row(std::size_t r) const {
  OrderMatrix a;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (i != r) a.entries.push_back(entries[i]);
  return a;
}

std::string OrderMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& row : entries) {
    os << "(";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].to_string();
    os << ")\n";
  }
  return os.str();
}

}  // namespace sdres
