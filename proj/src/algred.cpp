#include "sdres/algred.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sdres/echelon.hpp"
#include "sdres/error.hpp"
#include "sdres/rng.hpp"

namespace sdres {

std::set<VarRef> AlgPolynomial::variables() const {
  std::set<VarRef> out;
  for (const auto& t : terms)
    for (const auto& [v, e] : t.mono.exponents()) out.insert(v);
  return out;
}

IntVector AlgPolynomial::relative_exponents(std::size_t t, const std::vector<VarRef>& vars) const {
  IntVector out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back(terms.at(t).mono.exponent(v) - terms.front().mono.exponent(v));
  return out;
}

std::string AlgPolynomial::to_string() const {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += sdres::to_string(t.coeff);
    if (!t.mono.is_one()) s += "*" + t.mono.to_string();
  }
  return s;
}

std::vector<VarRef> alg_variables(const std::vector<AlgPolynomial>& polys) {
  std::set<VarRef> all;
  for (const auto& p : polys) {
    auto v = p.variables();
    all.insert(v.begin(), v.end());
  }
  return {all.begin(), all.end()};
}

AlgSupportMatrix alg_support_matrix(const std::vector<AlgPolynomial>& polys,
                                    const std::vector<VarRef>& cols) {
  AlgSupportMatrix m;
  m.cols = cols;
  for (const auto& p : polys) {
    std::vector<std::map<CoeffRef, long>> row(cols.size());
    for (std::size_t t = 1; t < p.terms.size(); ++t) {
      const IntVector a = p.relative_exponents(t, cols);
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (a[c] != 0) row[c][p.terms[t].coeff] += a[c];
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

AlgSupportMatrix alg_support_matrix(const std::vector<AlgPolynomial>& polys) {
  return alg_support_matrix(polys, alg_variables(polys));
}

int alg_rank(const AlgSupportMatrix& m, const RankOptions& opts) {
  std::set<CoeffRef> coeffs;
  for (const auto& row : m.rows)
    for (const auto& e : row)
      for (const auto& [c, v] : e) coeffs.insert(c);
  int best = 0;
  for (int t = 0; t < std::max(1, opts.trials); ++t) {
    Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(t)));
    std::map<CoeffRef, BigInt> values;
    for (const auto& c : coeffs) values.emplace(c, rng.wide());
    std::vector<std::vector<BigInt>> mat;
    for (const auto& row : m.rows) {
      std::vector<BigInt> r;
      for (const auto& e : row) {
        BigInt s = 0;
        for (const auto& [c, v] : e) s += values.at(c) * v;
        r.push_back(s);
      }
      mat.push_back(std::move(r));
    }
    best = std::max(best, row_echelon(std::move(mat)).rank);
  }
  return best;
}

int alg_rank(const std::vector<AlgPolynomial>& polys, const RankOptions& opts) {
  return alg_rank(alg_support_matrix(polys), opts);
}

bool is_alg_essential(const std::vector<AlgPolynomial>& polys, const RankOptions& opts) {
  const int size = static_cast<int>(polys.size());
  if (size == 0 || alg_rank(polys, opts) != size - 1) return false;
  for (int k = 0; k < size; ++k) {
    std::vector<AlgPolynomial> rest = polys;
    rest.erase(rest.begin() + k);
    if (alg_rank(rest, opts) != size - 1) return false;
  }
  return true;
}

std::vector<AlgPolynomial> prolong(const std::vector<DiffPolynomial>& system,
                                   const std::vector<Ord>& bounds) {
  if (bounds.size() != system.size())
    throw Error(ErrorKind::DimensionMismatch, "one bound per polynomial expected");
  std::vector<AlgPolynomial> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (!bounds[i].finite() || bounds[i].value() < 0)
      throw Error(ErrorKind::InvalidArgument, "prolongation bound must be a nonnegative integer");
    for (int l = 0; l <= bounds[i].value(); ++l) {
      const DiffPolynomial s = shift(system[i], l);
      out.push_back({system[i].index(), l, s.terms()});
    }
  }
  return out;
}

POffset p_offset_reduce(const std::vector<AlgPolynomial>& alg, const RankOptions& opts) {
  POffset out;
  out.full_rank = alg_rank(alg, opts);
  out.p = static_cast<int>(alg.size()) - out.full_rank - 1;
  if (out.p < 0) throw Error(ErrorKind::CorankLost, "prolonged system has full rank");
  std::map<int, int> top;
  for (const auto& a : alg) top[a.poly] = std::max(top[a.poly], a.level);
  for (const auto& a : alg)
    if (a.level <= top[a.poly] - out.p) out.polys.push_back(a);
  const int r = alg_rank(out.polys, opts);
  if (r >= static_cast<int>(out.polys.size()))
    throw Error(ErrorKind::CorankLost, "p-offset reduction with p = " + std::to_string(out.p) +
                                           " leaves a full-rank system");
  return out;
}

namespace {

// Descending-sequence comparison of two position sets: true if a ranks lower.
bool ranks_lower(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

std::vector<AlgPolynomial> pick(const std::vector<AlgPolynomial>& all, const std::vector<std::size_t>& pos) {
  std::vector<AlgPolynomial> out;
  for (std::size_t p : pos) out.push_back(all[p]);
  return out;
}

std::optional<std::vector<std::size_t>> exhaustive_minimal(const std::vector<AlgPolynomial>& alg,
                                                           const RankOptions& opts) {
  std::optional<std::vector<std::size_t>> best;
  const std::size_t n = alg.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) pos.push_back(i);
    if (pos.size() < 2) continue;
    if (best && !ranks_lower(pos, *best)) continue;
    if (is_alg_essential(pick(alg, pos), opts)) best = pos;
  }
  return best;
}

}  // namespace

std::vector<AlgPolynomial> find_minimal_essential(std::vector<AlgPolynomial> alg,
                                                  const RankOptions& opts) {
  std::stable_sort(alg.begin(), alg.end(), alg_less);
  const std::size_t n = alg.size();
  const AlgSupportMatrix full = alg_support_matrix(alg);
  auto rank_of = [&](const std::vector<std::size_t>& pos) {
    AlgSupportMatrix m;
    m.cols = full.cols;
    for (std::size_t p : pos) m.rows.push_back(full.rows[p]);
    return alg_rank(m, opts);
  };

  // The smallest dependent prefix ends in the largest element of every
  // minimal-ranking essential set; its unique circuit through that element
  // is the answer.
  std::vector<std::size_t> prefix;
  std::optional<std::vector<std::size_t>> circuit;
  for (std::size_t t = 0; t < n; ++t) {
    prefix.push_back(t);
    if (rank_of(prefix) == static_cast<int>(prefix.size())) continue;
    std::vector<std::size_t> c;
    for (std::size_t e = 0; e < t; ++e) {
      std::vector<std::size_t> rest;
      for (std::size_t q : prefix)
        if (q != e) rest.push_back(q);
      if (rank_of(rest) == static_cast<int>(rest.size())) c.push_back(e);
    }
    c.push_back(t);
    circuit = std::move(c);
    break;
  }

  if (circuit && is_alg_essential(pick(alg, *circuit), opts)) {
    if (n <= 12) {
      auto check = exhaustive_minimal(alg, opts);
      if (check && ranks_lower(*check, *circuit)) circuit = check;
    }
    return pick(alg, *circuit);
  }
  if (n <= 12) {
    if (auto e = exhaustive_minimal(alg, opts)) return pick(alg, *e);
  }
  throw Error(ErrorKind::NoEssentialSubset, "no algebraically essential subsystem found");
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<VariableReduction> try_reduce(const std::vector<AlgPolynomial>& sub,
                                            const std::vector<VarRef>& vars,
                                            const std::vector<std::size_t>& cols,
                                            const RankOptions& opts) {
  VariableReduction r;
  std::set<VarRef> kept;
  for (std::size_t c : cols) kept.insert(vars[c]);
  for (const auto& v : vars) (kept.count(v) ? r.kept : r.dropped).push_back(v);
  for (const auto& p : sub) {
    AlgPolynomial q{p.poly, p.level, {}};
    std::set<LaurentMonomial> seen;
    for (const auto& t : p.terms) {
      std::map<VarRef, int> e;
      for (const auto& [v, x] : t.mono.exponents())
        if (kept.count(v)) e.emplace(v, x);
      LaurentMonomial mono(std::move(e));
      if (!seen.insert(mono).second) return std::nullopt;
      q.terms.push_back({t.coeff, std::move(mono)});
    }
    r.polys.push_back(std::move(q));
  }
  if (!is_alg_essential(r.polys, opts)) return std::nullopt;
  if (static_cast<int>(alg_rank(alg_support_matrix(r.polys, r.kept), opts)) !=
      static_cast<int>(r.kept.size()))
    return std::nullopt;
  return r;
}

}  // namespace

VariableReduction variable_essential_reduce(const std::vector<AlgPolynomial>& sub,
                                            const RankOptions& opts, std::size_t max_candidates) {
  if (sub.size() < 2) throw Error(ErrorKind::RankDrop, "essential system needs two polynomials");
  const std::size_t k = sub.size() - 1;
  const std::vector<VarRef> vars = alg_variables(sub);
  if (vars.size() < k) throw Error(ErrorKind::RankDrop, "fewer variables than the rank");

  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  std::size_t tried = 0;
  do {
    if (auto r = try_reduce(sub, vars, cols, opts)) return *r;
    if (++tried >= max_candidates) break;
  } while (next_combination(cols, vars.size()));
  throw Error(ErrorKind::RankDrop, "no choice of " + std::to_string(k) +
                                       " variables keeps the system essential");
}

IntVector LatticeMap::to_original(const IntVector& z_exps) const {
  IntVector out(vars.size(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t c = 0; c < vars.size(); ++c) out[c] += z_exps.at(j) * basis[j][c];
  return out;
}

std::string LatticeMap::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    os << "z" << j + 1 << " = ";
    bool first = true;
    for (std::size_t c = 0; c < vars.size(); ++c) {
      if (basis[j][c] == 0) continue;
      if (!first) os << "*";
      first = false;
      os << sdres::to_string(vars[c]);
      if (basis[j][c] != 1) os << "^" << basis[j][c];
    }
    if (first) os << "1";
    os << "\n";
  }
  return os.str();
}

std::string ZSystem::to_string() const {
  std::ostringstream os;
  for (const auto& p : polys) {
    os << "P" << p.poly << "^(" << p.level << ") = ";
    for (std::size_t t = 0; t < p.terms.size(); ++t) {
      if (t) os << " + ";
      os << sdres::to_string(p.terms[t].coeff);
      for (std::size_t j = 0; j < p.terms[t].exps.size(); ++j) {
        const long e = p.terms[t].exps[j];
        if (e == 0) continue;
        os << "*z" << j + 1;
        if (e != 1) os << "^" << e;
      }
    }
    os << "\n";
  }
  return os.str();
}

StrongEssential strong_essential_transform(const std::vector<AlgPolynomial>& sub) {
  if (sub.empty()) throw Error(ErrorKind::DegenerateLattice, "empty system");
  const int k = static_cast<int>(sub.size()) - 1;
  StrongEssential out;
  out.map.vars = alg_variables(sub);

  IntMatrix gens;
  for (const auto& p : sub)
    for (std::size_t t = 1; t < p.terms.size(); ++t) gens.push_back(p.relative_exponents(t, out.map.vars));
  if (lattice_rank(gens) < k)
    throw Error(ErrorKind::DegenerateLattice, "exponent lattice has rank below " + std::to_string(k));

  // Prefer a basis made of the exponent vectors themselves: then the new
  // variables are monomials of the system.
  IntMatrix basis;
  for (const auto& g : gens) {
    if (std::find(basis.begin(), basis.end(), g) != basis.end()) continue;
    basis.push_back(g);
    if (lattice_rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
  }
  bool integral = true;
  for (const auto& g : gens)
    if (!lattice_coordinates(basis, g)) {
      integral = false;
      break;
    }
  if (!integral) basis = hermite_basis(gens);
  out.map.basis = basis;

  out.system.dim = static_cast<int>(basis.size());
  for (const auto& p : sub) {
    ZPolynomial z{p.poly, p.level, {}};
    z.terms.push_back({p.terms.front().coeff, IntVector(basis.size(), 0)});
    for (std::size_t t = 1; t < p.terms.size(); ++t) {
      auto c = lattice_coordinates(basis, p.relative_exponents(t, out.map.vars));
      if (!c) throw Error(ErrorKind::DegenerateLattice, "exponent vector outside the lattice basis");
      z.terms.push_back({p.terms[t].coeff, std::move(*c)});
    }
    out.system.polys.push_back(std::move(z));
  }
  return out;
}

}  // namespace sdres
