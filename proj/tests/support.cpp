#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sdres::testing {

std::string data_path(const std::string& name) { return std::string(SDRES_TEST_DATA) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemSource load_system(const std::string& name) { return parse_system(read_file(data_path(name))); }

namespace {

// "δ^2u01", "δu12" or "u20".
CoeffRef parse_coeff_token(const std::string& tok) {
  CoeffRef c;
  std::size_t pos = 0;
  const std::string delta = "δ";
  if (tok.compare(0, delta.size(), delta) == 0) {
    pos = delta.size();
    c.shift = 1;
    if (pos < tok.size() && tok[pos] == '^') {
      std::size_t end = tok.find('u', pos);
      c.shift = std::stoi(tok.substr(pos + 1, end - pos - 1));
      pos = end;
    }
  }
  if (tok.size() != pos + 3 || tok[pos] != 'u') throw std::runtime_error("bad token " + tok);
  c.poly = tok[pos + 1] - '0';
  c.term = tok[pos + 2] - '0';
  return c;
}

}  // namespace

MultiPoly load_resultant(const std::string& name) {
  std::istringstream in(read_file(data_path(name)));
  std::string line;
  std::vector<Term> terms;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string sign, tok;
    if (!(ls >> sign)) continue;
    std::map<SymbolId, std::uint32_t> exps;
    while (ls >> tok) ++exps[coeff_symbol(parse_coeff_token(tok))];
    terms.push_back({Monomial(std::vector<Monomial::Factor>(exps.begin(), exps.end())),
                     BigInt(sign == "-" ? -1 : 1)});
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly random_poly(Rng& rng, int max_terms, int nsyms, int max_deg, long coeff_bound) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng.uniform(1, max_terms));
  for (int t = 0; t < count; ++t) {
    std::vector<Monomial::Factor> f;
    for (int s = 0; s < nsyms; ++s) {
      auto e = static_cast<std::uint32_t>(rng.uniform(0, max_deg));
      if (e > 0) f.emplace_back(static_cast<SymbolId>(s), e);
    }
    terms.push_back({Monomial(std::move(f)), BigInt(static_cast<long>(rng.nonzero(coeff_bound)))});
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly laplace_determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  if (n == 1) return m[0][0];
  MultiPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][c] * laplace_determinant(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

void assign_rows(const std::vector<std::vector<Ord>>& a, std::size_t row, std::vector<bool>& used,
                 Ord acc, Ord& best) {
  if (row == a.size()) {
    if (best < acc) best = acc;
    return;
  }
  for (std::size_t c = 0; c < used.size(); ++c) {
    if (used[c]) continue;
    used[c] = true;
    assign_rows(a, row + 1, used, acc + a[row][c], best);
    used[c] = false;
  }
}

}  // namespace

Ord brute_force_jacobi(const OrderMatrix& m) {
  auto a = m.entries;
  if (a.empty()) return Ord(0);
  if (a.size() > a.front().size()) {
    std::vector<std::vector<Ord>> t(a.front().size(), std::vector<Ord>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    a = std::move(t);
  }
  std::vector<bool> used(a.front().size(), false);
  Ord best = Ord::neg_inf();
  assign_rows(a, 0, used, Ord(0), best);
  return best;
}

namespace {

Rational random_nonzero(Rng& rng) {
  return Rational(BigInt(static_cast<long>(rng.nonzero(50))), BigInt(static_cast<long>(rng.uniform(1, 7))));
}

Rational eval_monomial(const LaurentMonomial& m, std::map<VarRef, Rational>& y, Rng& rng) {
  Rational v = 1;
  for (const auto& [var, e] : m.exponents()) {
    auto it = y.find(var);
    if (it == y.end()) it = y.emplace(var, random_nonzero(rng)).first;
    for (int k = 0; k < std::abs(e); ++k) {
      if (e > 0) v *= it->second;
      else v /= it->second;
    }
  }
  return v;
}

}  // namespace

Rational evaluate_at_random_zero(const MultiPoly& sr, const SystemSource& src, Rng& rng) {
  std::map<int, int> max_shift;
  for (SymbolId id : sr.symbols()) {
    CoeffRef c = coeff_from_symbol(id);
    max_shift[c.poly] = std::max(max_shift[c.poly], c.shift);
  }
  std::map<VarRef, Rational> y;
  RationalAssignment values;
  for (const auto& [poly, top] : max_shift) {
    const DiffPolynomial& f = src.polys.at(static_cast<std::size_t>(poly));
    for (int l = 0; l <= top; ++l) {
      Rational rest = 0;
      for (std::size_t j = 1; j < f.terms().size(); ++j) {
        CoeffRef c = f.terms()[j].coeff;
        c.shift += l;
        Rational u = random_nonzero(rng);
        values[coeff_symbol(c)] = u;
        rest += u * eval_monomial(f.terms()[j].mono.shifted(l), y, rng);
      }
      CoeffRef c0 = f.terms()[0].coeff;
      c0.shift += l;
      values[coeff_symbol(c0)] = -rest / eval_monomial(f.terms()[0].mono.shifted(l), y, rng);
    }
  }
  return evaluate(sr, values);
}

SystemSource random_system(Rng& rng, int n, int max_order, int max_terms) {
  std::ostringstream text;
  for (int i = 0; i <= n; ++i) {
    const int count = static_cast<int>(rng.uniform(2, max_terms));
    std::set<std::string> monos;
    text << "P" << i << " =";
    int guard = 0;
    while (static_cast<int>(monos.size()) < count && guard++ < 100) {
      std::map<std::pair<int, int>, int> factors;
      const int nf = monos.empty() ? static_cast<int>(rng.uniform(0, 1)) : static_cast<int>(rng.uniform(1, 2));
      for (int f = 0; f < nf; ++f) {
        int var = static_cast<int>(rng.uniform(1, n));
        int ord = static_cast<int>(rng.uniform(0, max_order));
        int e = static_cast<int>(rng.uniform(-1, 2));
        if (e == 0) e = 1;
        factors[{var, ord}] = e;
      }
      std::string m;
      for (const auto& [vr, e] : factors) {
        m += "*y[" + std::to_string(vr.first) + "," + std::to_string(vr.second) + "]";
        if (e != 1) m += "^" + std::to_string(e);
      }
      if (!monos.insert(m).second) continue;
      text << (monos.size() == 1 ? " u" : " + u") << m;
    }
    text << "\n";
  }
  return parse_system(text.str());
}

}  // namespace sdres::testing
