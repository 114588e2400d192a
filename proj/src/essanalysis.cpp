#include "sdres/essanalysis.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "sdres/echelon.hpp"
#include "sdres/error.hpp"
#include "sdres/rng.hpp"

namespace sdres {

namespace {

constexpr SymbolId kXSymbol = std::numeric_limits<SymbolId>::max();

Echelon echelon_at(const SupportMatrix& m, const std::map<CoeffRef, BigInt>& values) {
  std::vector<std::vector<UniPoly>> mat;
  mat.reserve(m.num_rows());
  for (const auto& row : m.rows) {
    std::vector<UniPoly> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(e.specialize(values));
    mat.push_back(std::move(r));
  }
  return row_echelon(std::move(mat));
}

Echelon exact_echelon(const SupportMatrix& m) {
  std::vector<std::vector<MultiPoly>> mat;
  for (const auto& row : m.rows) {
    std::vector<MultiPoly> r;
    for (const auto& e : row) r.push_back(e.to_multipoly(kXSymbol));
    mat.push_back(std::move(r));
  }
  return row_echelon(std::move(mat));
}

int rank_of_rows(const SupportMatrix& m, const std::vector<int>& positions, const RankOptions& opts) {
  std::vector<std::size_t> which(positions.begin(), positions.end());
  return symbolic_rank(m.select_rows(which), opts).rank;
}

// Enumerates k-subsets of {0..n-1} in lexicographic order.
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

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

RankReport symbolic_rank(const SupportMatrix& m, const RankOptions& opts) {
  RankReport best;
  best.seed = opts.seed;
  best.rank = -1;
  const std::set<CoeffRef> coeffs = m.coefficients();
  const int trials = std::max(1, opts.trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(t)));
    std::map<CoeffRef, BigInt> values;
    for (const auto& c : coeffs) values.emplace(c, rng.wide());
    Echelon e = echelon_at(m, values);
    if (e.rank > best.rank) {
      best.rank = e.rank;
      best.pivot_columns = std::move(e.pivot_columns);
    }
  }
  best.trials = trials;
  if (opts.paranoid) {
    Echelon exact = exact_echelon(m);
    if (exact.rank != best.rank) {
      best.rank = exact.rank;
      best.pivot_columns = std::move(exact.pivot_columns);
    }
  }
  return best;
}

int exact_symbolic_rank(const SupportMatrix& m) { return exact_echelon(m).rank; }

bool is_transformally_essential(const std::vector<DiffPolynomial>& system, int n,
                                const RankOptions& opts) {
  if (static_cast<int>(system.size()) != n + 1)
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(n + 1) + " polynomials in " + std::to_string(n) +
                    " variables, got " + std::to_string(system.size()));
  return symbolic_rank(symbolic_support_matrix(system, n), opts).rank == n;
}

std::vector<int> find_super_essential(const std::vector<DiffPolynomial>& system, int n,
                                      const RankOptions& opts) {
  if (!is_transformally_essential(system, n, opts))
    throw Error(ErrorKind::NotEssential, "system is not Laurent transformally essential");
  const SupportMatrix m = symbolic_support_matrix(system, n);
  std::vector<int> t(system.size());
  std::iota(t.begin(), t.end(), 0);
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t k = 0; k < t.size(); ++k) {
      std::vector<int> smaller = t;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      if (rank_of_rows(m, smaller, opts) == static_cast<int>(smaller.size()) - 1) {
        t = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return t;
}

Ord jacobi_number(const OrderMatrix& a) {
  std::size_t rows = a.num_rows();
  std::size_t cols = a.num_cols();
  if (rows == 0 || cols == 0) return 0;
  // Orient so that rows <= cols; each row is then assigned a distinct column.
  const bool transpose = rows > cols;
  if (transpose) std::swap(rows, cols);
  auto at = [&](std::size_t i, std::size_t j) {
    return transpose ? a.entries[j][i] : a.entries[i][j];
  };

  std::int64_t magnitude = 1;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j).finite()) magnitude += std::abs(static_cast<std::int64_t>(at(i, j).value()));
  const std::int64_t forbidden = 2 * magnitude + 1;

  // Hungarian method (potentials), 1-based, minimizing cost = -weight.
  const std::size_t n = rows;
  const std::size_t m = cols;
  auto cost = [&](std::size_t i, std::size_t j) -> std::int64_t {
    Ord v = at(i - 1, j - 1);
    return v.finite() ? -static_cast<std::int64_t>(v.value()) : forbidden;
  };
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0);
  std::vector<std::int64_t> v(m + 1, 0);
  std::vector<std::size_t> p(m + 1, 0);
  std::vector<std::size_t> way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(m + 1, inf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  int total = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] == 0) continue;
    const Ord e = at(p[j] - 1, j - 1);
    if (!e.finite()) return Ord::neg_inf();
    total += e.value();
  }
  return total;
}

JacobiBounds modified_jacobi_bounds(const std::vector<DiffPolynomial>& system,
                                    const std::vector<int>& vars) {
  JacobiBounds b;
  const OrderMatrix a = order_matrix(system, vars);
  for (std::size_t i = 0; i < a.num_rows(); ++i) b.jacobi.push_back(jacobi_number(a.without_row(i)));

  const SupportMatrix s = symbolic_support_matrix(system, vars);
  for (std::size_t c = 0; c < s.num_cols(); ++c) {
    UniPoly g;
    for (const auto& row : s.rows)
      for (const auto& [coeff, part] : row[c].parts()) g = g.is_zero() ? part.primitive() : uni_gcd(g, part);
    const int deg = g.is_zero() ? 0 : g.degree();
    b.column_gcd_degrees.push_back(deg);
    b.gcd_degree_sum += deg;
  }

  for (std::size_t i = 0; i < b.jacobi.size(); ++i) {
    const Ord j = b.jacobi[i];
    if (!j.finite())
      throw Error(ErrorKind::JacobiUndefined,
                  "Jacobi number of the system without polynomial " +
                      std::to_string(system[i].index()) + " is -inf");
    const int mod = j.value() - b.gcd_degree_sum;
    if (mod < 0)
      throw Error(ErrorKind::JacobiUndefined,
                  "modified Jacobi bound for polynomial " + std::to_string(system[i].index()) +
                      " is negative");
    b.modified.push_back(mod);
  }
  return b;
}

namespace {

std::optional<Specialization> try_specialize(const std::vector<DiffPolynomial>& system_t,
                                             const SupportMatrix& full,
                                             const std::vector<std::size_t>& cols,
                                             const RankOptions& opts) {
  const int m = static_cast<int>(system_t.size()) - 1;
  if (symbolic_rank(full.select_cols(cols), opts).rank != m) return std::nullopt;
  Specialization s;
  std::set<int> dropped;
  for (std::size_t c = 0; c < full.num_cols(); ++c) {
    if (std::find(cols.begin(), cols.end(), c) != cols.end())
      s.kept_vars.push_back(full.col_vars[c]);
    else
      dropped.insert(full.col_vars[c]);
  }
  s.dropped_vars.assign(dropped.begin(), dropped.end());
  for (const auto& p : system_t) {
    DiffPolynomial q = set_vars_to_one(p, dropped);
    if (q.has_repeated_monomials()) return std::nullopt;
    s.polys.push_back(std::move(q));
  }
  return s;
}

int bound_score(const JacobiBounds& b) {
  int total = 0;
  for (const Ord& o : b.modified) total += o.value();
  return total;
}

}  // namespace

Specialization select_and_specialize(const std::vector<DiffPolynomial>& system_t, int n,
                                     const SpecializeOptions& opts) {
  if (system_t.empty()) throw Error(ErrorKind::InvalidArgument, "empty system");
  const std::size_t m = system_t.size() - 1;
  const SupportMatrix full = symbolic_support_matrix(system_t, n);

  if (opts.kept_vars) {
    std::vector<std::size_t> cols;
    for (int v : *opts.kept_vars) {
      if (v < 1 || v > n) throw Error(ErrorKind::InvalidArgument, "kept variable out of range");
      cols.push_back(static_cast<std::size_t>(v - 1));
    }
    std::sort(cols.begin(), cols.end());
    if (cols.size() != m)
      throw Error(ErrorKind::RankDrop, "expected " + std::to_string(m) + " kept variables");
    auto s = try_specialize(system_t, full, cols, opts.rank);
    if (!s) throw Error(ErrorKind::RankDrop, "requested kept variables do not give a rank-" + std::to_string(m) + " specialization");
    return *s;
  }

  std::vector<std::size_t> nonzero;
  for (std::size_t c = 0; c < full.num_cols(); ++c)
    for (const auto& row : full.rows)
      if (!row[c].is_zero()) {
        nonzero.push_back(c);
        break;
      }
  if (nonzero.size() < m) throw Error(ErrorKind::RankDrop, "fewer nonzero columns than the rank");

  std::optional<Specialization> best;
  int best_score = 0;
  if (binomial(nonzero.size(), m) <= static_cast<double>(opts.max_candidates)) {
    std::vector<std::size_t> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t k : pick) cols.push_back(nonzero[k]);
      auto s = try_specialize(system_t, full, cols, opts.rank);
      if (!s) continue;
      int score = 0;
      try {
        score = bound_score(modified_jacobi_bounds(*s));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::JacobiUndefined) throw;
        continue;
      }
      if (!best || score < best_score) {
        best = std::move(s);
        best_score = score;
      }
    } while (m > 0 && next_combination(pick, nonzero.size()));
  } else {
    const RankReport r = symbolic_rank(full, opts.rank);
    std::vector<std::size_t> cols(r.pivot_columns.begin(), r.pivot_columns.end());
    if (cols.size() == m) best = try_specialize(system_t, full, cols, opts.rank);
  }
  if (!best) throw Error(ErrorKind::RankDrop, "no variable subset gives a valid specialization");
  return *best;
}

}  // namespace sdres
