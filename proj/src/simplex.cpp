#include "sdres/simplex.hpp"

#include "sdres/error.hpp"

namespace sdres {

namespace {

// Dense tableau: rows[i] = (coefficients..., rhs); obj = reduced costs with
// obj.back() = -(objective value).
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> obj;
  std::vector<int> basis;
  std::size_t cols = 0;  // structural + artificial columns, excluding rhs

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r])
      if (v != 0) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    if (obj[c] != 0) {
      const Rational f = obj[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (rows[r][j] != 0) obj[j] -= f * rows[r][j];
    }
    basis[r] = static_cast<int>(c);
  }

  // Bland's rule over columns [0, limit). Returns false if unbounded.
  bool optimize(std::size_t limit) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c, bool phase_one_only) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(ErrorKind::DimensionMismatch, "lp: rhs size mismatch");

  Tableau t;
  t.cols = n + m;
  t.rows.assign(m, std::vector<Rational>(n + m + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "lp: row size mismatch");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = flip ? Rational(-b[i]) : b[i];
    t.basis[i] = static_cast<int>(n + i);
  }

  // Phase one: minimize the sum of artificials.
  t.obj.assign(n + m + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n + m; ++j)
      if (j < n || j == n + m) t.obj[j] -= t.rows[i][j];
  t.optimize(n + m);

  LpResult out;
  if (t.obj[n + m] != 0) return out;
  out.feasible = true;

  // Drive artificials out of the basis; drop rows that are redundant.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < static_cast<int>(n)) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }

  auto extract = [&] {
    out.x.assign(n, 0);
    out.primal_degenerate = false;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      out.x[static_cast<std::size_t>(t.basis[i])] = t.rows[i][n + m];
      if (t.rows[i][n + m] == 0) out.primal_degenerate = true;
    }
    out.basis = t.basis;
  };

  if (phase_one_only) {
    extract();
    return out;
  }

  // Phase two on the structural columns only.
  t.obj.assign(n + m + 1, 0);
  for (std::size_t j = 0; j < n; ++j) t.obj[j] = c[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto bc = static_cast<std::size_t>(t.basis[i]);
    if (c[bc] == 0) continue;
    const Rational f = c[bc];
    for (std::size_t j = 0; j <= n + m; ++j)
      if (t.rows[i][j] != 0) t.obj[j] -= f * t.rows[i][j];
  }
  if (!t.optimize(n)) throw Error(ErrorKind::InvalidArgument, "lp: unbounded objective");
  extract();
  out.objective = -t.obj[n + m];
  std::vector<bool> is_basic(n, false);
  for (int bv : t.basis) is_basic[static_cast<std::size_t>(bv)] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_basic[j] && t.obj[j] == 0) out.dual_degenerate = true;
  return out;
}

}  // namespace sdres
