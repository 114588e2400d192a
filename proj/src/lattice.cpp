#include "sdres/lattice.hpp"

#include <algorithm>

#include "sdres/echelon.hpp"
#include "sdres/error.hpp"

namespace sdres {

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out;
  for (const auto& row : m) {
    std::vector<BigInt> r;
    for (long v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::DegenerateLattice, "lattice entry overflows");
  return v.get_si();
}

}  // namespace

IntMatrix hermite_basis(const IntMatrix& gens) {
  if (gens.empty()) return {};
  BigMatrix h = to_big(gens);
  const std::size_t cols = h.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < h.size(); ++c) {
    // Euclid on column c across rows [row, end).
    while (true) {
      std::size_t pivot = h.size();
      for (std::size_t i = row; i < h.size(); ++i)
        if (h[i][c] != 0 && (pivot == h.size() || abs(h[i][c]) < abs(h[pivot][c]))) pivot = i;
      if (pivot == h.size()) break;
      std::swap(h[row], h[pivot]);
      bool done = true;
      for (std::size_t i = row + 1; i < h.size(); ++i) {
        if (h[i][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[row][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) h[i][j] -= q * h[row][j];
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[row][c] == 0) continue;
    if (h[row][c] < 0)
      for (auto& v : h[row]) v = -v;
    for (std::size_t i = 0; i < row; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[row][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) h[i][j] -= q * h[row][j];
    }
    ++row;
  }
  IntMatrix out;
  for (std::size_t i = 0; i < row; ++i) {
    IntVector r;
    for (const auto& v : h[i]) r.push_back(to_long(v));
    out.push_back(std::move(r));
  }
  return out;
}

int lattice_rank(const IntMatrix& gens) { return row_echelon(to_big(gens)).rank; }

std::optional<std::vector<Rational>> span_coordinates(const IntMatrix& basis, const IntVector& v) {
  const std::size_t k = basis.size();
  if (k == 0) {
    for (long x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  const std::size_t n = basis.front().size();
  // Solve c * B = v, i.e. B^T c^T = v^T, by Gaussian elimination on the
  // augmented n x (k+1) system over Q.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = v.at(i);
  }
  std::vector<std::size_t> pivot_col_row(k, n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = n;
    for (std::size_t i = r; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p == n) throw Error(ErrorKind::DegenerateLattice, "basis rows are linearly dependent");
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= k; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col_row[c] = r++;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = a[pivot_col_row[j]][k];
  return c;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& v) {
  auto c = span_coordinates(basis, v);
  if (!c) return std::nullopt;
  IntVector out;
  for (auto& q : *c) {
    q.canonicalize();
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(to_long(q.get_num()));
  }
  return out;
}

}  // namespace sdres
