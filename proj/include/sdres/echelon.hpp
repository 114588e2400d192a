#pragma once

#include <vector>

#include "sdres/bigint.hpp"
#include "sdres/multipoly.hpp"
#include "sdres/unipoly.hpp"

namespace sdres {

inline bool is_zero_value(const BigInt& v) { return v == 0; }
inline bool is_zero_value(const UniPoly& v) { return v.is_zero(); }
inline bool is_zero_value(const MultiPoly& v) { return v.is_zero(); }

inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) { return exact_divide(a, b); }
inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) { return exact_divide(a, b); }

struct Echelon {
  int rank = 0;
  std::vector<int> pivot_columns;
};

// Fraction-free row echelon reduction over an integral domain. Columns are
// scanned left to right, so the pivot columns form the lexicographically
// smallest independent column set.
template <typename T>
Echelon row_echelon(std::vector<std::vector<T>> m) {
  Echelon out;
  const std::size_t rows = m.size();
  if (rows == 0) return out;
  const std::size_t cols = m.front().size();
  T prev = T(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!is_zero_value(m[i][c])) {
        p = i;
        break;
      }
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const T pivot = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        T v = pivot * m[i][j];
        if (!is_zero_value(lead) && !is_zero_value(m[r][j])) v = v - lead * m[r][j];
        m[i][j] = exact_quotient(v, prev);
      }
      m[i][c] = T(0);
    }
    prev = pivot;
    out.pivot_columns.push_back(static_cast<int>(c));
    ++r;
  }
  out.rank = static_cast<int>(r);
  return out;
}

}  // namespace sdres
