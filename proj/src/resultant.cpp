#include "sdres/resultant.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "sdres/echelon.hpp"
#include "sdres/error.hpp"
#include "sdres/rng.hpp"
#include "sdres/simplex.hpp"

namespace sdres {

std::vector<SupportSet> extract_supports(const ZSystem& z) {
  std::vector<SupportSet> out;
  for (std::size_t i = 0; i < z.polys.size(); ++i) {
    const auto& p = z.polys[i];
    if (p.terms.size() < 2)
      throw Error(ErrorKind::InvalidArgument, "support needs at least two points");
    SupportSet s;
    s.index = static_cast<int>(i);
    for (const auto& t : p.terms) s.points.push_back(t.exps);
    if (std::any_of(s.points.front().begin(), s.points.front().end(), [](long v) { return v != 0; }))
      throw Error(ErrorKind::InvalidArgument, "distinguished term is not at the origin");
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Column layout of the cell LP: one lambda per (support, point).
struct LpLayout {
  std::vector<std::pair<int, int>> columns;
  int dim = 0;
  std::size_t num_supports = 0;
};

LpLayout layout_of(const std::vector<SupportSet>& supports, int dim) {
  LpLayout l;
  l.dim = dim;
  l.num_supports = supports.size();
  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t a = 0; a < supports[i].points.size(); ++a)
      l.columns.emplace_back(static_cast<int>(i), static_cast<int>(a));
  return l;
}

// Rows: the first `fixed` coordinate equations, then one convexity row per
// support.
void lp_system(const std::vector<SupportSet>& supports, const LpLayout& l, const IntVector& p,
               int fixed, const std::vector<Rational>& delta,
               std::vector<std::vector<Rational>>& a, std::vector<Rational>& b) {
  const std::size_t n = l.columns.size();
  a.assign(static_cast<std::size_t>(fixed) + l.num_supports, std::vector<Rational>(n));
  b.assign(a.size(), 0);
  for (std::size_t c = 0; c < n; ++c) {
    const auto [i, k] = l.columns[c];
    const IntVector& pt = supports[static_cast<std::size_t>(i)].points[static_cast<std::size_t>(k)];
    for (int r = 0; r < fixed; ++r) a[static_cast<std::size_t>(r)][c] = pt[static_cast<std::size_t>(r)];
    a[static_cast<std::size_t>(fixed + i)][c] = 1;
  }
  for (int r = 0; r < fixed; ++r)
    b[static_cast<std::size_t>(r)] = Rational(p[static_cast<std::size_t>(r)]) - delta[static_cast<std::size_t>(r)];
  for (std::size_t i = 0; i < l.num_supports; ++i) b[static_cast<std::size_t>(fixed) + i] = 1;
}

std::vector<IntVector> lattice_points(const std::vector<SupportSet>& supports, const LpLayout& l,
                                      const std::vector<Rational>& delta) {
  const int k = l.dim;
  IntVector lo(static_cast<std::size_t>(k), 0);
  IntVector hi(static_cast<std::size_t>(k), 0);
  for (const auto& s : supports)
    for (int c = 0; c < k; ++c) {
      long mn = std::numeric_limits<long>::max();
      long mx = std::numeric_limits<long>::min();
      for (const auto& pt : s.points) {
        mn = std::min(mn, pt[static_cast<std::size_t>(c)]);
        mx = std::max(mx, pt[static_cast<std::size_t>(c)]);
      }
      lo[static_cast<std::size_t>(c)] += mn;
      hi[static_cast<std::size_t>(c)] += mx;
    }
  // p lies in the box shifted by delta.
  for (int c = 0; c < k; ++c) {
    const auto i = static_cast<std::size_t>(c);
    BigInt f;
    BigInt g;
    const Rational low = Rational(lo[i]) + delta[i];
    const Rational high = Rational(hi[i]) + delta[i];
    mpz_fdiv_q(f.get_mpz_t(), low.get_num_mpz_t(), low.get_den_mpz_t());
    mpz_cdiv_q(g.get_mpz_t(), high.get_num_mpz_t(), high.get_den_mpz_t());
    lo[i] = f.get_si();
    hi[i] = g.get_si();
  }

  std::vector<IntVector> out;
  IntVector p(static_cast<std::size_t>(k), 0);
  const std::vector<Rational> zero_cost(l.columns.size(), 0);
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      out.push_back(p);
      return;
    }
    const auto d = static_cast<std::size_t>(depth);
    for (long v = lo[d]; v <= hi[d]; ++v) {
      p[d] = v;
      lp_system(supports, l, p, depth + 1, delta, a, b);
      if (solve_lp(a, b, zero_cost, true).feasible) self(self, depth + 1);
    }
    p[d] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<Rational> random_delta(Rng& rng, int k) {
  std::vector<Rational> d;
  for (int c = 0; c < k; ++c) {
    Rational v(rng.nonzero(1 << 10), 1L << 22);
    v.canonicalize();
    d.push_back(v);
  }
  return d;
}

}  // namespace

std::vector<IntVector> perturbed_lattice_points(const std::vector<SupportSet>& supports,
                                                const std::vector<Rational>& delta) {
  const int k = supports.empty() ? 0 : static_cast<int>(supports.size()) - 1;
  return lattice_points(supports, layout_of(supports, k), delta);
}

MixedDecomposition mixed_subdivision(const std::vector<SupportSet>& supports, std::uint64_t seed,
                                     const SubdivisionOptions& opts) {
  if (supports.empty()) throw Error(ErrorKind::InvalidArgument, "no supports");
  const int k = static_cast<int>(supports.size()) - 1;
  for (const auto& s : supports)
    for (const auto& pt : s.points)
      if (static_cast<int>(pt.size()) != k)
        throw Error(ErrorKind::DimensionMismatch, "support dimension does not match k+1 supports");

  MixedDecomposition d;
  d.dim = k;
  const LpLayout layout = layout_of(supports, k);
  Rng rng(seed);

  // Among a few perturbation directions keep the one with the fewest points.
  std::vector<IntVector> points;
  for (int t = 0; t < std::max(1, opts.delta_candidates); ++t) {
    std::vector<Rational> delta = random_delta(rng, k);
    std::vector<IntVector> pts = lattice_points(supports, layout, delta);
    if (t == 0 || pts.size() < points.size()) {
      points = std::move(pts);
      d.lifting.delta = std::move(delta);
    }
  }

  std::vector<Rational> cost;
  for (const auto& s : supports) {
    std::vector<Rational> h;
    for (std::size_t a = 0; a < s.points.size(); ++a) h.emplace_back(rng.uniform(1, 1 << 20));
    for (const auto& v : h) cost.push_back(v);
    d.lifting.heights.push_back(std::move(h));
  }

  d.mixed_counts.assign(supports.size(), 0);
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& p : points) {
    lp_system(supports, layout, p, k, d.lifting.delta, a, b);
    const LpResult r = solve_lp(a, b, cost);
    if (!r.feasible) throw Error(ErrorKind::DegenerateLifting, "lattice point left the Minkowski sum");
    if (r.primal_degenerate || r.dual_degenerate ||
        r.basis.size() != static_cast<std::size_t>(2 * k + 1))
      throw Error(ErrorKind::DegenerateLifting, "lifting does not induce a fine subdivision");
    CellPoint cp;
    cp.point = p;
    cp.cell.resize(supports.size());
    for (int col : r.basis) {
      const auto [i, pt] = layout.columns[static_cast<std::size_t>(col)];
      cp.cell[static_cast<std::size_t>(i)].push_back(pt);
    }
    int singletons = 0;
    int last_singleton = -1;
    bool edges_only = true;
    for (std::size_t i = 0; i < cp.cell.size(); ++i) {
      std::sort(cp.cell[i].begin(), cp.cell[i].end());
      if (cp.cell[i].size() == 1) {
        ++singletons;
        last_singleton = static_cast<int>(i);
      } else if (cp.cell[i].size() != 2) {
        edges_only = false;
      }
    }
    if (last_singleton < 0) throw Error(ErrorKind::DegenerateLifting, "cell without a vertex summand");
    cp.row_poly = last_singleton;
    cp.row_vertex = cp.cell[static_cast<std::size_t>(last_singleton)].front();
    cp.mixed = singletons == 1 && edges_only;
    if (cp.mixed) ++d.mixed_counts[static_cast<std::size_t>(last_singleton)];
    d.points.push_back(std::move(cp));
  }
  return d;
}

NewtonMatrixPair build_matrices(const MixedDecomposition& decomp, const ZSystem& z) {
  NewtonMatrixPair out;
  const std::size_t n = decomp.points.size();
  std::map<IntVector, std::size_t> column;
  for (std::size_t j = 0; j < n; ++j) column.emplace(decomp.points[j].point, j);

  out.m1.assign(n, std::vector<MultiPoly>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const CellPoint& cp = decomp.points[r];
    const ZPolynomial& f = z.polys.at(static_cast<std::size_t>(cp.row_poly));
    const IntVector& a = f.terms.at(static_cast<std::size_t>(cp.row_vertex)).exps;
    RowTag tag;
    tag.poly = cp.row_poly;
    tag.point = cp.point;
    for (std::size_t c = 0; c < a.size(); ++c) tag.shift.push_back(cp.point[c] - a[c]);
    for (const auto& t : f.terms) {
      IntVector q = tag.shift;
      for (std::size_t c = 0; c < q.size(); ++c) q[c] += t.exps[c];
      auto it = column.find(q);
      if (it == column.end()) continue;
      out.m1[r][it->second] += MultiPoly::symbol(coeff_symbol(t.coeff));
    }
    out.tags.push_back(std::move(tag));
    if (!cp.mixed) out.m2_rows.push_back(r);
  }
  for (std::size_t r : out.m2_rows) {
    std::vector<MultiPoly> row;
    for (std::size_t c : out.m2_rows) row.push_back(out.m1[r][c]);
    out.m2.push_back(std::move(row));
  }
  return out;
}

namespace {

bool nonsingular_at_random_point(const PolyMatrix& m, std::uint64_t seed) {
  if (m.empty()) return true;
  Rng rng(seed);
  Assignment values;
  for (const auto& row : m)
    for (const auto& e : row)
      for (SymbolId s : e.symbols())
        if (!values.count(s)) values.emplace(s, rng.wide());
  std::vector<std::vector<BigInt>> num;
  for (const auto& row : m) {
    std::vector<BigInt> r;
    for (const auto& e : row) r.push_back(evaluate(e, values));
    num.push_back(std::move(r));
  }
  return row_echelon(std::move(num)).rank == static_cast<int>(m.size());
}

std::pair<int, int> block_of(SymbolId s) {
  const CoeffRef c = coeff_from_symbol(s);
  return {c.poly, c.shift};
}

}  // namespace

MultiPoly determinant_quotient(const NewtonMatrixPair& pair) {
  if (!nonsingular_at_random_point(pair.m2, 0x5eed) && !nonsingular_at_random_point(pair.m2, 0xfeed))
    throw Error(ErrorKind::ZeroDenominator, "det(M2) vanishes");
  const MultiPoly num = determinant(pair.m1);
  if (num.is_zero()) throw Error(ErrorKind::NotDivisible, "det(M1) vanishes");
  if (pair.m2.empty()) return num;
  return exact_divide(num, determinant(pair.m2));
}

ResultantPoly make_resultant(MultiPoly poly, const ZSystem& z) {
  ResultantPoly r;
  r.poly = poly.normalized();
  std::set<std::pair<int, int>> blocks;
  for (const auto& p : z.polys)
    for (const auto& t : p.terms) blocks.insert(block_of(coeff_symbol(t.coeff)));
  for (const auto& blk : blocks) {
    std::uint32_t lo = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t hi = 0;
    for (const auto& t : r.poly.terms()) {
      std::uint32_t d = 0;
      for (const auto& [s, e] : t.mono.factors())
        if (block_of(s) == blk) d += e;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    if (r.poly.terms().empty()) lo = hi = 0;
    if (lo != hi) r.homogeneous = false;
    r.block_degrees[blk] = static_cast<int>(hi);
  }
  for (const auto& p : z.polys) r.order_profile.emplace(p.poly, Ord::neg_inf());
  for (const auto& t : r.poly.terms())
    for (const auto& [s, e] : t.mono.factors()) {
      const CoeffRef c = coeff_from_symbol(s);
      Ord& o = r.order_profile[c.poly];
      if (o < Ord(c.shift)) o = Ord(c.shift);
    }
  return r;
}

ResultantPoly quotient_resultant(const NewtonMatrixPair& pair, const ZSystem& z) {
  return make_resultant(determinant_quotient(pair), z);
}

PolyMatrix sylvester_matrix(const ZSystem& z) {
  if (z.dim != 1 || z.polys.size() != 2)
    throw Error(ErrorKind::InvalidArgument, "Sylvester matrix needs two univariate polynomials");
  std::vector<std::map<long, MultiPoly>> dense(2);
  std::vector<long> deg(2);
  for (std::size_t i = 0; i < 2; ++i) {
    long lo = 0;
    long hi = 0;
    for (const auto& t : z.polys[i].terms) {
      lo = std::min(lo, t.exps[0]);
      hi = std::max(hi, t.exps[0]);
    }
    for (const auto& t : z.polys[i].terms)
      dense[i][t.exps[0] - lo] += MultiPoly::symbol(coeff_symbol(t.coeff));
    deg[i] = hi - lo;
  }
  const auto size = static_cast<std::size_t>(deg[0] + deg[1]);
  PolyMatrix m(size, std::vector<MultiPoly>(size));
  std::size_t row = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (long s = 0; s < deg[1 - i]; ++s, ++row)
      for (const auto& [e, c] : dense[i]) m[row][static_cast<std::size_t>(s + e)] = c;
  return m;
}

ResultantComputation sparse_resultant(const ZSystem& z, const ResultantOptions& opts) {
  ResultantComputation out;
  if (opts.sylvester_fast_path && z.dim == 1 && z.polys.size() == 2) {
    out.matrices.m1 = sylvester_matrix(z);
    out.m1_dim = out.matrices.m1.size();
    out.sylvester = true;
    out.attempts = 1;
    out.resultant = make_resultant(determinant(out.matrices.m1), z);
    out.degree_certified = true;
    return out;
  }

  const std::vector<SupportSet> supports = extract_supports(z);
  std::string last_failure;
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    out.attempts = attempt + 1;
    try {
      const MixedDecomposition d =
          mixed_subdivision(supports, derive_seed(opts.seed, 0x100 + static_cast<std::uint64_t>(attempt)),
                            opts.subdivision);
      NewtonMatrixPair pair = build_matrices(d, z);
      ResultantPoly r = quotient_resultant(pair, z);

      // Certificate: the quotient is divisible by the resultant, so matching
      // degrees in every polynomial's coefficients pins it down up to a unit.
      bool certified = r.homogeneous;
      for (std::size_t i = 0; i < z.polys.size() && certified; ++i) {
        const ZPolynomial& p = z.polys[i];
        const auto blk = block_of(coeff_symbol(p.terms.front().coeff));
        certified = r.block_degrees[blk] == d.mixed_counts[i];
      }
      if (!certified) {
        last_failure = "quotient degrees do not match the mixed volumes";
        continue;
      }
      out.resultant = std::move(r);
      out.m1_dim = pair.m1.size();
      out.m2_dim = pair.m2.size();
      out.degree_certified = true;
      out.matrices = std::move(pair);
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateLifting && e.kind() != ErrorKind::NotDivisible &&
          e.kind() != ErrorKind::ZeroDenominator)
        throw;
      last_failure = e.what();
    }
  }
  throw Error(ErrorKind::RetriesExhausted,
              "sparse resultant failed after " + std::to_string(opts.max_retries + 1) +
                  " liftings: " + last_failure);
}

}  // namespace sdres
