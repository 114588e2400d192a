#include <set>

#include "doctest.h"
#include "sdres/algred.hpp"
#include "sdres/error.hpp"
#include "sdres/essanalysis.hpp"
#include "sdres/resultant.hpp"
#include "support.hpp"

using namespace sdres;

namespace {

ZSystem golden_z() {
  SystemSource g = testing::load_system("golden.sdr");
  Specialization s = select_and_specialize({g.polys[0], g.polys[1], g.polys[2]}, 4);
  auto sub = find_minimal_essential(prolong(s.polys, modified_jacobi_bounds(s)));
  return strong_essential_transform(variable_essential_reduce(sub).polys).system;
}

MultiPoly u(int poly, int term, int shift = 0) { return MultiPoly::symbol(coeff_symbol({poly, term, shift})); }

// z-system in one variable; exps[i] lists the powers of P_i's terms.
ZSystem univariate(const std::vector<std::vector<long>>& exps) {
  ZSystem z;
  z.dim = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    ZPolynomial p;
    p.poly = static_cast<int>(i);
    for (std::size_t t = 0; t < exps[i].size(); ++t)
      p.terms.push_back({CoeffRef{static_cast<int>(i), static_cast<int>(t), 0}, IntVector{exps[i][t]}});
    z.polys.push_back(p);
  }
  return z;
}

}  // namespace

TEST_CASE("supports") {
  auto sup = extract_supports(golden_z());
  CHECK(sup.size() == 7);
  IntMatrix all;
  for (const SupportSet& s : sup) {
    REQUIRE(s.points.size() >= 3);
    CHECK(s.points[0] == IntVector(6, 0));
    for (std::size_t t = 1; t < s.points.size(); ++t) {
      int ones = 0;
      for (long e : s.points[t]) ones += e == 1;
      CHECK(ones == 1);
      all.push_back(s.points[t]);
    }
  }
  CHECK(lattice_rank(all) == 6);

  auto pair = extract_supports(univariate({{0, 1}, {0, 1}}));
  CHECK(pair[0].points == std::vector<IntVector>{{0}, {1}});
  CHECK(pair[1].points == std::vector<IntVector>{{0}, {1}});
}

TEST_CASE("sylvester") {
  ZSystem z = univariate({{0, 1}, {0, 1}});
  CHECK(determinant(sylvester_matrix(z)) == u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0));

  ResultantOptions plain;
  plain.sylvester_fast_path = false;
  ResultantOptions fast;
  for (const auto& exps : std::vector<std::vector<std::vector<long>>>{
           {{0, 1}, {0, 1}}, {{0, 1, 2}, {0, 1}}, {{0, 1, 2}, {0, 2}}, {{0, 1, 3}, {0, 1, 2}}}) {
    ZSystem sys = univariate(exps);
    ResultantComputation a = sparse_resultant(sys, plain);
    ResultantComputation b = sparse_resultant(sys, fast);
    CHECK_FALSE(a.sylvester);
    CHECK(b.sylvester);
    CHECK(a.resultant.poly == b.resultant.poly);
    CHECK(a.degree_certified);
  }
}

TEST_CASE("mixed subdivision row content") {
  ZSystem z = golden_z();
  auto sup = extract_supports(z);
  MixedDecomposition d = mixed_subdivision(sup, 5);
  CHECK(d.points.size() == perturbed_lattice_points(sup, d.lifting.delta).size());
  NewtonMatrixPair m = build_matrices(d, z);
  CHECK(m.m1.size() == d.points.size());
  std::size_t non_mixed = 0;
  for (const CellPoint& c : d.points) non_mixed += !c.mixed;
  CHECK(m.m2.size() == non_mixed);
  for (std::size_t r : m.m2_rows) CHECK(m.tags[r].poly != 0);
  for (std::size_t i = 1; i < d.points.size(); ++i) CHECK(d.points[i - 1].point < d.points[i].point);
  // mixed volume of the other six supports is 1 for each linear polynomial
  for (int c : d.mixed_counts) CHECK(c == 1);
}

TEST_CASE("golden resultant is independent of the lifting") {
  ZSystem z = golden_z();
  MultiPoly want = testing::load_resultant("golden_resultant.txt").normalized();
  std::set<std::size_t> dims;
  const std::vector<std::pair<std::uint64_t, int>> runs{{0, 1}, {0, 6}, {1, 6}};
  for (const auto& [seed, candidates] : runs) {
    ResultantOptions opts;
    opts.seed = seed;
    opts.subdivision.delta_candidates = candidates;
    ResultantComputation r = sparse_resultant(z, opts);
    CHECK(r.resultant.poly == want);
    CHECK(r.degree_certified);
    CHECK(r.resultant.homogeneous);
    CHECK(r.m2_dim > 0);
    dims.insert(r.m1_dim);
  }
  // different matrix pairs, same quotient
  CHECK(dims.size() >= 2);
}

TEST_CASE("resultant normalization") {
  ZSystem z = univariate({{0, 1}, {0, 1}});
  ResultantPoly r = make_resultant(MultiPoly(-4) * (u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0)), z);
  CHECK(r.poly.content() == 1);
  CHECK(r.poly.leading().coeff > 0);
  CHECK(r.homogeneous);
  CHECK(r.block_degrees.at({0, 0}) == 1);
  CHECK(r.order_profile.at(0) == Ord(0));
}

TEST_CASE("determinant quotient errors") {
  NewtonMatrixPair p;
  MultiPoly a = u(0, 0);
  p.m1 = {{a, MultiPoly()}, {MultiPoly(), a}};
  p.m2 = {{MultiPoly()}};
  p.m2_rows = {1};
  CHECK_THROWS_AS(determinant_quotient(p), Error);
  p.m2 = {{a}};
  CHECK(determinant_quotient(p) == a);
  p.m2 = {{u(1, 0)}};
  CHECK_THROWS_AS(determinant_quotient(p), Error);
}
