#include "doctest.h"
#include "sdres/error.hpp"
#include "sdres/essanalysis.hpp"
#include "sdres/parser.hpp"
#include "support.hpp"

using namespace sdres;

namespace {

std::vector<DiffPolynomial> golden_t() {
  SystemSource g = testing::load_system("golden.sdr");
  return {g.polys[0], g.polys[1], g.polys[2]};
}

OrderMatrix om(std::vector<std::vector<Ord>> e) { return OrderMatrix{std::move(e)}; }

}  // namespace

TEST_CASE("golden rank and essentiality") {
  SystemSource g = testing::load_system("golden.sdr");
  SupportMatrix m = symbolic_support_matrix(g.polys, 4);
  CHECK(symbolic_rank(m).rank == 4);
  CHECK(is_transformally_essential(g.polys, 4));
  CHECK(find_super_essential(g.polys, 4) == std::vector<int>{0, 1, 2});
}

TEST_CASE("randomized rank agrees with exact rank") {
  SystemSource g = testing::load_system("golden.sdr");
  SupportMatrix m = symbolic_support_matrix(g.polys, 4);
  CHECK(exact_symbolic_rank(m) == 4);
  RankOptions paranoid;
  paranoid.paranoid = true;
  CHECK(symbolic_rank(m, paranoid).rank == 4);
}

TEST_CASE("rank of degenerate matrices") {
  SupportMatrix zero;
  zero.row_polys = {0, 1};
  zero.col_vars = {1, 2};
  zero.rows.assign(2, std::vector<SymbolicEntry>(2));
  CHECK(symbolic_rank(zero).rank == 0);

  // second row is twice the first
  SystemSource s = parse_system(
      "P0 = u + u*y[1,0]*y[2,1]\n"
      "P1 = u + u*y[1,0]^2*y[2,1]^2\n"
      "P2 = u + u*y[1,0]\n");
  SupportMatrix m = symbolic_support_matrix({s.polys[0], s.polys[1]}, 2);
  CHECK(symbolic_rank(m).rank == 1);
}

TEST_CASE("essentiality on constructed systems") {
  // every ratio points along y1*y2
  SystemSource flat = parse_system(
      "P0 = u + u*y[1,0]*y[2,0]\n"
      "P1 = u + u*y[1,1]*y[2,1]\n"
      "P2 = u + u*y[1,0]^2*y[2,0]^2\n");
  CHECK_FALSE(is_transformally_essential(flat.polys, 2));

  Rng rng(21);
  for (int round = 0; round < 5; ++round) {
    std::string text;
    for (int i = 0; i <= 3; ++i) {
      const int var = i == 0 ? 1 : i;
      text += "P" + std::to_string(i) + " = u + u*y[" + std::to_string(var) + "," +
              std::to_string(rng.uniform(0, 2)) + "]^" + std::to_string(rng.uniform(1, 3)) + "\n";
    }
    CHECK(is_transformally_essential(parse_system(text).polys, 3));
  }
  CHECK_THROWS_AS(is_transformally_essential(flat.polys, 3), Error);
}

TEST_CASE("super-essential set of the toy system") {
  SystemSource toy = testing::load_system("toy.sdr");
  CHECK(find_super_essential(toy.polys, 1) == std::vector<int>{0, 1});
}

TEST_CASE("jacobi numbers") {
  CHECK(jacobi_number(om({{1, 2}, {2, 1}})) == Ord(4));
  CHECK(jacobi_number(om({{1, Ord::neg_inf()}, {Ord::neg_inf(), 2}})) == Ord(3));
  OrderMatrix a = om({{1, 1}, {1, 2}, {2, 1}});
  CHECK(jacobi_number(a.without_row(0)) == Ord(4));
  CHECK(jacobi_number(a.without_row(1)) == Ord(3));
  CHECK(jacobi_number(a.without_row(2)) == Ord(3));
  CHECK(jacobi_number(om({{Ord::neg_inf(), Ord::neg_inf()}, {1, 2}})) == Ord::neg_inf());
}

TEST_CASE("jacobi number matches brute force") {
  Rng rng(22);
  for (int round = 0; round < 100; ++round) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    std::vector<std::vector<Ord>> e(rows, std::vector<Ord>(cols));
    for (auto& row : e)
      for (auto& v : row)
        if (rng.uniform(0, 4) != 0) v = Ord(static_cast<int>(rng.uniform(0, 9)));
    CHECK(jacobi_number(om(e)) == testing::brute_force_jacobi(om(e)));
  }
}

TEST_CASE("golden specialization and bounds") {
  Specialization s = select_and_specialize(golden_t(), 4);
  CHECK(s.kept_vars == std::vector<int>{1, 4});
  CHECK(s.dropped_vars == std::vector<int>{2, 3});
  CHECK(order_matrix(s.polys, s.kept_vars) == om({{1, 1}, {1, 2}, {2, 1}}));
  CHECK(s.polys[0] == parse_system("P0 = u + u*y[1,1]^2 + u*y[1,0]^2*y[4,0]*y[4,1]\n"
                                   "P1 = u + u*y[1,0]\nP2 = u + u*y[2,0]\nP3 = u + u*y[3,0]\n"
                                   "P4 = u + u*y[4,0]\n")
                          .polys[0]);

  JacobiBounds b = modified_jacobi_bounds(s);
  CHECK(b.jacobi == std::vector<Ord>{4, 3, 3});
  CHECK(b.gcd_degree_sum == 1);
  CHECK(b.modified == std::vector<Ord>{3, 2, 2});
}

TEST_CASE("forced and trivial specializations") {
  SpecializeOptions opts;
  opts.kept_vars = std::vector<int>{1, 2};
  Specialization s = select_and_specialize(golden_t(), 4, opts);
  CHECK(s.kept_vars == std::vector<int>{1, 2});
  CHECK(s.dropped_vars == std::vector<int>{3, 4});

  SystemSource toy = testing::load_system("toy.sdr");
  Specialization same = select_and_specialize(toy.polys, 1);
  CHECK(same.polys == toy.polys);
  CHECK(same.dropped_vars.empty());
}

TEST_CASE("gcd-free columns leave jacobi bounds unchanged") {
  SystemSource toy = testing::load_system("toy.sdr");
  JacobiBounds b = modified_jacobi_bounds(toy.polys, {1});
  CHECK(b.gcd_degree_sum == 0);
  CHECK(b.modified == b.jacobi);
}
