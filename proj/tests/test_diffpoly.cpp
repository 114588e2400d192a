#include "doctest.h"
#include "sdres/diffpoly.hpp"
#include "sdres/error.hpp"
#include "sdres/parser.hpp"
#include "support.hpp"

using namespace sdres;

namespace {

DiffPolynomial single(const std::string& line) {
  return parse_system("P0 = " + line + "\nP1 = u + u*y[1,0]\nP2 = u + u*y[2,0]\n").polys[0];
}

SymbolicEntry entry(std::initializer_list<std::pair<int, UniPoly>> parts, int poly = 0) {
  SymbolicEntry e;
  for (const auto& [term, g] : parts) e.add(CoeffRef{poly, term, 0}, g);
  return e;
}

const UniPoly x = UniPoly::x();

}  // namespace

TEST_CASE("norm_form") {
  NormForm nf = norm_form(single("u*y[1,0]^-1 + u*y[1,1]"));
  CHECK(nf.poly == single("u + u*y[1,0]*y[1,1]"));
  CHECK(nf.multiplier == LaurentMonomial({{VarRef{1, 0}, 1}}));

  DiffPolynomial normal = single("u + u*y[1,1]");
  CHECK(norm_form(normal).poly == normal);
  CHECK(norm_form(normal).multiplier.is_one());

  nf = norm_form(single("u*y[1,0]^-2*y[2,0] + u*y[1,0]"));
  CHECK(nf.poly == single("u*y[2,0] + u*y[1,0]^3"));
  CHECK(nf.multiplier == LaurentMonomial({{VarRef{1, 0}, 2}}));

  CHECK_THROWS_AS(norm_form(DiffPolynomial()), Error);
}

TEST_CASE("shift") {
  SystemSource g = testing::load_system("golden.sdr");
  DiffPolynomial s = shift(g.polys[0], 1);
  REQUIRE(s.terms().size() == 3);
  CHECK(s.terms()[0].coeff == CoeffRef{0, 0, 1});
  CHECK(s.terms()[1].mono ==
        LaurentMonomial({{VarRef{1, 2}, 2}, {VarRef{2, 2}, 2}, {VarRef{3, 2}, 1}}));
  CHECK(s.terms()[2].mono == LaurentMonomial({{VarRef{1, 1}, 2},
                                              {VarRef{2, 1}, 1},
                                              {VarRef{3, 1}, 1},
                                              {VarRef{4, 1}, 1},
                                              {VarRef{4, 2}, 1}}));
  CHECK(shift(g.polys[0], 0) == g.polys[0]);
}

TEST_CASE("order_of") {
  SystemSource g = testing::load_system("golden.sdr");
  CHECK(order_of(norm_form(g.polys[2]).poly, 1) == Ord(2));
  CHECK(order_of(g.polys[0], 4) == Ord(1));
  CHECK(order_of(g.polys[3], 4) == Ord(2));
  CHECK(order_of(single("u + u*y[1,0]"), 2) == Ord::neg_inf());
}

TEST_CASE("Ord arithmetic") {
  CHECK(Ord(2) + Ord(3) == Ord(5));
  CHECK(Ord(2) + Ord::neg_inf() == Ord::neg_inf());
  CHECK(Ord::neg_inf() < Ord(-100));
  CHECK(Ord(1) <= Ord(1));
}

TEST_CASE("symbolic support vector of the first golden polynomial") {
  SystemSource g = testing::load_system("golden.sdr");
  auto v = symbolic_support_vector(g.polys[0], 4);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == entry({{1, x * BigInt(2)}, {2, UniPoly(2)}}));
  CHECK(v[1] == entry({{1, x * BigInt(2)}, {2, UniPoly(1)}}));
  CHECK(v[2] == entry({{1, x}, {2, UniPoly(1)}}));
  CHECK(v[3] == entry({{2, x + 1}}));

  DiffPolynomial flat(0, {{CoeffRef{0, 0, 0}, LaurentMonomial()}, {CoeffRef{0, 1, 0}, LaurentMonomial()}});
  for (const auto& e : symbolic_support_vector(flat, 2)) CHECK(e.is_zero());
}

TEST_CASE("golden support matrix") {
  SystemSource g = testing::load_system("golden.sdr");
  SupportMatrix m = symbolic_support_matrix(g.polys, 4);
  CHECK(m.num_rows() == 5);
  CHECK(m.num_cols() == 4);
  // last column: (x+1)u02, (x^2+x)u12, (x+1)u23
  CHECK(m.rows[0][3] == entry({{2, x + 1}}, 0));
  CHECK(m.rows[1][3] == entry({{2, x * x + x}}, 1));
  CHECK(m.rows[2][3] == entry({{3, x + 1}}, 2));
  CHECK(m.rows[3][0] == entry({{1, x}, {2, x * BigInt(2)}}, 3));
}

TEST_CASE("order matrix") {
  SystemSource g = testing::load_system("golden.sdr");
  OrderMatrix om = order_matrix(g.polys, 4);
  CHECK(om.num_rows() == 5);
  CHECK(om.entries[0][0] == Ord(1));
  CHECK(om.entries[2][0] == Ord(2));
  CHECK(om.entries[3][3] == Ord(2));

  SystemSource unused = parse_system("P0 = u + u*y[1,0]\nP1 = u + u*y[1,1]\nP2 = u + u*y[1,2]\n");
  OrderMatrix col = order_matrix(unused.polys, 2);
  for (const auto& row : col.entries) CHECK(row[1] == Ord::neg_inf());
}
