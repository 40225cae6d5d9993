#include "doctest.h"

#include "bgg/linalg.hpp"
#include "bgg/rational.hpp"

#include <random>

using namespace bgg;

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK((a + Rational(3, 2)).is_zero());
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7").to_int() == -7);
  CHECK_THROWS(Rational::parse("1/x"));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational promotes to gmp and back") {
  Rational big(std::int64_t(1) << 62);
  Rational sq = big * big;
  CHECK(sq.str() == "21267647932558653966460912964485513216");
  Rational back = sq / big;
  CHECK(back == big);
  CHECK(back.num() == (std::int64_t(1) << 62));
  Rational f(1, (std::int64_t(1) << 62) + 1);
  Rational g = f * f * Rational((std::int64_t(1) << 62) + 1) * Rational((std::int64_t(1) << 62) + 1);
  CHECK(g.is_one());
}

TEST_CASE("sparse vector algebra") {
  SparseVec x = SparseVec::from_entries({{3, 1}, {1, 2}, {3, -1}});
  CHECK(x.nnz() == 1);
  CHECK(x.get(1) == Rational(2));
  SparseVec y = SparseVec::unit(1, -2);
  CHECK((x + y).is_zero());
  CHECK(dot(x, SparseVec::unit(1, 3)) == Rational(6));
}

TEST_CASE("dense elimination: rank, kernel, solve, inverse") {
  Matrix m(3, 3);
  int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(m.rank() == 2);
  Matrix k = m.kernel();
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(m.determinant().is_zero());
  CHECK_FALSE(m.inverse().has_value());
  m(2, 2) = 10;
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(3));
  CHECK(m.determinant() == Rational(-3));
}

TEST_CASE("random exact solves agree with products") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a(4, 4), x(4, 2);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = dist(rng);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) x(i, j) = dist(rng);
    Matrix b = a * x;
    auto sol = a.solve(b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
}

TEST_CASE("coordinate charts and span helpers") {
  std::vector<SparseVec> basis{SparseVec::from_entries({{0, 1}, {5, 2}}), SparseVec::from_entries({{5, 1}, {7, 1}})};
  CoordinateChart chart(10, basis);
  SparseVec v = basis[0].scaled(3) + basis[1].scaled(Rational(-1, 2));
  auto c = chart.coords(v);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(3));
  CHECK((*c)[1] == Rational(-1, 2));
  CHECK_FALSE(chart.contains(SparseVec::unit(7)));

  std::vector<SparseVec> a{SparseVec::unit(0), SparseVec::unit(1)};
  std::vector<SparseVec> b{SparseVec::from_entries({{1, 1}, {2, 1}}), SparseVec::unit(2)};
  auto inter = intersect_spans(3, a, b);
  REQUIRE(inter.size() == 1);
  CHECK(inter[0] == SparseVec::unit(1));
  CHECK(span_rank(3, {a[0], a[1], a[0] + a[1]}) == 2);
}

TEST_CASE("kernel of sparse images") {
  std::vector<SparseVec> imgs{SparseVec::unit(4), SparseVec::unit(4, 2), SparseVec()};
  auto k = kernel_of(imgs);
  CHECK(k.size() == 2);
  for (const auto& v : k) {
    VecBuilder b;
    for (const auto& [j, c] : v.entries()) b.add(imgs[j], c);
    CHECK(b.finish().is_zero());
  }
}

TEST_CASE("sparse matrix product and transpose") {
  SparseMatrix a(2, 2), b(2, 2);
  a.set_col(0, SparseVec::unit(1));
  b.set_col(1, SparseVec::unit(0));
  SparseMatrix ab = a * b;
  CHECK(ab.get(1, 1) == Rational(1));
  CHECK(commutator(a, b).get(0, 0) == Rational(-1));
  CHECK(a.transpose().get(0, 1) == Rational(1));
}
