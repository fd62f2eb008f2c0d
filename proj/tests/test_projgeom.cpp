#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fgeom/linalg.hpp"
#include "fgeom/projgeom.hpp"
#include "support.hpp"

using namespace fgeom;

TEST_CASE("rref, rank, null space and inverse") {
  auto f = Field::of_order(3);
  Matrix a(3, 4, {Fe{1}, Fe{2}, Fe{0}, Fe{1}, Fe{2}, Fe{1}, Fe{0}, Fe{2}, Fe{0}, Fe{0}, Fe{1}, Fe{1}});
  CHECK(rank(*f, a) == 2);
  const Matrix ns = null_space(*f, a);
  CHECK(ns.rows() == 2);
  for (std::size_t i = 0; i < ns.rows(); ++i) CHECK(vec_mat(*f, ns.row(i), transpose(a)) == Vec(3, f->zero()));
  std::vector<std::size_t> piv;
  const Matrix r = rref(*f, a, &piv);
  CHECK(piv == std::vector<std::size_t>{0, 2});
  CHECK(rref(*f, r) == r);
  const Matrix b(2, 2, {Fe{1}, Fe{2}, Fe{1}, Fe{1}});
  CHECK(mat_mul(*f, b, inverse(*f, b)) == Matrix::identity(*f, 2));
  CHECK_THROWS_AS(inverse(*f, Matrix(2, 2, {Fe{1}, Fe{2}, Fe{2}, Fe{1}})), std::domain_error);
}

TEST_CASE("GL enumeration counts") {
  CHECK(enumerate_gl(*Field::of_order(2), 2).size() == 6);
  CHECK(enumerate_gl(*Field::of_order(3), 2).size() == 48);
  CHECK(enumerate_gl(*Field::of_order(2), 3).size() == 168);
  CHECK(order_gl(4, 2) == 20160);
}

TEST_CASE("points of PG(m,q) match the raw enumeration") {
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (std::size_t m : {1u, 2u, 3u}) {
      auto f = Field::of_order(q);
      const auto pts = enumerate_points(*f, m);
      const auto raw = oracle::raw_points(*f, m);
      REQUIRE(pts.size() == raw.size());
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      std::set<Vec> a, b(raw.begin(), raw.end());
      for (const auto& p : pts) a.insert(p.coords());
      CHECK(a == b);
    }
  CHECK_THROWS_AS(enumerate_points(*Field::of_order(2), 10, 100), BudgetExceeded);
}

TEST_CASE("subspace counts: gaussian binomial against distinct spans") {
  for (unsigned q : {2u, 3u})
    for (std::size_t m : {2u, 3u})
      for (int k = 0; k <= static_cast<int>(m); ++k) {
        auto f = Field::of_order(q);
        const auto subs = enumerate_subspaces(*f, m, k);
        CHECK(BigInt(subs.size()) == gaussian_binomial(static_cast<long>(m) + 1, k + 1, q));
        // Oracle: distinct spans of all (k+1)-tuples of points.
        const auto pts = enumerate_points(*f, m);
        std::set<Subspace> spans;
        std::vector<std::size_t> idx(static_cast<std::size_t>(k) + 1, 0);
        while (true) {
          std::vector<ProjPoint> sel;
          for (auto i : idx) sel.push_back(pts[i]);
          const Subspace s = span(*f, sel);
          if (s.rank() == idx.size()) spans.insert(s);
          std::size_t pos = 0;
          while (pos < idx.size() && ++idx[pos] == pts.size()) idx[pos++] = 0;
          if (pos == idx.size()) break;
        }
        CHECK(spans.size() == subs.size());
      }
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), std::invalid_argument);
}

TEST_CASE("span and intersection satisfy the dimension formula") {
  auto f = Field::of_order(3);
  const auto lines = enumerate_subspaces(*f, 3, 1);
  const auto planes = enumerate_subspaces(*f, 3, 2);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < lines.size(); i += 7)
    for (std::size_t j = 0; j < planes.size(); j += 5) {
      const auto meet = intersect(*f, lines[i], planes[j]);
      const std::size_t mr = meet ? meet->rank() : 0;
      CHECK(span(*f, lines[i], planes[j]).rank() + mr == lines[i].rank() + planes[j].rank());
      if (meet) {
        CHECK(lines[i].contains(*f, *meet));
        CHECK(planes[j].contains(*f, *meet));
      }
      ++checked;
    }
  CHECK(checked > 50);
}

TEST_CASE("frames and subgeometries") {
  auto f4 = Field::of_order(4);
  const auto fr = standard_frame(*f4, 2);
  CHECK(fr.size() == 4);
  CHECK(is_frame(*f4, fr, 2));
  std::vector<ProjPoint> bad = {fr[0], fr[1], fr[2], ProjPoint(*f4, {Fe{1}, Fe{1}, Fe{0}})};
  CHECK_FALSE(is_frame(*f4, bad, 2));
  CHECK_THROWS_AS(is_frame(*f4, std::vector<ProjPoint>(fr.begin(), fr.end() - 1), 2), std::invalid_argument);
  CHECK(subgeometry_points(*f4, 2, 2, fr).size() == 7);
  CHECK(subgeometry_points(*Field::of_order(9), 1, 3, standard_frame(*Field::of_order(9), 1)).size() == 4);
  CHECK(subgeometry_points(*Field::of_order(8), 2, 2, standard_frame(*Field::of_order(8), 2)).size() == 7);
  CHECK_THROWS_AS(ProjPoint(*f4, Vec(3, f4->zero())), std::invalid_argument);
}

TEST_CASE("json round trip of elements") {
  auto f = Field::of_order(9);
  for (unsigned a = 0; a < 9; ++a) {
    const Fe x{static_cast<std::uint16_t>(a)};
    CHECK(element_from_json(*f, element_json(*f, x)) == x);
  }
  CHECK(field_json(*f)["order"] == 9);
}
