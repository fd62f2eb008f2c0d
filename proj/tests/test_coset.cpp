#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fgeom/coset.hpp"
#include "support.hpp"

using namespace fgeom;

TEST_CASE("coset geometry counts") {
  const auto g = build_coset_geometry(1, 2, Field::of_order(3));
  CHECK(g.geometry.num_points() == 81);
  // 4 directions, 9 cosets each.
  CHECK(g.geometry.num_lines() == 36);
  CHECK(g.geometry.num_flags() == 324);
  const auto h = build_coset_geometry(1, 2, Field::of_order(2));
  CHECK(h.geometry.num_lines() == 12);
  CHECK(build_coset_geometry(2, 2, Field::of_order(2)).geometry.num_lines() == 7 * 16);
  CHECK_THROWS_AS(build_coset_geometry(1, 2, Field::of_order(3), 50), BudgetExceeded);
}

TEST_CASE("lines are cosets of rank-one subgroups") {
  auto f = Field::of_order(3);
  const auto g = build_coset_geometry(1, 2, f);
  for (std::size_t j = 0; j < g.lines.size(); ++j) {
    const auto members = coset_members(*f, g.lines[j].direction, g.lines[j].rep);
    std::vector<int> idx;
    for (const auto& m : members) idx.push_back(static_cast<int>(matrix_index(m.entries, 3)));
    std::sort(idx.begin(), idx.end());
    CHECK(idx == g.geometry.points_on(j));
    CHECK(members.front() == g.lines[j].rep);
  }
}

TEST_CASE("cayley graph equals the collinearity graph") {
  auto f = Field::of_order(2);
  const Graph c = cayley_graph(1, 2, *f);
  CHECK(c.num_vertices() == 16);
  CHECK(c.num_edges() == 72);
  const auto g = build_coset_geometry(1, 2, f);
  const Graph p = point_graph(g.geometry);
  CHECK(p.adj == c.adj);
  CHECK(cayley_adjacency(*f, g.points[0], g.points[1]));
  CHECK_FALSE(cayley_adjacency(*f, g.points[0], g.points[0]));
}

TEST_CASE("direction count report") {
  const auto r = direction_count_report(1, 2, Field::of_order(2));
  CHECK(r.counted == 3);
  CHECK(r.projective_points == 3);
  CHECK(r.projective_points_consistent);
  CHECK(r.one_dimension_lower == 1);
  CHECK_FALSE(r.one_dimension_lower_consistent);
  const auto s = direction_count_report(2, 2, Field::of_order(3));
  CHECK(s.counted == 13);
  CHECK(s.projective_points_consistent);
}

TEST_CASE("group law, inverse and json") {
  auto f = Field::of_order(4);
  std::mt19937_64 rng(11);
  const auto id = aut_identity(*f, 1, 2);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_aut(*f, 1, 2, rng), b = random_aut(*f, 1, 2, rng), c = random_aut(*f, 1, 2, rng);
    CHECK(group_op(*f, group_op(*f, a, b), c) == group_op(*f, a, group_op(*f, b, c)));
    CHECK(group_op(*f, a, group_inverse(*f, a)) == id);
    CHECK(group_op(*f, group_inverse(*f, a), a) == id);
    CHECK(group_op(*f, id, a) == a);
    CHECK(aut_from_json(*f, aut_json(*f, a)) == a);
    const MatrixPoint p{matrix_from_index(static_cast<std::size_t>(i) * 7, 2, 2, 4)};
    CHECK(act(*f, group_op(*f, b, a), p) == act(*f, b, act(*f, a, p)));
  }
  CHECK_THROWS_AS(make_aut(*f, Matrix(2, 2), Matrix(2, 2), Matrix::identity(*f, 2), 0), std::invalid_argument);
  CHECK(make_aut(*f, Matrix(2, 2), Matrix::identity(*f, 2), Matrix::identity(*f, 2), -1).l == 1);
}

TEST_CASE("image directions follow B and the frobenius") {
  auto f = Field::of_order(4);
  std::mt19937_64 rng(3);
  const auto g = build_coset_geometry(1, 2, f);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_aut(*f, 1, 2, rng);
    for (const auto& l : g.lines) {
      const auto members = coset_members(*f, l.direction, l.rep);
      const MatrixPoint x = act(*f, a, members[0]), y = act(*f, a, members[1]);
      const Matrix d = mat_sub(*f, y.entries, x.entries);
      // Column space of the rank-one difference is the image direction.
      std::size_t c = 0;
      while (d.at(0, c).v == 0 && d.at(1, c).v == 0) ++c;
      const Vec col = {d.at(0, c), d.at(1, c)};
      CHECK(ProjPoint(*f, col) == image_direction(*f, a, l.direction));
    }
  }
}

TEST_CASE("group order modulo the kernel") {
  CHECK(aut_group_quotient_order(1, 2, 2) == 576);
  CHECK(aut_group_quotient_order(1, 2, 3) == 93312);
  CHECK(kernel_elements(1, 2, *Field::of_order(3)).size() == 2);
}

TEST_CASE("exhaustive group model at (1,2,2)") {
  const auto r = oracle::check_group_model(1, 2, 2, true);
  CHECK(r.elements == 576);
  CHECK(r.pairs_checked == 576u * 576u);
  CHECK(r.distinct_permutations == 576);
  CHECK(r.action_axiom);
  CHECK(r.inverse);
  CHECK(r.kernel_trivial);
  CHECK(r.lines_preserved);
  CHECK(r.translations_sharp);
}
