#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fgeom/xgeom.hpp"

using namespace fgeom;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("X(n,t,q) counts") {
  for (auto [n, t, q] : std::vector<std::tuple<std::size_t, std::size_t, unsigned>>{{1, 2, 2}, {1, 2, 3}, {2, 2, 2}, {1, 3, 2}}) {
    const auto x = build_x({n, t, Field::of_order(q)});
    const std::size_t dirs = (ipow(q, n + 1) - 1) / (q - 1);
    CHECK(x.geometry.num_points() == ipow(q, (n + 1) * t));
    CHECK(x.geometry.num_lines() == dirs * ipow(q, n * t + t) / ipow(q, t));
    CHECK(x.geometry.num_flags() == x.geometry.num_points() * dirs);
    for (std::size_t j = 0; j < x.geometry.num_lines(); ++j) CHECK(x.geometry.points_on(j).size() == ipow(q, t));
  }
  const auto x = build_x({1, 2, Field::of_order(2)});
  CHECK(x.geometry.num_points() == 16);
  CHECK(x.geometry.num_lines() == 12);
  CHECK(x.geometry.num_flags() == 48);
  CHECK_THROWS_AS(build_x({0, 2, Field::of_order(2)}), std::invalid_argument);
}

TEST_CASE("coordinatization is a bijection onto matrices") {
  const XSpec spec{1, 2, Field::of_order(3)};
  const auto x = build_x(spec);
  std::set<MatrixPoint> seen;
  for (std::size_t i = 0; i < x.point_spaces.size(); ++i) {
    CHECK(matrix_to_space(x.matrices[i], spec) == x.point_spaces[i]);
    seen.insert(x.matrices[i]);
  }
  CHECK(seen.size() == 81);
  // The identity point <e_0, e_1> has the zero matrix.
  const Subspace id = matrix_to_space({Matrix(2, 2)}, spec);
  CHECK(coordinatize_point(id, spec).entries.is_zero());
  CHECK_THROWS_AS(coordinatize_point(spec.pi(), spec), std::invalid_argument);
}

TEST_CASE("translations act as matrix addition") {
  const XSpec spec{1, 2, Field::of_order(2)};
  const Field& f = *spec.field;
  const auto x = build_x(spec);
  for (std::size_t a = 0; a < x.matrices.size(); a += 3) {
    const Matrix g = translation_matrix(x.matrices[a], spec);
    for (std::size_t i = 0; i < x.matrices.size(); ++i) {
      const Subspace img = apply_collineation(f, g, x.point_spaces[i]);
      CHECK(coordinatize_point(img, spec).entries == mat_add(f, x.matrices[i].entries, x.matrices[a].entries));
    }
    for (const auto& l : x.line_spaces) {
      const Subspace img = apply_collineation(f, g, l);
      CHECK(line_at_infinity(img, spec) == line_at_infinity(l, spec));
    }
  }
}
