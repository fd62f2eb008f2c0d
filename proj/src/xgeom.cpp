#include "fgeom/xgeom.hpp"

#include <map>
#include <stdexcept>

#include "fgeom/linrep.hpp"

namespace fgeom {

std::size_t matrix_index(const Matrix& a, unsigned q) {
  std::size_t v = 0;
  for (Fe e : a.data()) v = v * q + e.v;
  return v;
}

Matrix matrix_from_index(std::size_t index, std::size_t rows, std::size_t cols, unsigned q) {
  std::vector<Fe> d(rows * cols);
  for (std::size_t i = d.size(); i-- > 0;) {
    d[i] = Fe{static_cast<std::uint16_t>(index % q)};
    index /= q;
  }
  return Matrix(rows, cols, std::move(d));
}

Subspace XSpec::pi() const {
  const std::size_t dim = ambient_dim();
  Matrix g(n + 1, dim + 1);
  for (std::size_t i = 0; i <= n; ++i) g.at(i, t + i) = field->one();
  return Subspace(*field, dim, g);
}

Subspace XSpec::sigma(std::size_t j) const {
  if (j >= t) throw std::out_of_range("XSpec::sigma: j >= t");
  const std::size_t dim = ambient_dim();
  Matrix g = pi().basis();
  Vec e(dim + 1, field->zero());
  e[j] = field->one();
  g.append_row(e);
  return Subspace(*field, dim, g);
}

XGeometry build_x(const XSpec& spec, std::uint64_t budget) {
  if (!spec.field) throw std::invalid_argument("build_x: missing field");
  if (spec.n < 1 || spec.t < 1) throw std::invalid_argument("build_x: need n >= 1 and t >= 1");
  const Field& f = *spec.field;
  const std::size_t dim = spec.ambient_dim();
  const Subspace pi = spec.pi();

  XGeometry x{spec, {}, {}, {}, {}};
  for (auto& s : enumerate_subspaces(f, dim, static_cast<int>(spec.t) - 1, budget))
    if (!intersect(f, s, pi)) x.point_spaces.push_back(std::move(s));
  for (auto& s : enumerate_subspaces(f, dim, static_cast<int>(spec.t), budget)) {
    auto meet = intersect(f, s, pi);
    if (meet && meet->rank() == 1) x.line_spaces.push_back(std::move(s));
  }

  std::map<Subspace, int> line_index;
  for (std::size_t j = 0; j < x.line_spaces.size(); ++j) line_index.emplace(x.line_spaces[j], static_cast<int>(j));

  // Every line through P is <P, V> for the point V = L ∩ pi.
  const auto pi_points = pi.points(f);
  std::vector<std::vector<int>> line_points(x.line_spaces.size());
  for (std::size_t i = 0; i < x.point_spaces.size(); ++i)
    for (const auto& v : pi_points) {
      auto it = line_index.find(span(f, x.point_spaces[i], v));
      if (it == line_index.end()) throw std::logic_error("build_x: span of a point and a point of pi is not a line");
      line_points[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }

  std::vector<Label> plabels, llabels;
  for (const auto& s : x.point_spaces) {
    plabels.push_back(subspace_label(s));
    x.matrices.push_back(coordinatize_point(s, spec));
  }
  for (const auto& s : x.line_spaces) llabels.push_back(subspace_label(s));
  x.geometry = IncidenceStructure("x", std::move(plabels), std::move(llabels), std::move(line_points));
  x.geometry.metadata() = {{"n", spec.n}, {"t", spec.t}, {"field", field_json(f)}};
  return x;
}

MatrixPoint coordinatize_point(const Subspace& p, const XSpec& spec) {
  const Field& f = *spec.field;
  if (p.ambient_dim() != spec.ambient_dim() || p.rank() != spec.t)
    throw std::invalid_argument("coordinatize_point: not a (t-1)-space of PG(n+t,q)");
  if (intersect(f, p, spec.pi())) throw std::invalid_argument("coordinatize_point: subspace meets pi");
  Matrix a(spec.n + 1, spec.t);
  for (std::size_t j = 0; j < spec.t; ++j) {
    auto u = intersect(f, p, spec.sigma(j));
    if (!u || u->rank() != 1) throw std::logic_error("coordinatize_point: P ∩ Sigma_j is not a point");
    const ProjPoint uj(f, u->basis().row_vec(0));
    for (std::size_t i = 0; i <= spec.n; ++i) a.at(i, j) = uj.coords()[spec.t + i];
  }
  return {std::move(a)};
}

Subspace matrix_to_space(const MatrixPoint& a, const XSpec& spec) {
  const Field& f = *spec.field;
  if (a.entries.rows() != spec.n + 1 || a.entries.cols() != spec.t)
    throw std::invalid_argument("matrix_to_space: shape mismatch");
  const std::size_t dim = spec.ambient_dim();
  Matrix g(spec.t, dim + 1);
  for (std::size_t j = 0; j < spec.t; ++j) {
    g.at(j, j) = f.one();
    for (std::size_t i = 0; i <= spec.n; ++i) g.at(j, spec.t + i) = a.entries.at(i, j);
  }
  return Subspace(f, dim, g);
}

ProjPoint line_at_infinity(const Subspace& line, const XSpec& spec) {
  const Field& f = *spec.field;
  auto meet = intersect(f, line, spec.pi());
  if (!meet || meet->rank() != 1) throw std::invalid_argument("line_at_infinity: line does not meet pi in exactly one point");
  return ProjPoint(f, meet->basis().row_vec(0));
}

Matrix translation_matrix(const MatrixPoint& a, const XSpec& spec) {
  const Field& f = *spec.field;
  const std::size_t n1 = spec.n + 1;
  Matrix g = Matrix::identity(f, spec.t + n1);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < spec.t; ++j) g.at(spec.t + i, j) = a.entries.at(i, j);
  return g;
}

Subspace apply_collineation(const Field& f, const Matrix& g, const Subspace& s) {
  return Subspace(f, s.ambient_dim(), mat_mul(f, s.basis(), transpose(g)));
}

}  // namespace fgeom
