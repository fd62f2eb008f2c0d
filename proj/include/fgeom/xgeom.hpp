// X(n,t,q): (t-1)-spaces of PG(n+t,q) skew to the n-space
// pi = {X_0 = ... = X_{t-1} = 0}, and t-spaces meeting pi in one point.
#pragma once

#include <vector>

#include "fgeom/incidence.hpp"
#include "fgeom/matrixpoint.hpp"
#include "fgeom/projgeom.hpp"

namespace fgeom {

struct XSpec {
  std::size_t n = 1;
  std::size_t t = 2;
  FieldPtr field;

  std::size_t ambient_dim() const { return n + t; }
  /// pi, spanned by e_t .. e_{n+t}.
  Subspace pi() const;
  /// Sigma_j = <e_j, pi>.
  Subspace sigma(std::size_t j) const;
};

/// Geometric and matrix descriptions of the points, linked by index.
struct XGeometry {
  XSpec spec;
  IncidenceStructure geometry;
  std::vector<Subspace> point_spaces;
  std::vector<Subspace> line_spaces;
  std::vector<MatrixPoint> matrices;
};

/// Exhaustive: enumerates all (t-1)- and t-subspaces of PG(n+t,q).
XGeometry build_x(const XSpec& spec, std::uint64_t budget = kDefaultBudget);

/// A_P with column j read from U_j = P ∩ Sigma_j = e_j + sum_i a_ij e_{t+i}.
/// Throws std::invalid_argument when P is not a (t-1)-space skew to pi.
MatrixPoint coordinatize_point(const Subspace& p, const XSpec& spec);
/// Inverse of coordinatize_point.
Subspace matrix_to_space(const MatrixPoint& a, const XSpec& spec);
/// L ∩ pi; throws std::invalid_argument unless it is a single point.
ProjPoint line_at_infinity(const Subspace& line, const XSpec& spec);

/// The block matrix [[I_t, 0], [A, I_{n+1}]] acting on column vectors.
Matrix translation_matrix(const MatrixPoint& a, const XSpec& spec);
/// Image of a subspace under a collineation given by a matrix acting on
/// column coordinate vectors.
Subspace apply_collineation(const Field& f, const Matrix& g, const Subspace& s);

}  // namespace fgeom
