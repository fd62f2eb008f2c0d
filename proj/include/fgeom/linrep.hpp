// Linear representations T*_n(K) and generalized linear representations
// T*_{m,t-1}(K), with the hyperplane at infinity fixed as X_last = 0.
#pragma once

#include <vector>

#include "fgeom/incidence.hpp"
#include "fgeom/pointsets.hpp"
#include "fgeom/projgeom.hpp"

namespace fgeom {

Label point_label(const ProjPoint& p);
/// (rank, basis entries row-major); canonical because bases are RREF.
Label subspace_label(const Subspace& s);

/// Appends a zero coordinate: PG(n) -> hyperplane X_{n+1} = 0 of PG(n+1).
PointSet at_infinity(const PointSet& k);
/// The points of PG(n, sub_order) inside PG(n, f), standard frame.
PointSet standard_subgeometry(FieldPtr f, std::size_t n, unsigned sub_order);

struct LinRepSpec {
  std::size_t n = 1;
  /// Point set of PG(n+1, field) inside X_{n+1} = 0.
  PointSet k;
};

/// Points: affine points (x_0..x_n, 1), lexicographic.  Lines: for each
/// point of K in order, the affine lines through it, ordered by their least
/// affine point; label = infinity point ++ least affine point.
IncidenceStructure build_linrep(const LinRepSpec& spec, std::uint64_t budget = kDefaultBudget);

/// The point at infinity carried by a line label of build_linrep.
ProjPoint linrep_line_infinity(const Field& f, const IncidenceStructure& g, std::size_t line, std::size_t n);

/// Points: affine points of PG(m+1, f); lines: t-spaces through an element
/// of K not inside X_{m+1} = 0, labelled by subspace_label.  Elements of K
/// must be pairwise disjoint (t-1)-spaces of that hyperplane.
IncidenceStructure build_gen_linrep(std::size_t m, std::size_t t, const FieldPtr& f, const std::vector<Subspace>& k,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace fgeom
