// Point sets in a projective space: the two-line plane test and the
// subgeometry closure.
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fgeom/projgeom.hpp"

namespace fgeom {

struct PointSet {
  FieldPtr field;
  std::size_t dim = 0;  // ambient PG(dim, field)
  std::set<ProjPoint> points;

  PointSet() = default;
  /// Throws std::invalid_argument if a point is not in PG(dim, field).
  PointSet(FieldPtr f, std::size_t m, std::set<ProjPoint> pts);
  std::vector<ProjPoint> as_vector() const { return {points.begin(), points.end()}; }
  bool contains(const ProjPoint& p) const { return points.count(p) != 0; }
  friend bool operator==(const PointSet& a, const PointSet& b) { return a.dim == b.dim && a.points == b.points; }
};

/// A plane meeting K in two intersecting lines (with or without their
/// common point).
struct StarWitness {
  Subspace plane;
  Subspace line1;
  Subspace line2;
  ProjPoint meet;
  bool meet_included = true;
};

struct StarResult {
  bool holds = true;
  std::optional<StarWitness> witness;
};

/// Scans every plane; throws std::invalid_argument when dim < 2.
StarResult has_property_star(const PointSet& k, std::uint64_t budget = kDefaultBudget);

bool spans_ambient(const PointSet& k);

/// m+2 points of K in general position, if any.
std::optional<std::vector<ProjPoint>> find_frame(const PointSet& k);

struct ClosureInfo {
  int rounds = 0;
  /// Set for dim == 1, where the span/intersection recursion cannot grow a
  /// set and the result is the subline over the subfield generated by the
  /// coordinates of K relative to three of its points.
  bool line_case = false;
  unsigned subfield_order = 0;
};

/// Smallest subgeometry containing K.  Throws std::invalid_argument when K
/// contains no frame of its ambient space.
PointSet closure(const PointSet& k, ClosureInfo* info = nullptr);

nlohmann::json pointset_json(const PointSet& k);
/// Reads the schema written by pointset_json / points_json; the field is
/// taken from its "spec" entry.
PointSet pointset_from_json(const nlohmann::json& j);

}  // namespace fgeom
