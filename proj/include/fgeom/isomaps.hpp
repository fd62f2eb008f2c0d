// Explicit isomorphisms between the models: X(n,t,q) -> coset geometry ->
// linear representation, field reduction, and the Barlotti-Cofman map.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgeom/companion.hpp"
#include "fgeom/coset.hpp"
#include "fgeom/incidence.hpp"
#include "fgeom/linrep.hpp"
#include "fgeom/xgeom.hpp"

namespace fgeom {

enum class MapStatus { unchecked, flag_preserving, failed };

struct GeometryMap {
  std::shared_ptr<const IncidenceStructure> source;
  std::shared_ptr<const IncidenceStructure> target;
  std::vector<int> point_map;
  std::vector<int> line_map;  // -1 where no target line matches
  MapStatus status = MapStatus::unchecked;
  /// (source point, source line) of the first flag that failed, or a
  /// description of the bijectivity failure.
  std::optional<std::pair<int, int>> counterexample;
  std::string message;
};

struct MapReport {
  bool points_bijective = false;
  bool lines_bijective = false;
  std::size_t flags_checked = 0;
  std::size_t source_flags = 0;
  std::size_t target_flags = 0;
  bool ok = false;
  std::optional<std::pair<int, int>> counterexample;
  std::string message;
};

/// Line map from the point map: a source line goes to the target line whose
/// point set is the image of its point set, or -1.
std::vector<int> induce_line_map(const IncidenceStructure& source, const IncidenceStructure& target,
                                 const std::vector<int>& point_map);
/// Exhaustive check; updates m.status / counterexample / message.
MapReport verify_map(GeometryMap& m);
/// Point map then verify.
GeometryMap make_map(std::shared_ptr<const IncidenceStructure> source, std::shared_ptr<const IncidenceStructure> target,
                     std::vector<int> point_map);
/// second ∘ first (first.target must be second.source), verified.
GeometryMap compose(const GeometryMap& first, const GeometryMap& second);

struct XCosetMap {
  std::shared_ptr<const XGeometry> x;
  std::shared_ptr<const CosetGeometry> coset;
  GeometryMap map;
};
/// Points of X map by coordinatize_point.
XCosetMap x_to_coset(const XSpec& spec, std::uint64_t budget = kDefaultBudget);

struct CosetLinrepMap {
  std::shared_ptr<const CosetGeometry> coset;
  PointSet subgeometry;  // the target's K, inside X_{n+1} = 0
  GeometryMap map;
  /// Infinity points of the images of coset lines.
  std::set<ProjPoint> infinity_image;
  bool infinity_is_subgeometry = false;
};
/// A -> (row_to_ext(row_0), ..., row_to_ext(row_n), 1).
CosetLinrepMap coset_to_linrep(std::size_t n, const CompanionAlgebra& alg, std::uint64_t budget = kDefaultBudget);

/// X(n,t,q) -> T*_n(PG(n,q)) through the coset model.
GeometryMap x_to_linrep(const XSpec& spec, const CompanionAlgebra& alg, std::uint64_t budget = kDefaultBudget);

struct SpreadElement {
  ProjPoint source_point;  // in PG(n, q^t)
  Subspace subspace;       // (t-1)-space of PG(t(n+1)-1, q)
};

/// Row-major expansion of a vector over F_{q^t} in the power basis.
Vec expand_vector(const CompanionAlgebra& alg, std::span<const Fe> x);
SpreadElement field_reduce(const ProjPoint& p, const CompanionAlgebra& alg);
/// Rank of the (n+1) x t reshape is 1; throws std::invalid_argument when
/// the length is not (n+1) t.
bool segre_membership(const Field& fq, const ProjPoint& p, std::size_t n, std::size_t t);

struct SpreadReport {
  std::size_t elements = 0;
  std::size_t ambient_points = 0;
  std::size_t covered = 0;  // points lying in some element (with multiplicity)
  bool partition = false;
  std::size_t subgeometry_covered = 0;  // distinct points of the union over S
  std::size_t segre_points = 0;         // rank-one points of the ambient space
  bool union_is_segre = false;
  BigInt expected_segre;  // (q^{n+1}-1)(q^t-1)/(q-1)^2
};
/// Exhaustive spread and Segre checks for 𝓕 over all of PG(n, q^t).
SpreadReport spread_report(std::size_t n, const CompanionAlgebra& alg, std::uint64_t budget = kDefaultBudget);

struct BarlottiCofmanMap {
  GeometryMap map;  // T*_n(K) -> build_gen_linrep(𝓕(K))
  /// Structure assembled from the geometric images of points and lines.
  std::shared_ptr<const IncidenceStructure> image;
  bool identical = false;  // same_structure(image, map.target)
};
/// K must be given over alg.ext() inside X_{n+1} = 0 of PG(n+1, q^t).
BarlottiCofmanMap barlotti_cofman(const LinRepSpec& spec, const CompanionAlgebra& alg,
                                  std::uint64_t budget = kDefaultBudget);
/// 𝓕(k) for a point of X_{n+1} = 0, placed in X_{t(n+1)} = 0 of PG(t(n+1), q).
Subspace reduce_at_infinity(const ProjPoint& k, const CompanionAlgebra& alg);

nlohmann::json map_json(const GeometryMap& m);
const char* status_name(MapStatus s);

}  // namespace fgeom
