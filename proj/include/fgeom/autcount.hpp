// Group orders for the stabilizer of pi and its competitors, and brute-force
// automorphism counts of incidence structures.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fgeom/incidence.hpp"
#include "fgeom/isomaps.hpp"
#include "fgeom/projgeom.hpp"
#include "fgeom/search.hpp"

namespace fgeom {

using BigRational = boost::multiprecision::cpp_rational;

/// |PGL(m,q)| = |GL(m,q)| / (q-1); m >= 1, q a prime power.
BigInt order_pgl(long m, unsigned q);
/// |PGL(m,q)| h for q = p^h.
BigInt order_pgammal(long m, unsigned q);
/// q^m (q-1): collineations fixing a hyperplane of PG(m,q) pointwise.
BigInt persp_order(long m, unsigned q);

/// q^{t(n+1)} q^{t(t-1)/2} (q^t-1)...(q-1) |PΓL(n+1,q)|.
BigInt order_stab_pi(long n, long t, unsigned q);
/// |PΓL(n+t+1,q)| / [n+t+1 choose n+1]_q.
BigInt order_stab_pi_by_index(long n, long t, unsigned q);
/// q^{t(n+1)} (q-1) q^{t(t-1)/2} (q^t-1)...(q^2-1) |PΓL(n+1,q)|.
BigInt order_stab_segre(long n, long t, unsigned q);
/// |Persp| |PGL(n+1,q)| |PGL(t,q)| h with |Persp| = q^{t(n+1)} (q-1).
BigInt order_stab_segre_by_components(long n, long t, unsigned q);
/// q^{t(n+1)} (q^t-1) t |PΓL(n+1,q)|.
BigInt geometric_order(long n, long t, unsigned q);
/// (1/t) q^{t(t-1)/2} (q^{t-1}-1)...(q-1).  Throws std::logic_error unless
/// it is an integer equal to order_stab_pi / geometric_order.
BigRational ratio(long n, long t, unsigned q);

struct GroupOrderReport {
  long n = 0, t = 0;
  unsigned q = 0, h = 0;
  BigInt full_order;  // order_stab_pi
  BigInt full_order_by_index;
  BigInt segre_stab_order;
  BigInt segre_stab_by_components;
  BigInt persp_order;
  BigInt geometric_order;
  BigRational ratio;
  /// All identities between the routes hold.
  bool consistent = false;
};
GroupOrderReport group_order_report(long n, long t, unsigned q);
nlohmann::json group_order_json(const GroupOrderReport& r);

struct AutomorphismReport {
  BigInt order;
  /// Generators split into point and line permutations, sorted.
  std::vector<std::pair<Permutation, Permutation>> generators;
  std::uint64_t nodes = 0;
};
/// Automorphisms of the incidence graph fixing the point and line classes.
/// Throws BudgetExceeded when points + lines exceed `vertex_budget` or the
/// search exceeds `node_budget` nodes.
AutomorphismReport brute_force_automorphisms(const IncidenceStructure& g, std::size_t vertex_budget = 400,
                                             std::uint64_t node_budget = 10'000'000);
nlohmann::json automorphism_json(const AutomorphismReport& r);

/// Every isomorphism g1 -> g2 as a verified map; empty iff none.
std::vector<GeometryMap> enumerate_isomorphisms(std::shared_ptr<const IncidenceStructure> g1,
                                                std::shared_ptr<const IncidenceStructure> g2,
                                                std::size_t vertex_budget = 400, std::uint64_t node_budget = 10'000'000,
                                                std::uint64_t max_results = 1'000'000);

struct SrgResult {
  bool regular = false;
  bool strongly_regular = false;
  /// Complete or edgeless: mu (or lambda) is vacuous.
  bool degenerate = false;
  std::size_t v = 0, k = 0;
  long lambda = -1, mu = -1;
  /// Two vertices whose degrees or common-neighbour counts break the pattern.
  std::optional<std::pair<int, int>> witness;
  std::string message;
};
SrgResult srg_check(const Graph& g);
nlohmann::json srg_json(const SrgResult& r);

}  // namespace fgeom
