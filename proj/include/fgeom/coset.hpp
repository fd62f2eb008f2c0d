// The coset geometry on (n+1) x t matrices over F_q: lines are the cosets of
// the rank-one subgroups L_b = {b^T a : a in F_q^t}.  Also the group of
// quadruples (A, B, C, l) acting by P -> (B P C + A)^(p^l).
#pragma once

#include <functional>
#include <random>
#include <vector>

#include "fgeom/incidence.hpp"
#include "fgeom/matrixpoint.hpp"
#include "fgeom/projgeom.hpp"

namespace fgeom {

struct LineCoset {
  ProjPoint direction;  // b, normalized, in PG(n,q)
  MatrixPoint rep;      // least element of the coset
};

struct CosetGeometry {
  std::size_t n = 1;
  std::size_t t = 2;
  FieldPtr field;
  IncidenceStructure geometry;
  std::vector<MatrixPoint> points;  // index = matrix_index
  std::vector<LineCoset> lines;
};

/// Points in row-major lexicographic order; lines grouped by direction (in
/// PG(n,q) enumeration order) and then by representative.
CosetGeometry build_coset_geometry(std::size_t n, std::size_t t, FieldPtr f, std::uint64_t budget = kDefaultBudget);

/// b^T a.
Matrix rank_one(const Field& f, std::span<const Fe> b, std::span<const Fe> a);
/// All q^t members of rep + L_b, sorted.
std::vector<MatrixPoint> coset_members(const Field& f, const ProjPoint& b, const MatrixPoint& rep);
/// P != Q and rank(P - Q) == 1.
bool cayley_adjacency(const Field& f, const MatrixPoint& p, const MatrixPoint& q);
/// Cayley graph on all matrices (vertex = matrix_index).
Graph cayley_graph(std::size_t n, std::size_t t, const Field& f);

struct AutElement {
  Matrix a;  // (n+1) x t
  Matrix b;  // invertible (n+1) x (n+1)
  Matrix c;  // invertible t x t
  unsigned l = 0;

  friend bool operator==(const AutElement&, const AutElement&) = default;
};

AutElement aut_identity(const Field& f, std::size_t n, std::size_t t);
/// Checks shapes, invertibility, and reduces l modulo h.
AutElement make_aut(const Field& f, Matrix a, Matrix b, Matrix c, long l);

/// g2 ∘ g1 = (B2' A1 C2' + A2', B2' B1, C1 C2', l1 + l2), where X' is X with
/// the Frobenius p^{-l1} applied entrywise.  act(g2 ∘ g1) = act(g2) act(g1).
AutElement group_op(const Field& f, const AutElement& g2, const AutElement& g1);
/// (-(B^-1 A C^-1)^s, (B^-1)^s, (C^-1)^s, -l) with s = p^l.
AutElement group_inverse(const Field& f, const AutElement& g);
/// (B P C + A)^(p^l).
MatrixPoint act(const Field& f, const AutElement& g, const MatrixPoint& p);

/// {(0, λI, λ^{-1}I, 0) : λ in F_q*}.
std::vector<AutElement> kernel_elements(std::size_t n, std::size_t t, const Field& f);
/// q^{(n+1)t} |GL(n+1,q)| |GL(t,q)| h / (q-1).
BigInt aut_group_quotient_order(std::size_t n, std::size_t t, unsigned q);
/// Uniformly random element (rejection sampling for B and C).
AutElement random_aut(const Field& f, std::size_t n, std::size_t t, std::mt19937_64& rng);
/// Visits every element of the group in a fixed order; throws
/// BudgetExceeded when the group has more than `budget` elements.
void for_each_aut(const Field& f, std::size_t n, std::size_t t, std::uint64_t budget,
                  const std::function<void(const AutElement&)>& fn);

/// Direction of the image of a coset of L_b: (b B^T)^(p^l), normalized.
ProjPoint image_direction(const Field& f, const AutElement& g, const ProjPoint& b);

/// Counts the rank-one subgroups (line directions) exhaustively and sets
/// them against the closed forms (q^{n+1}-1)/(q-1) and (q^n-1)/(q-1).
struct DirectionCountReport {
  std::size_t n = 0, t = 0;
  unsigned q = 0;
  std::size_t counted = 0;              // distinct subgroups L_b found by enumeration
  BigInt projective_points;             // (q^{n+1}-1)/(q-1)
  BigInt one_dimension_lower;           // (q^n-1)/(q-1)
  bool projective_points_consistent = false;
  bool one_dimension_lower_consistent = false;
};
DirectionCountReport direction_count_report(std::size_t n, std::size_t t, FieldPtr f);

nlohmann::json aut_json(const Field& f, const AutElement& g);
AutElement aut_from_json(const Field& f, const nlohmann::json& j);
nlohmann::json direction_report_json(const DirectionCountReport& r);

}  // namespace fgeom
