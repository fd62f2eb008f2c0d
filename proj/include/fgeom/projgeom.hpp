// Points and subspaces of PG(m, F) with canonical forms and exhaustive
// enumeration.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include "fgeom/field.hpp"
#include "fgeom/linalg.hpp"

namespace fgeom {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on the number of objects a single enumeration may produce.
inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

/// Projective point; the first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  /// Normalizes; throws std::invalid_argument for the zero vector.
  ProjPoint(const Field& f, Vec coords);

  const Vec& coords() const { return coords_; }
  std::size_t ambient_dim() const { return coords_.size() - 1; }

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Vec coords_;
};

/// Subspace of PG(m, F), stored as its reduced row echelon basis.  The
/// empty subspace has rank 0 and dimension -1.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, std::size_t ambient_dim, const Matrix& generators);
  static Subspace of_point(const Field& f, const ProjPoint& p);
  static Subspace whole(const Field& f, std::size_t ambient_dim);

  const Matrix& basis() const { return basis_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  int dim() const { return static_cast<int>(basis_.rows()) - 1; }
  bool is_empty() const { return basis_.rows() == 0; }

  bool contains(const Field& f, const ProjPoint& p) const;
  bool contains(const Field& f, const Subspace& s) const;
  /// All points, sorted.
  std::vector<ProjPoint> points(const Field& f) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// All points of PG(m, f), lexicographic on coordinates (elements ordered
/// by their encoded index).
std::vector<ProjPoint> enumerate_points(const Field& f, std::size_t m, std::uint64_t budget = kDefaultBudget);
/// All subspaces of projective dimension k in PG(m, f), sorted.
std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t m, int k, std::uint64_t budget = kDefaultBudget);

Subspace span(const Field& f, std::span<const ProjPoint> points);
Subspace span(const Field& f, std::span<const Subspace> spaces);
Subspace span(const Field& f, const Subspace& s, const ProjPoint& p);
Subspace span(const Field& f, const Subspace& a, const Subspace& b);
/// Exact intersection; std::nullopt when the intersection is empty.
std::optional<Subspace> intersect(const Field& f, const Subspace& a, const Subspace& b);

/// Number of k-dimensional vector subspaces of F_q^m; throws
/// std::invalid_argument unless 0 <= k <= m.
BigInt gaussian_binomial(long m, long k, const BigInt& q);
/// |GL(m,q)| = prod_{i<m} (q^m - q^i).
BigInt order_gl(long m, const BigInt& q);

/// True iff every (m+1)-subset of the m+2 points spans PG(m);
/// throws std::invalid_argument on a wrong point count.
bool is_frame(const Field& f, std::span<const ProjPoint> points, std::size_t m);
std::vector<ProjPoint> standard_frame(const Field& f, std::size_t m);

/// Points whose coordinates relative to `frame` can be scaled into the
/// subfield of order sub_order.
std::set<ProjPoint> subgeometry_points(const Field& f, std::size_t m, unsigned sub_order,
                                       std::span<const ProjPoint> frame);

// JSON: field elements as arrays of base-p digits (lowest degree first).
nlohmann::json element_json(const Field& f, Fe a);
nlohmann::json field_json(const Field& f);
nlohmann::json points_json(const Field& f, std::size_t m, std::span<const ProjPoint> points);
nlohmann::json subspace_json(const Field& f, const Subspace& s);
Fe element_from_json(const Field& f, const nlohmann::json& j);

}  // namespace fgeom
