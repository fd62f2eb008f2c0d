// The matrix model H of F_{q^t}: polynomials in the companion matrix of a
// monic irreducible f of degree t over F_q.
#pragma once

#include <span>
#include <vector>

#include "fgeom/field.hpp"
#include "fgeom/linalg.hpp"

namespace fgeom {

class CompanionAlgebra {
 public:
  /// f_coeffs = m_0 .. m_{t-1} of f(x) = m_0 + ... + m_{t-1} x^{t-1} + x^t.
  /// Throws std::invalid_argument when f is reducible or t == 0, and
  /// std::logic_error if right multiplication by M fails to realize
  /// multiplication by the root of f (self-test).
  CompanionAlgebra(FieldPtr base, std::vector<Fe> f_coeffs);

  const FieldPtr& base() const { return base_; }
  /// F_{q^t} = F_q[x]/(f), whose power basis (1, a, ..., a^{t-1}) is the
  /// coordinate system for rows.
  const FieldPtr& ext() const { return ext_; }
  std::size_t degree() const { return t_; }
  const std::vector<Fe>& f_coeffs() const { return f_; }
  /// t x t companion matrix [[0, I_{t-1}], [-m_0, -m_1 .. -m_{t-1}]].
  const Matrix& companion() const { return m_; }

  /// a_0 I + a_1 M + ... + a_{t-1} M^{t-1}.
  Matrix element_matrix(std::span<const Fe> coeffs) const;
  /// All q^t elements of H in coefficient index order.
  std::vector<Matrix> elements() const;
  /// f evaluated at M.
  Matrix evaluate_f() const;

  /// Row (a_0..a_{t-1}) -> a_0 + a_1 x + ... in ext(); throws on length mismatch.
  Fe row_to_ext(std::span<const Fe> row) const;
  Vec ext_to_row(Fe e) const;

 private:
  FieldPtr base_;
  FieldPtr ext_;
  std::size_t t_;
  std::vector<Fe> f_;
  Matrix m_;
};

CompanionAlgebra build_companion(FieldPtr base, std::vector<Fe> f_coeffs);
/// Companion algebra for the canonical (least) irreducible of degree t.
CompanionAlgebra default_companion(FieldPtr base, std::size_t t);

}  // namespace fgeom
