#include "fgeom/companion.hpp"

#include <stdexcept>

namespace fgeom {

CompanionAlgebra::CompanionAlgebra(FieldPtr base, std::vector<Fe> f_coeffs)
    : base_(std::move(base)), t_(f_coeffs.size()), f_(std::move(f_coeffs)) {
  if (!base_) throw std::invalid_argument("build_companion: null base field");
  if (t_ == 0) throw std::invalid_argument("build_companion: degree must be >= 1");
  const Field& F = *base_;
  Poly f = f_;
  f.push_back(F.one());
  if (!is_irreducible(F, f)) throw std::invalid_argument("build_companion: f is reducible over the base field");
  ext_ = Field::extension(base_, f);

  m_ = Matrix(t_, t_);
  for (std::size_t i = 0; i + 1 < t_; ++i) m_.at(i, i + 1) = F.one();
  for (std::size_t j = 0; j < t_; ++j) m_.at(t_ - 1, j) = F.neg(f_[j]);

  // Rows are coordinates in (1, a, .., a^{t-1}); r*M must be the
  // coordinates of a * row_to_ext(r) for every r.
  const Fe alpha = t_ == 1 ? F.neg(f_[0]) : ext_->generator();
  const unsigned q = F.order();
  unsigned long long count = 1;
  for (std::size_t i = 0; i < t_; ++i) count *= q;
  Vec r(t_);
  for (unsigned long long v = 0; v < count; ++v) {
    unsigned long long x = v;
    for (std::size_t i = 0; i < t_; ++i) {
      r[i] = Fe{static_cast<std::uint16_t>(x % q)};
      x /= q;
    }
    if (row_to_ext(vec_mat(F, r, m_)) != ext_->mul(row_to_ext(r), alpha))
      throw std::logic_error("build_companion: companion layout does not realize multiplication by the root");
  }
}

Matrix CompanionAlgebra::element_matrix(std::span<const Fe> coeffs) const {
  if (coeffs.size() != t_) throw std::invalid_argument("element_matrix: expected t coefficients");
  const Field& F = *base_;
  Matrix acc(t_, t_);
  Matrix power = Matrix::identity(F, t_);
  for (std::size_t i = 0; i < t_; ++i) {
    acc = mat_add(F, acc, mat_scale(F, coeffs[i], power));
    power = mat_mul(F, power, m_);
  }
  return acc;
}

std::vector<Matrix> CompanionAlgebra::elements() const {
  const unsigned q = base_->order();
  unsigned long long count = 1;
  for (std::size_t i = 0; i < t_; ++i) count *= q;
  std::vector<Matrix> out;
  out.reserve(count);
  Vec c(t_);
  for (unsigned long long v = 0; v < count; ++v) {
    unsigned long long x = v;
    for (std::size_t i = 0; i < t_; ++i) {
      c[i] = Fe{static_cast<std::uint16_t>(x % q)};
      x /= q;
    }
    out.push_back(element_matrix(c));
  }
  return out;
}

Matrix CompanionAlgebra::evaluate_f() const {
  const Field& F = *base_;
  Matrix acc(t_, t_);
  Matrix power = Matrix::identity(F, t_);
  for (std::size_t i = 0; i < t_; ++i) {
    acc = mat_add(F, acc, mat_scale(F, f_[i], power));
    power = mat_mul(F, power, m_);
  }
  return mat_add(F, acc, power);
}

Fe CompanionAlgebra::row_to_ext(std::span<const Fe> row) const {
  if (row.size() != t_) throw std::invalid_argument("row_to_ext: row length must equal t");
  if (t_ == 1) return row[0];
  return ext_->from_coeffs(row);
}

Vec CompanionAlgebra::ext_to_row(Fe e) const {
  if (t_ == 1) return {e};
  return ext_->coeffs(e);
}

CompanionAlgebra build_companion(FieldPtr base, std::vector<Fe> f_coeffs) {
  return CompanionAlgebra(std::move(base), std::move(f_coeffs));
}

CompanionAlgebra default_companion(FieldPtr base, std::size_t t) {
  Poly f;
  if (base->is_prime() && t > 1) {
    auto c = canonical_modulus(base->characteristic(), static_cast<unsigned>(t));
    for (unsigned v : c) f.push_back(base->element(v));
  }
  if (f.empty()) f = least_irreducible(*base, static_cast<unsigned>(t));
  f.pop_back();
  return CompanionAlgebra(std::move(base), std::move(f));
}

}  // namespace fgeom
