// Exact arithmetic in small finite fields.
//
// A Field is either a prime field F_p or an extension B[x]/(f) of another
// Field B by a monic irreducible polynomial f.  Elements are plain indices
// (Fe) that encode the power-basis coefficient vector: for an extension of
// degree d over B, index = c_0 + c_1 |B| + ... + c_{d-1} |B|^{d-1} where c_i
// is the index of the i-th coefficient in B.  Flattened, this is the base-p
// digit expansion over the prime field, lowest degree first.
//
// All arithmetic goes through addition/multiplication tables computed once
// at construction from polynomial arithmetic; Field objects are immutable
// and shared by std::shared_ptr.
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgeom {

/// Raised when an enumeration or search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field element handle; only meaningful together with its Field.
struct Fe {
  std::uint16_t v = 0;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Largest field order accepted (tables are order^2 entries).
  static constexpr unsigned kMaxOrder = 1024;

  static FieldPtr prime(unsigned p);
  /// B[x]/(modulus); modulus is given low degree first and must be monic
  /// and irreducible over B (checked exhaustively).
  static FieldPtr extension(FieldPtr base, std::vector<Fe> modulus);
  /// F_{p^h} over F_p with the built-in canonical modulus.
  static FieldPtr galois(unsigned p, unsigned h);
  /// F_q for a prime power q, canonical modulus.
  static FieldPtr of_order(unsigned q);

  unsigned order() const { return order_; }
  unsigned characteristic() const { return p_; }
  /// Degree over the prime field (h with order = p^h).
  unsigned prime_degree() const { return h_; }
  /// Degree over the immediate base (1 for a prime field).
  unsigned degree() const { return degree_; }
  const FieldPtr& base() const { return base_; }
  bool is_prime() const { return base_ == nullptr; }
  /// Modulus over the immediate base, low degree first (empty for prime).
  const std::vector<Fe>& modulus() const { return modulus_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  Fe element(unsigned index) const;

  Fe add(Fe a, Fe b) const { return Fe{add_[a.v * order_ + b.v]}; }
  Fe neg(Fe a) const { return Fe{neg_[a.v]}; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const { return Fe{mul_[a.v * order_ + b.v]}; }
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t e) const;
  /// a^(p^l); l is reduced modulo prime_degree(), negative l allowed.
  Fe frobenius(Fe a, long l) const;

  /// Coefficients over the immediate base, length degree().
  std::vector<Fe> coeffs(Fe a) const;
  Fe from_coeffs(std::span<const Fe> c) const;
  /// Base-p digits over the prime field, length prime_degree().
  std::vector<unsigned> prime_digits(Fe a) const;
  /// Image of a base-field element (constant polynomial).
  Fe embed(Fe base_element) const;
  /// Residue class of x (the adjoined root); for prime fields this is 1.
  Fe generator() const { return degree_ == 1 ? one() : Fe{static_cast<std::uint16_t>(base_order())}; }

  /// True when x^{sub_order} = x, i.e. a lies in the subfield of that order.
  bool in_subfield(Fe a, unsigned sub_order) const;
  bool has_subfield(unsigned sub_order) const;

  /// Structural identity: same order, same tower and moduli.
  bool same_as(const Field& other) const;

  /// Human readable form, e.g. "x+1" or "2".
  std::string format(Fe a) const;
  /// Field specification in the "p^h/f" grammar.
  std::string spec() const;

 private:
  Field() = default;
  unsigned base_order() const { return base_ ? base_->order() : order_; }
  void build_tables();

  FieldPtr base_;
  std::vector<Fe> modulus_;
  unsigned p_ = 0;
  unsigned h_ = 0;
  unsigned degree_ = 1;
  unsigned order_ = 0;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

/// Element with a checked owning context, for the public arithmetic surface.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Fe value) : field_(std::move(field)), value_(value) {}
  FieldElement(FieldPtr field, unsigned index) : FieldElement(field, field->element(index)) {}

  const FieldPtr& field() const { return field_; }
  Fe value() const { return value_; }
  std::vector<unsigned> coeffs() const { return field_->prime_digits(value_); }
  bool is_zero() const { return value_.v == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
  }

 private:
  FieldPtr field_;
  Fe value_;
};

enum class ArithOp { add, sub, mul, div };

/// Throws std::invalid_argument on mismatched contexts and
/// std::domain_error on division by zero.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);
FieldElement frobenius(const FieldElement& a, long l);

// ---------------------------------------------------------------------------
// Polynomials over a Field, low degree first, no trailing zeros (zero
// polynomial is the empty vector).

using Poly = std::vector<Fe>;

void poly_trim(Poly& a);
Poly poly_mod(const Field& f, Poly a, const Poly& m);
bool is_irreducible(const Field& f, const Poly& monic);
/// Least monic irreducible polynomial of the given degree, ordered by the
/// encoded coefficient value sum c_i |F|^i.
Poly least_irreducible(const Field& f, unsigned degree);
/// Built-in canonical modulus for F_{p^h} over F_p (p^h <= 81); empty when
/// h == 1.  Coefficients are residues, low degree first, monic.
std::vector<unsigned> canonical_modulus(unsigned p, unsigned h);

/// Parse "p", "p^h" or "p^h/poly" (poly e.g. "x2+x+1", "x^3+2x+1").
FieldPtr parse_field_spec(std::string_view spec);

/// Factor q = p^h; throws std::invalid_argument unless q is a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned long long q);

}  // namespace fgeom
