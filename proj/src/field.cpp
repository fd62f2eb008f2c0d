#include "fgeom/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace fgeom {

namespace {

bool is_prime_number(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  poly_trim(r);
  return r;
}

}  // namespace

std::pair<unsigned, unsigned> prime_power(unsigned long long q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  unsigned long long p = 2;
  while (q % p != 0) ++p;
  unsigned h = 0;
  unsigned long long r = q;
  while (r % p == 0) {
    r /= p;
    ++h;
  }
  if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {static_cast<unsigned>(p), h};
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::prime(unsigned p) {
  if (!is_prime_number(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (p > kMaxOrder) throw std::invalid_argument("field order too large");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->h_ = 1;
  f->degree_ = 1;
  f->order_ = p;
  f->build_tables();
  return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Fe> modulus) {
  if (!base) throw std::invalid_argument("extension: null base field");
  poly_trim(modulus);
  if (modulus.size() < 2) throw std::invalid_argument("extension: modulus must have degree >= 1");
  if (modulus.back() != base->one()) throw std::invalid_argument("extension: modulus must be monic");
  const unsigned d = static_cast<unsigned>(modulus.size() - 1);
  unsigned long long order = 1;
  for (unsigned i = 0; i < d; ++i) {
    order *= base->order();
    if (order > kMaxOrder) throw std::invalid_argument("extension: field order too large");
  }
  if (!is_irreducible(*base, modulus)) throw std::invalid_argument("extension: modulus is reducible");
  if (d == 1) return base;
  auto f = std::shared_ptr<Field>(new Field());
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->p_ = f->base_->p_;
  f->h_ = f->base_->h_ * d;
  f->degree_ = d;
  f->order_ = static_cast<unsigned>(order);
  f->build_tables();
  return f;
}

FieldPtr Field::galois(unsigned p, unsigned h) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, h}); it != cache.end()) return it->second;
  if (h == 0) throw std::invalid_argument("galois: h must be >= 1");
  FieldPtr base = prime(p);
  FieldPtr result = base;
  if (h > 1) {
    std::vector<unsigned> c = canonical_modulus(p, h);
    Poly m;
    if (c.empty()) {
      m = least_irreducible(*base, h);
    } else {
      for (unsigned v : c) m.push_back(base->element(v));
    }
    result = extension(base, m);
  }
  cache[{p, h}] = result;
  return result;
}

FieldPtr Field::of_order(unsigned q) {
  auto [p, h] = prime_power(q);
  return galois(p, h);
}

void Field::build_tables() {
  const unsigned n = order_;
  add_.assign(n * n, 0);
  mul_.assign(n * n, 0);
  neg_.assign(n, 0);
  inv_.assign(n, 0);
  if (is_prime()) {
    for (unsigned a = 0; a < n; ++a) {
      neg_[a] = static_cast<std::uint16_t>((n - a) % n);
      for (unsigned b = 0; b < n; ++b) {
        add_[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
        mul_[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
      }
    }
  } else {
    const Field& B = *base_;
    std::vector<Poly> polys(n);
    for (unsigned a = 0; a < n; ++a) {
      Poly c = coeffs(Fe{static_cast<std::uint16_t>(a)});
      Poly nc(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) nc[i] = B.neg(c[i]);
      neg_[a] = from_coeffs(nc).v;
      poly_trim(c);
      polys[a] = std::move(c);
    }
    for (unsigned a = 0; a < n; ++a) {
      Poly ca = coeffs(Fe{static_cast<std::uint16_t>(a)});
      for (unsigned b = 0; b < n; ++b) {
        Poly cb = coeffs(Fe{static_cast<std::uint16_t>(b)});
        Poly s(degree_);
        for (unsigned i = 0; i < degree_; ++i) s[i] = B.add(ca[i], cb[i]);
        add_[a * n + b] = from_coeffs(s).v;
        Poly prod = poly_mod(B, poly_mul(B, polys[a], polys[b]), modulus_);
        prod.resize(degree_, B.zero());
        mul_[a * n + b] = from_coeffs(prod).v;
      }
    }
  }
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = 1; b < n; ++b)
      if (mul_[a * n + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
}

Fe Field::element(unsigned index) const {
  if (index >= order_) throw std::out_of_range("field element index out of range");
  return Fe{static_cast<std::uint16_t>(index)};
}

Fe Field::inv(Fe a) const {
  if (a.v == 0) throw std::domain_error("division by zero in finite field");
  return Fe{inv_[a.v]};
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  Fe r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fe Field::frobenius(Fe a, long l) const {
  long k = l % static_cast<long>(h_);
  if (k < 0) k += h_;
  for (long i = 0; i < k; ++i) a = pow(a, p_);
  return a;
}

std::vector<Fe> Field::coeffs(Fe a) const {
  if (is_prime()) return {a};
  const unsigned b = base_->order();
  std::vector<Fe> c(degree_);
  unsigned v = a.v;
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = Fe{static_cast<std::uint16_t>(v % b)};
    v /= b;
  }
  return c;
}

Fe Field::from_coeffs(std::span<const Fe> c) const {
  if (c.size() != degree_) throw std::invalid_argument("from_coeffs: expected " + std::to_string(degree_) + " coefficients");
  if (is_prime()) return c[0];
  const unsigned b = base_->order();
  unsigned v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * b + c[i].v;
  return Fe{static_cast<std::uint16_t>(v)};
}

std::vector<unsigned> Field::prime_digits(Fe a) const {
  std::vector<unsigned> d(h_);
  unsigned v = a.v;
  for (unsigned i = 0; i < h_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Fe Field::embed(Fe base_element) const {
  if (is_prime()) return base_element;
  if (base_element.v >= base_->order()) throw std::invalid_argument("embed: not a base field element");
  return Fe{base_element.v};
}

bool Field::in_subfield(Fe a, unsigned sub_order) const { return pow(a, sub_order) == a; }

bool Field::has_subfield(unsigned sub_order) const {
  unsigned long long s = 1;
  for (unsigned k = 1; k <= h_; ++k) {
    s *= p_;
    if (s == sub_order) return h_ % k == 0;
  }
  return false;
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  if (order_ != other.order_ || p_ != other.p_ || degree_ != other.degree_) return false;
  if (is_prime() != other.is_prime()) return false;
  if (is_prime()) return true;
  return modulus_ == other.modulus_ && base_->same_as(*other.base_);
}

std::string Field::format(Fe a) const {
  if (is_prime()) return std::to_string(a.v);
  auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].v == 0) continue;
    if (!first) os << '+';
    first = false;
    std::string coef = base_->format(c[i]);
    const bool compound = !base_->is_prime();
    if (i == 0) {
      os << (compound ? "(" + coef + ")" : coef);
    } else {
      if (c[i] != base_->one()) os << (compound ? "(" + coef + ")" : coef);
      os << 'x';
      if (i > 1) os << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::string Field::spec() const {
  if (is_prime()) return std::to_string(p_);
  std::ostringstream os;
  if (base_->is_prime())
    os << p_ << '^' << h_ << '/';
  else
    os << '(' << base_->spec() << ")^" << degree_ << '/';
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i].v == 0) continue;
    if (!first) os << '+';
    first = false;
    std::string coef = base_->format(modulus_[i]);
    if (i == 0) {
      os << coef;
    } else {
      if (modulus_[i] != base_->one()) os << coef;
      os << 'x';
      if (i > 1) os << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldElement surface

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  if (!a.field()->same_as(*b.field())) throw std::invalid_argument("field_arith: mismatched field contexts");
  const Field& f = *a.field();
  switch (op) {
    case ArithOp::add: return {a.field(), f.add(a.value(), b.value())};
    case ArithOp::sub: return {a.field(), f.sub(a.value(), b.value())};
    case ArithOp::mul: return {a.field(), f.mul(a.value(), b.value())};
    case ArithOp::div: return {a.field(), f.div(a.value(), b.value())};
  }
  throw std::invalid_argument("field_arith: unknown op");
}

FieldElement frobenius(const FieldElement& a, long l) { return {a.field(), a.field()->frobenius(a.value(), l)}; }

// ---------------------------------------------------------------------------
// Polynomials

void poly_trim(Poly& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

Poly poly_mod(const Field& f, Poly a, const Poly& m) {
  poly_trim(a);
  if (m.empty()) throw std::domain_error("poly_mod: zero modulus");
  const Fe lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    const Fe c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    poly_trim(a);
  }
  return a;
}

bool is_irreducible(const Field& f, const Poly& monic) {
  Poly m = monic;
  poly_trim(m);
  if (m.size() < 2) return false;
  const std::size_t d = m.size() - 1;
  if (d == 1) return true;
  const unsigned q = f.order();
  // Every reducible polynomial has a monic factor of degree <= d/2.
  for (std::size_t k = 1; k <= d / 2; ++k) {
    unsigned long long count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= q;
    for (unsigned long long v = 0; v < count; ++v) {
      Poly g(k + 1);
      unsigned long long r = v;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = Fe{static_cast<std::uint16_t>(r % q)};
        r /= q;
      }
      g[k] = f.one();
      if (poly_mod(f, m, g).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(const Field& f, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("least_irreducible: degree must be >= 1");
  const unsigned q = f.order();
  unsigned long long count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= q;
  for (unsigned long long v = 0; v < count; ++v) {
    Poly g(degree + 1);
    unsigned long long r = v;
    for (unsigned i = 0; i < degree; ++i) {
      g[i] = Fe{static_cast<std::uint16_t>(r % q)};
      r /= q;
    }
    g[degree] = f.one();
    if (is_irreducible(f, g)) return g;
  }
  throw std::logic_error("least_irreducible: none found");
}

std::vector<unsigned> canonical_modulus(unsigned p, unsigned h) {
  // Least monic irreducible by encoded value sum c_i p^i.
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
      {{2, 2}, {1, 1, 1}},          {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},          {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 1, 0, 0, 1}},
      {{5, 2}, {2, 0, 1}},          {{7, 2}, {1, 0, 1}},
  };
  if (h <= 1) return {};
  if (auto it = table.find({p, h}); it != table.end()) return it->second;
  return {};
}

// ---------------------------------------------------------------------------
// Spec strings

namespace {

unsigned parse_uint(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw std::invalid_argument("field spec: expected number at position " + std::to_string(pos));
  unsigned v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<unsigned>(s[pos] - '0');
    if (v > 1000000) throw std::invalid_argument("field spec: number too large");
    ++pos;
  }
  return v;
}

}  // namespace

FieldPtr parse_field_spec(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  std::size_t pos = 0;
  const unsigned p = parse_uint(s, pos);
  unsigned h = 1;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    h = parse_uint(s, pos);
  }
  if (pos == s.size()) {
    if (!is_prime_number(p)) {
      // Allow a bare prime power such as "4".
      if (h == 1) return Field::of_order(p);
      throw std::invalid_argument("field spec: base must be prime");
    }
    return Field::galois(p, h);
  }
  if (!is_prime_number(p)) throw std::invalid_argument("field spec: base must be prime");
  if (s[pos] != '/') throw std::invalid_argument("field spec: expected '/' before polynomial");
  ++pos;
  std::vector<unsigned> coef(h + 1, 0);
  bool any = false;
  while (pos < s.size()) {
    unsigned c = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      c = parse_uint(s, pos);
      has_coef = true;
    }
    unsigned e = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      e = 1;
      if (pos < s.size() && s[pos] == '^') ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) e = parse_uint(s, pos);
    } else if (!has_coef) {
      throw std::invalid_argument("field spec: malformed polynomial term");
    }
    if (e > h) throw std::invalid_argument("field spec: polynomial degree exceeds h");
    coef[e] = (coef[e] + c) % p;
    any = true;
    if (pos < s.size()) {
      if (s[pos] != '+') throw std::invalid_argument("field spec: expected '+' between terms");
      ++pos;
    }
  }
  if (!any || coef[h] != 1) throw std::invalid_argument("field spec: polynomial must be monic of degree h");
  FieldPtr base = Field::prime(p);
  Poly m;
  for (unsigned v : coef) m.push_back(base->element(v));
  return Field::extension(base, m);
}

}  // namespace fgeom
