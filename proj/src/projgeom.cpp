#include "fgeom/projgeom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fgeom {

namespace {

void check_budget(const BigInt& count, std::uint64_t budget, const char* what) {
  if (count > budget)
    throw BudgetExceeded(std::string(what) + ": " + count.str() + " objects exceed budget " + std::to_string(budget));
}

// Odometer over all vectors of the given length with entries from `alphabet`.
template <typename Fn>
void for_each_vector(std::span<const Fe> alphabet, std::size_t len, Fn&& fn) {
  std::vector<std::size_t> idx(len, 0);
  Vec v(len, alphabet.empty() ? Fe{} : alphabet[0]);
  while (true) {
    fn(static_cast<const Vec&>(v));
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++idx[i] < alphabet.size()) {
        v[i] = alphabet[idx[i]];
        break;
      }
      idx[i] = 0;
      v[i] = alphabet[0];
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

std::vector<Fe> all_elements(const Field& f) {
  std::vector<Fe> e;
  for (unsigned i = 0; i < f.order(); ++i) e.push_back(Fe{static_cast<std::uint16_t>(i)});
  return e;
}

}  // namespace

ProjPoint::ProjPoint(const Field& f, Vec coords) : coords_(std::move(coords)) {
  auto it = std::find_if(coords_.begin(), coords_.end(), [](Fe x) { return x.v != 0; });
  if (it == coords_.end()) throw std::invalid_argument("ProjPoint: zero vector");
  const Fe s = f.inv(*it);
  for (Fe& x : coords_) x = f.mul(s, x);
}

Subspace::Subspace(const Field& f, std::size_t ambient_dim, const Matrix& generators) : ambient_(ambient_dim) {
  if (generators.cols() != ambient_dim + 1) throw std::invalid_argument("Subspace: ambient mismatch");
  basis_ = rref(f, generators);
}

Subspace Subspace::of_point(const Field& f, const ProjPoint& p) {
  Matrix m(0, p.coords().size());
  m.append_row(p.coords());
  return Subspace(f, p.ambient_dim(), m);
}

Subspace Subspace::whole(const Field& f, std::size_t ambient_dim) {
  return Subspace(f, ambient_dim, Matrix::identity(f, ambient_dim + 1));
}

bool Subspace::contains(const Field& f, const ProjPoint& p) const {
  if (p.ambient_dim() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  bool ok = false;
  solve_in_rowspace(f, basis_, p.coords(), &ok);
  return ok;
}

bool Subspace::contains(const Field& f, const Subspace& s) const {
  if (s.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  return span(f, *this, s).rank() == rank();
}

std::vector<ProjPoint> Subspace::points(const Field& f) const {
  std::vector<ProjPoint> out;
  const std::size_t k = rank();
  if (k == 0) return out;
  auto elems = all_elements(f);
  for_each_vector(elems, k, [&](const Vec& c) {
    // Only normalized coefficient vectors, so each point appears once.
    auto it = std::find_if(c.begin(), c.end(), [](Fe x) { return x.v != 0; });
    if (it == c.end() || *it != f.one()) return;
    out.emplace_back(f, vec_mat(f, c, basis_));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPoint> enumerate_points(const Field& f, std::size_t m, std::uint64_t budget) {
  check_budget(gaussian_binomial(static_cast<long>(m + 1), 1, f.order()), budget, "enumerate_points");
  std::vector<ProjPoint> out;
  auto elems = all_elements(f);
  for (std::size_t lead = m + 1; lead-- > 0;) {
    // Vectors (0,..,0,1,*,..,*) with the 1 at position lead.
    for_each_vector(elems, m - lead, [&](const Vec& tail) {
      Vec v(m + 1, f.zero());
      v[lead] = f.one();
      std::copy(tail.begin(), tail.end(), v.begin() + static_cast<std::ptrdiff_t>(lead + 1));
      out.emplace_back(f, std::move(v));
    });
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t m, int k, std::uint64_t budget) {
  const std::size_t n = m + 1;
  if (k < -1 || k > static_cast<int>(m)) throw std::invalid_argument("enumerate_subspaces: dimension out of range");
  const std::size_t r = static_cast<std::size_t>(k + 1);
  check_budget(gaussian_binomial(static_cast<long>(n), static_cast<long>(r), f.order()), budget,
               "enumerate_subspaces");
  std::vector<Subspace> out;
  if (r == 0) {
    out.emplace_back(f, m, Matrix(0, n));
    return out;
  }
  auto elems = all_elements(f);
  std::vector<std::size_t> piv(r);
  for (std::size_t i = 0; i < r; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(i, c);
    for_each_vector(elems, free.size(), [&](const Vec& vals) {
      Matrix b(r, n);
      for (std::size_t i = 0; i < r; ++i) b.at(i, piv[i]) = f.one();
      for (std::size_t j = 0; j < free.size(); ++j) b.at(free[j].first, free[j].second) = vals[j];
      out.emplace_back(f, m, b);
    });
    // Next pivot combination.
    std::size_t i = r;
    while (i > 0 && piv[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace span(const Field& f, std::span<const ProjPoint> points) {
  if (points.empty()) throw std::invalid_argument("span: empty input");
  const std::size_t m = points.front().ambient_dim();
  Matrix g(0, m + 1);
  for (const auto& p : points) {
    if (p.ambient_dim() != m) throw std::invalid_argument("span: ambient mismatch");
    g.append_row(p.coords());
  }
  return Subspace(f, m, g);
}

Subspace span(const Field& f, std::span<const Subspace> spaces) {
  if (spaces.empty()) throw std::invalid_argument("span: empty input");
  const std::size_t m = spaces.front().ambient_dim();
  Matrix g(0, m + 1);
  for (const auto& s : spaces) {
    if (s.ambient_dim() != m) throw std::invalid_argument("span: ambient mismatch");
    for (std::size_t i = 0; i < s.rank(); ++i) g.append_row(s.basis().row(i));
  }
  return Subspace(f, m, g);
}

Subspace span(const Field& f, const Subspace& s, const ProjPoint& p) {
  if (s.ambient_dim() != p.ambient_dim()) throw std::invalid_argument("span: ambient mismatch");
  Matrix g = s.basis();
  g.append_row(p.coords());
  return Subspace(f, s.ambient_dim(), g);
}

Subspace span(const Field& f, const Subspace& a, const Subspace& b) {
  const Subspace both[] = {a, b};
  return span(f, std::span<const Subspace>(both));
}

std::optional<Subspace> intersect(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  const std::size_t n = a.ambient_dim() + 1;
  // a ∩ b = annihilator of (ann(a) + ann(b)).
  Matrix ann_a = a.is_empty() ? Matrix::identity(f, n) : null_space(f, a.basis());
  Matrix ann_b = b.is_empty() ? Matrix::identity(f, n) : null_space(f, b.basis());
  Matrix stacked = ann_a;
  for (std::size_t i = 0; i < ann_b.rows(); ++i) stacked.append_row(ann_b.row(i));
  Matrix inter = stacked.rows() == 0 ? Matrix::identity(f, n) : null_space(f, stacked);
  if (inter.rows() == 0) return std::nullopt;
  return Subspace(f, a.ambient_dim(), inter);
}

BigInt gaussian_binomial(long m, long k, const BigInt& q) {
  if (m < 0 || k < 0 || k > m) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= m");
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(m - i)) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

BigInt order_gl(long m, const BigInt& q) {
  if (m < 0) throw std::invalid_argument("order_gl: m must be >= 0");
  BigInt r = 1;
  const BigInt qm = boost::multiprecision::pow(q, static_cast<unsigned>(m));
  for (long i = 0; i < m; ++i) r *= qm - boost::multiprecision::pow(q, static_cast<unsigned>(i));
  return r;
}

bool is_frame(const Field& f, std::span<const ProjPoint> points, std::size_t m) {
  if (points.size() != m + 2) throw std::invalid_argument("is_frame: expected m+2 points");
  for (const auto& p : points)
    if (p.ambient_dim() != m) throw std::invalid_argument("is_frame: ambient mismatch");
  for (std::size_t skip = 0; skip < points.size(); ++skip) {
    Matrix g(0, m + 1);
    for (std::size_t i = 0; i < points.size(); ++i)
      if (i != skip) g.append_row(points[i].coords());
    if (rank(f, g) != m + 1) return false;
  }
  return true;
}

std::vector<ProjPoint> standard_frame(const Field& f, std::size_t m) {
  std::vector<ProjPoint> fr;
  for (std::size_t i = 0; i <= m; ++i) {
    Vec v(m + 1, f.zero());
    v[i] = f.one();
    fr.emplace_back(f, v);
  }
  fr.emplace_back(f, Vec(m + 1, f.one()));
  return fr;
}

std::set<ProjPoint> subgeometry_points(const Field& f, std::size_t m, unsigned sub_order,
                                       std::span<const ProjPoint> frame) {
  if (!f.has_subfield(sub_order))
    throw std::invalid_argument("subgeometry_points: F_" + std::to_string(sub_order) + " does not embed in F_" +
                                std::to_string(f.order()));
  if (!is_frame(f, frame, m)) throw std::invalid_argument("subgeometry_points: not a frame");
  Matrix base(0, m + 1);
  for (std::size_t i = 0; i <= m; ++i) base.append_row(frame[i].coords());
  bool ok = false;
  auto lambda = solve_in_rowspace(f, base, frame[m + 1].coords(), &ok);
  Matrix scaled(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= m; ++j) scaled.at(i, j) = f.mul(lambda[i], base.at(i, j));

  std::vector<Fe> sub;
  for (unsigned i = 0; i < f.order(); ++i)
    if (f.in_subfield(Fe{static_cast<std::uint16_t>(i)}, sub_order)) sub.push_back(Fe{static_cast<std::uint16_t>(i)});

  std::set<ProjPoint> out;
  for_each_vector(sub, m + 1, [&](const Vec& x) {
    auto it = std::find_if(x.begin(), x.end(), [](Fe e) { return e.v != 0; });
    if (it == x.end() || *it != f.one()) return;
    out.emplace(f, vec_mat(f, x, scaled));
  });
  return out;
}

nlohmann::json element_json(const Field& f, Fe a) { return f.prime_digits(a); }

Fe element_from_json(const Field& f, const nlohmann::json& j) {
  if (j.is_number_unsigned()) return f.element(j.get<unsigned>());
  auto digits = j.get<std::vector<unsigned>>();
  if (digits.size() != f.prime_degree()) throw std::invalid_argument("element_from_json: wrong digit count");
  unsigned v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= f.characteristic()) throw std::invalid_argument("element_from_json: digit out of range");
    v = v * f.characteristic() + digits[i];
  }
  return f.element(v);
}

nlohmann::json field_json(const Field& f) {
  return {{"p", f.characteristic()}, {"h", f.prime_degree()}, {"order", f.order()}, {"spec", f.spec()}};
}

nlohmann::json points_json(const Field& f, std::size_t m, std::span<const ProjPoint> points) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json c = nlohmann::json::array();
    for (Fe x : p.coords()) c.push_back(element_json(f, x));
    pts.push_back(std::move(c));
  }
  return {{"schema", "fgeom.points/1"}, {"field", field_json(f)}, {"dim", m}, {"points", std::move(pts)}};
}

nlohmann::json subspace_json(const Field& f, const Subspace& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (Fe x : s.basis().row(i)) r.push_back(element_json(f, x));
    rows.push_back(std::move(r));
  }
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(rows)}};
}

}  // namespace fgeom
