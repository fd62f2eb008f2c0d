#include "fgeom/linrep.hpp"

#include <stdexcept>

namespace fgeom {

namespace {

BigInt affine_count(unsigned q, std::size_t coords) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(coords)); }

// Index of an affine vector, first coordinate most significant, so index
// order equals lexicographic order.
std::size_t affine_index(const Vec& x, unsigned q) {
  std::size_t v = 0;
  for (Fe e : x) v = v * q + e.v;
  return v;
}

Vec affine_vector(std::size_t index, std::size_t len, unsigned q) {
  Vec x(len);
  for (std::size_t i = len; i-- > 0;) {
    x[i] = Fe{static_cast<std::uint16_t>(index % q)};
    index /= q;
  }
  return x;
}

Label affine_label(const Field& f, const Vec& x) {
  Label l;
  for (Fe e : x) l.push_back(e.v);
  l.push_back(f.one().v);
  return l;
}

}  // namespace

Label point_label(const ProjPoint& p) {
  Label l;
  for (Fe e : p.coords()) l.push_back(e.v);
  return l;
}

Label subspace_label(const Subspace& s) {
  Label l{static_cast<std::uint16_t>(s.rank())};
  for (Fe e : s.basis().data()) l.push_back(e.v);
  return l;
}

PointSet at_infinity(const PointSet& k) {
  std::set<ProjPoint> pts;
  for (const auto& p : k.points) {
    Vec v = p.coords();
    v.push_back(k.field->zero());
    pts.emplace(*k.field, std::move(v));
  }
  return PointSet(k.field, k.dim + 1, std::move(pts));
}

PointSet standard_subgeometry(FieldPtr f, std::size_t n, unsigned sub_order) {
  auto frame = standard_frame(*f, n);
  auto pts = subgeometry_points(*f, n, sub_order, frame);
  return PointSet(std::move(f), n, std::move(pts));
}

IncidenceStructure build_linrep(const LinRepSpec& spec, std::uint64_t budget) {
  const PointSet& k = spec.k;
  if (!k.field) throw std::invalid_argument("build_linrep: missing field");
  const Field& f = *k.field;
  const std::size_t n = spec.n;
  if (k.dim != n + 1) throw std::invalid_argument("build_linrep: K must lie in PG(n+1)");
  for (const auto& p : k.points)
    if (p.coords().back().v != 0) throw std::invalid_argument("build_linrep: K is not contained in the hyperplane at infinity");
  const unsigned q = f.order();
  const BigInt np = affine_count(q, n + 1);
  if (np > budget) throw BudgetExceeded("build_linrep: " + np.str() + " affine points exceed budget");
  const std::size_t num_points = static_cast<std::size_t>(np);

  std::vector<Label> points;
  points.reserve(num_points);
  for (std::size_t i = 0; i < num_points; ++i) points.push_back(affine_label(f, affine_vector(i, n + 1, q)));

  std::vector<Label> lines;
  std::vector<std::vector<int>> line_points;
  for (const auto& v : k.points) {
    const Vec dir(v.coords().begin(), v.coords().end() - 1);
    std::vector<bool> covered(num_points, false);
    for (std::size_t a = 0; a < num_points; ++a) {
      if (covered[a]) continue;
      const Vec base = affine_vector(a, n + 1, q);
      std::vector<int> pts;
      for (unsigned lam = 0; lam < q; ++lam) {
        Vec x = base;
        for (std::size_t i = 0; i <= n; ++i) x[i] = f.add(x[i], f.mul(Fe{static_cast<std::uint16_t>(lam)}, dir[i]));
        const std::size_t idx = affine_index(x, q);
        covered[idx] = true;
        pts.push_back(static_cast<int>(idx));
      }
      Label l = point_label(v);
      Label least = points[a];
      l.insert(l.end(), least.begin(), least.end());
      lines.push_back(std::move(l));
      line_points.push_back(std::move(pts));
    }
  }
  IncidenceStructure g("linrep", std::move(points), std::move(lines), std::move(line_points));
  g.metadata() = {{"n", n}, {"field", field_json(f)}, {"k_size", k.points.size()}};
  return g;
}

ProjPoint linrep_line_infinity(const Field& f, const IncidenceStructure& g, std::size_t line, std::size_t n) {
  const Label& l = g.line_labels().at(line);
  Vec v;
  for (std::size_t i = 0; i < n + 2; ++i) v.push_back(Fe{l.at(i)});
  return ProjPoint(f, std::move(v));
}

IncidenceStructure build_gen_linrep(std::size_t m, std::size_t t, const FieldPtr& fp, const std::vector<Subspace>& k,
                                    std::uint64_t budget) {
  const Field& f = *fp;
  const std::size_t ambient = m + 1;
  for (const auto& s : k) {
    if (s.ambient_dim() != ambient) throw std::invalid_argument("build_gen_linrep: element not in PG(m+1)");
    if (s.rank() != t) throw std::invalid_argument("build_gen_linrep: element is not a (t-1)-space");
    for (std::size_t i = 0; i < s.rank(); ++i)
      if (s.basis().at(i, ambient).v != 0)
        throw std::invalid_argument("build_gen_linrep: element not inside the hyperplane at infinity");
  }
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (intersect(f, k[i], k[j])) throw std::invalid_argument("build_gen_linrep: elements of K are not pairwise disjoint");

  const unsigned q = f.order();
  const BigInt np = affine_count(q, m + 1);
  if (np > budget) throw BudgetExceeded("build_gen_linrep: " + np.str() + " affine points exceed budget");
  const std::size_t num_points = static_cast<std::size_t>(np);

  std::vector<Label> points;
  points.reserve(num_points);
  for (std::size_t i = 0; i < num_points; ++i) points.push_back(affine_label(f, affine_vector(i, m + 1, q)));

  const BigInt combos = affine_count(q, t);
  std::vector<Label> lines;
  std::vector<std::vector<int>> line_points;
  for (const auto& s : k) {
    std::vector<bool> covered(num_points, false);
    for (std::size_t a = 0; a < num_points; ++a) {
      if (covered[a]) continue;
      const Vec base = affine_vector(a, m + 1, q);
      std::vector<int> pts;
      for (std::size_t c = 0; c < static_cast<std::size_t>(combos); ++c) {
        const Vec coef = affine_vector(c, t, q);
        Vec x = base;
        for (std::size_t r = 0; r < t; ++r)
          for (std::size_t i = 0; i <= m; ++i) x[i] = f.add(x[i], f.mul(coef[r], s.basis().at(r, i)));
        const std::size_t idx = affine_index(x, q);
        covered[idx] = true;
        pts.push_back(static_cast<int>(idx));
      }
      Vec full = base;
      full.push_back(f.one());
      lines.push_back(subspace_label(span(f, s, ProjPoint(f, full))));
      line_points.push_back(std::move(pts));
    }
  }
  IncidenceStructure g("genlinrep", std::move(points), std::move(lines), std::move(line_points));
  g.metadata() = {{"m", m}, {"t", t}, {"field", field_json(f)}, {"k_size", k.size()}};
  return g;
}

}  // namespace fgeom
