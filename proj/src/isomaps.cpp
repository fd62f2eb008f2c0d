#include "fgeom/isomaps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fgeom {

std::vector<int> induce_line_map(const IncidenceStructure& source, const IncidenceStructure& target,
                                 const std::vector<int>& point_map) {
  std::vector<int> out(source.num_lines(), -1);
  const int np = static_cast<int>(target.num_points());
  for (std::size_t j = 0; j < source.num_lines(); ++j) {
    std::vector<int> img;
    bool valid = true;
    for (int p : source.points_on(j)) {
      const int x = point_map.at(static_cast<std::size_t>(p));
      if (x < 0 || x >= np) { valid = false; break; }
      img.push_back(x);
    }
    if (!valid) continue;
    std::sort(img.begin(), img.end());
    for (int cand : target.lines_through(static_cast<std::size_t>(img.front())))
      if (target.points_on(static_cast<std::size_t>(cand)) == img) {
        out[j] = cand;
        break;
      }
  }
  return out;
}

namespace {

bool is_bijection(const std::vector<int>& m, std::size_t n, std::size_t* bad) {
  if (m.size() != n) {
    *bad = 0;
    return false;
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || static_cast<std::size_t>(m[i]) >= n || seen[static_cast<std::size_t>(m[i])]) {
      *bad = i;
      return false;
    }
    seen[static_cast<std::size_t>(m[i])] = true;
  }
  return true;
}

}  // namespace

MapReport verify_map(GeometryMap& m) {
  MapReport r;
  if (!m.source || !m.target) throw std::invalid_argument("verify_map: missing structure");
  const IncidenceStructure& s = *m.source;
  const IncidenceStructure& t = *m.target;
  r.source_flags = s.num_flags();
  r.target_flags = t.num_flags();
  std::size_t bad = 0;
  r.points_bijective = s.num_points() == t.num_points() && is_bijection(m.point_map, t.num_points(), &bad);
  if (!r.points_bijective) {
    r.message = "point map is not a bijection (source point " + std::to_string(bad) + ")";
    r.counterexample = std::pair<int, int>(static_cast<int>(bad), -1);
  } else {
    r.lines_bijective = s.num_lines() == t.num_lines() && is_bijection(m.line_map, t.num_lines(), &bad);
    if (!r.lines_bijective) {
      r.message = "line map is not a bijection (source line " + std::to_string(bad) + ")";
      const int p = bad < s.num_lines() ? s.points_on(bad).front() : -1;
      r.counterexample = std::pair<int, int>(p, static_cast<int>(bad));
    }
  }
  if (r.points_bijective && r.lines_bijective) {
    for (std::size_t j = 0; j < s.num_lines() && !r.counterexample; ++j)
      for (int p : s.points_on(j)) {
        ++r.flags_checked;
        if (!t.incident(m.point_map[static_cast<std::size_t>(p)], m.line_map[j])) {
          r.counterexample = std::pair<int, int>(p, static_cast<int>(j));
          r.message = "flag (point " + std::to_string(p) + ", line " + std::to_string(j) + ") is not mapped to a flag";
          break;
        }
      }
    if (!r.counterexample && r.source_flags != r.target_flags) r.message = "flag counts differ";
    r.ok = !r.counterexample && r.source_flags == r.target_flags;
  }
  m.status = r.ok ? MapStatus::flag_preserving : MapStatus::failed;
  m.counterexample = r.counterexample;
  m.message = r.message;
  return r;
}

GeometryMap make_map(std::shared_ptr<const IncidenceStructure> source, std::shared_ptr<const IncidenceStructure> target,
                     std::vector<int> point_map) {
  GeometryMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.point_map = std::move(point_map);
  m.line_map = induce_line_map(*m.source, *m.target, m.point_map);
  verify_map(m);
  return m;
}

GeometryMap compose(const GeometryMap& first, const GeometryMap& second) {
  if (first.target != second.source) throw std::invalid_argument("compose: maps do not chain");
  GeometryMap m;
  m.source = first.source;
  m.target = second.target;
  for (int p : first.point_map) m.point_map.push_back(second.point_map.at(static_cast<std::size_t>(p)));
  for (int l : first.line_map) m.line_map.push_back(l < 0 ? -1 : second.line_map.at(static_cast<std::size_t>(l)));
  verify_map(m);
  return m;
}

XCosetMap x_to_coset(const XSpec& spec, std::uint64_t budget) {
  auto x = std::make_shared<XGeometry>(build_x(spec, budget));
  auto c = std::make_shared<CosetGeometry>(build_coset_geometry(spec.n, spec.t, spec.field, budget));
  const unsigned q = spec.field->order();
  std::vector<int> pm;
  for (const auto& a : x->matrices) pm.push_back(static_cast<int>(matrix_index(a.entries, q)));
  // Aliasing pointers keep the owning objects alive.
  std::shared_ptr<const IncidenceStructure> src(x, &x->geometry);
  std::shared_ptr<const IncidenceStructure> dst(c, &c->geometry);
  return {x, c, make_map(src, dst, std::move(pm))};
}

CosetLinrepMap coset_to_linrep(std::size_t n, const CompanionAlgebra& alg, std::uint64_t budget) {
  const FieldPtr& fq = alg.base();
  const FieldPtr& ext = alg.ext();
  const std::size_t t = alg.degree();
  auto c = std::make_shared<CosetGeometry>(build_coset_geometry(n, t, fq, budget));
  PointSet s = at_infinity(standard_subgeometry(ext, n, fq->order()));
  auto target = std::make_shared<IncidenceStructure>(build_linrep(LinRepSpec{n, s}, budget));

  std::vector<int> pm;
  for (const auto& a : c->points) {
    Label l;
    for (std::size_t i = 0; i <= n; ++i) l.push_back(alg.row_to_ext(a.entries.row(i)).v);
    l.push_back(ext->one().v);
    pm.push_back(target->point_index(l));
  }
  CosetLinrepMap out;
  out.coset = c;
  out.subgeometry = s;
  out.map = make_map(std::shared_ptr<const IncidenceStructure>(c, &c->geometry), target, std::move(pm));
  for (int l : out.map.line_map)
    if (l >= 0) out.infinity_image.insert(linrep_line_infinity(*ext, *target, static_cast<std::size_t>(l), n));
  out.infinity_is_subgeometry = out.infinity_image == s.points;
  return out;
}

GeometryMap x_to_linrep(const XSpec& spec, const CompanionAlgebra& alg, std::uint64_t budget) {
  if (!spec.field->same_as(*alg.base()) || spec.t != alg.degree())
    throw std::invalid_argument("x_to_linrep: companion algebra does not match the parameters");
  auto a = x_to_coset(spec, budget);
  auto b = coset_to_linrep(spec.n, alg, budget);
  // Both coset models are built from identical parameters; re-seat the
  // second map on the first one's coset structure.
  if (!same_structure(*a.map.target, *b.map.source)) throw std::logic_error("x_to_linrep: coset models differ");
  GeometryMap second = b.map;
  second.source = a.map.target;
  return compose(a.map, second);
}

Vec expand_vector(const CompanionAlgebra& alg, std::span<const Fe> x) {
  Vec out;
  out.reserve(x.size() * alg.degree());
  for (Fe e : x) {
    const Vec r = alg.ext_to_row(e);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

SpreadElement field_reduce(const ProjPoint& p, const CompanionAlgebra& alg) {
  const Field& ext = *alg.ext();
  const std::size_t t = alg.degree();
  const std::size_t len = p.coords().size() * t;
  Matrix g(0, len);
  Fe lambda = ext.one();
  for (std::size_t j = 0; j < t; ++j) {
    Vec scaled;
    for (Fe c : p.coords()) scaled.push_back(ext.mul(lambda, c));
    g.append_row(expand_vector(alg, scaled));
    lambda = ext.mul(lambda, ext.generator());
  }
  return {p, Subspace(*alg.base(), len - 1, g)};
}

bool segre_membership(const Field& fq, const ProjPoint& p, std::size_t n, std::size_t t) {
  if (p.coords().size() != (n + 1) * t) throw std::invalid_argument("segre_membership: length is not (n+1)t");
  return rank(fq, Matrix(n + 1, t, p.coords())) == 1;
}

SpreadReport spread_report(std::size_t n, const CompanionAlgebra& alg, std::uint64_t budget) {
  const Field& fq = *alg.base();
  const std::size_t t = alg.degree();
  const std::size_t amb = (n + 1) * t - 1;
  SpreadReport r;
  const auto ambient = enumerate_points(fq, amb, budget);
  r.ambient_points = ambient.size();
  std::map<ProjPoint, int> hits;
  for (const auto& p : enumerate_points(*alg.ext(), n, budget)) {
    ++r.elements;
    for (const auto& x : field_reduce(p, alg).subspace.points(fq)) {
      ++hits[x];
      ++r.covered;
    }
  }
  r.partition = r.covered == r.ambient_points && hits.size() == r.ambient_points;

  std::set<ProjPoint> uni, segre;
  for (const auto& p : standard_subgeometry(alg.ext(), n, fq.order()).points)
    for (const auto& x : field_reduce(p, alg).subspace.points(fq)) uni.insert(x);
  for (const auto& p : ambient)
    if (segre_membership(fq, p, n, t)) segre.insert(p);
  r.subgeometry_covered = uni.size();
  r.segre_points = segre.size();
  r.union_is_segre = uni == segre;
  const BigInt q = fq.order();
  r.expected_segre = (boost::multiprecision::pow(q, static_cast<unsigned>(n + 1)) - 1) *
                     (boost::multiprecision::pow(q, static_cast<unsigned>(t)) - 1) / ((q - 1) * (q - 1));
  return r;
}

Subspace reduce_at_infinity(const ProjPoint& k, const CompanionAlgebra& alg) {
  const Field& ext = *alg.ext();
  const Vec& c = k.coords();
  if (c.empty() || c.back().v != 0) throw std::invalid_argument("reduce_at_infinity: point not at infinity");
  const SpreadElement e = field_reduce(ProjPoint(ext, Vec(c.begin(), c.end() - 1)), alg);
  const Matrix& b = e.subspace.basis();
  Matrix g(0, b.cols() + 1);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Vec r = b.row_vec(i);
    r.push_back(alg.base()->zero());
    g.append_row(r);
  }
  return Subspace(*alg.base(), b.cols(), g);
}

BarlottiCofmanMap barlotti_cofman(const LinRepSpec& spec, const CompanionAlgebra& alg, std::uint64_t budget) {
  const FieldPtr& fq = alg.base();
  if (!spec.k.field || !spec.k.field->same_as(*alg.ext()))
    throw std::invalid_argument("barlotti_cofman: K must be given over the extension field of the algebra");
  const std::size_t n = spec.n;
  const std::size_t t = alg.degree();
  auto source = std::make_shared<IncidenceStructure>(build_linrep(spec, budget));

  std::vector<Subspace> reduced;
  for (const auto& k : spec.k.points) reduced.push_back(reduce_at_infinity(k, alg));
  auto target = std::make_shared<IncidenceStructure>(build_gen_linrep(t * (n + 1) - 1, t, fq, reduced, budget));

  auto expand_affine = [&](const Label& l) {
    Vec x;
    for (std::size_t i = 0; i <= n; ++i) x.push_back(Fe{l[i]});
    Vec e = expand_vector(alg, x);
    e.push_back(fq->one());
    return e;
  };

  BarlottiCofmanMap out;
  GeometryMap& m = out.map;
  m.source = source;
  m.target = target;
  std::vector<Label> plabels, llabels;
  for (const auto& l : source->point_labels()) {
    Label img;
    for (Fe e : expand_affine(l)) img.push_back(e.v);
    m.point_map.push_back(target->point_index(img));
    plabels.push_back(std::move(img));
  }
  std::vector<std::vector<int>> line_points;
  for (std::size_t j = 0; j < source->num_lines(); ++j) {
    const ProjPoint inf = linrep_line_infinity(*spec.k.field, *source, j, n);
    const Label& a = source->point_labels()[static_cast<std::size_t>(source->points_on(j).front())];
    const Subspace s = span(*fq, reduce_at_infinity(inf, alg), ProjPoint(*fq, expand_affine(a)));
    Label img = subspace_label(s);
    m.line_map.push_back(target->line_index(img));
    llabels.push_back(std::move(img));
    line_points.push_back(source->points_on(j));
  }
  verify_map(m);
  out.image = std::make_shared<IncidenceStructure>("barlotti-cofman-image", std::move(plabels), std::move(llabels),
                                                   std::move(line_points));
  out.identical = same_structure(*out.image, *target);
  return out;
}

const char* status_name(MapStatus s) {
  switch (s) {
    case MapStatus::unchecked: return "unchecked";
    case MapStatus::flag_preserving: return "flag-preserving";
    case MapStatus::failed: return "failed";
  }
  return "unknown";
}

nlohmann::json map_json(const GeometryMap& m) {
  nlohmann::json j = {{"schema", "fgeom.map/1"},
                      {"source_kind", m.source ? m.source->kind() : ""},
                      {"target_kind", m.target ? m.target->kind() : ""},
                      {"point_map", m.point_map},
                      {"line_map", m.line_map},
                      {"status", status_name(m.status)}};
  if (m.counterexample) j["counterexample"] = {{"point", m.counterexample->first}, {"line", m.counterexample->second}};
  if (!m.message.empty()) j["message"] = m.message;
  return j;
}

}  // namespace fgeom
