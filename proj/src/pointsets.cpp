#include "fgeom/pointsets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fgeom {

PointSet::PointSet(FieldPtr f, std::size_t m, std::set<ProjPoint> pts) : field(std::move(f)), dim(m), points(std::move(pts)) {
  for (const auto& p : points)
    if (p.ambient_dim() != dim) throw std::invalid_argument("PointSet: point outside PG(" + std::to_string(dim) + ")");
}

StarResult has_property_star(const PointSet& k, std::uint64_t budget) {
  if (k.dim < 2) throw std::invalid_argument("has_property_star: ambient dimension must be >= 2");
  const Field& f = *k.field;
  const std::size_t q = f.order();
  const auto planes = enumerate_subspaces(f, k.dim, 2, budget);
  // Lines of PG(2) in local coordinates, mapped into each plane below.
  const auto local_lines = enumerate_subspaces(f, 2, 1);

  for (const auto& plane : planes) {
    std::set<ProjPoint> in_k;
    for (const auto& p : plane.points(f))
      if (k.contains(p)) in_k.insert(p);
    if (in_k.size() != 2 * q && in_k.size() != 2 * q + 1) continue;
    const bool with_meet = in_k.size() == 2 * q + 1;

    struct Candidate {
      Subspace line;
      std::vector<ProjPoint> pts;
    };
    std::vector<Candidate> cands;
    for (const auto& ll : local_lines) {
      Subspace line(f, k.dim, mat_mul(f, ll.basis(), plane.basis()));
      auto pts = line.points(f);
      const auto hits = std::count_if(pts.begin(), pts.end(), [&](const ProjPoint& p) { return in_k.count(p) != 0; });
      if (static_cast<std::size_t>(hits) >= q) cands.push_back({std::move(line), std::move(pts)});
    }
    for (std::size_t i = 0; i < cands.size(); ++i)
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        auto meet = intersect(f, cands[i].line, cands[j].line);
        const ProjPoint meet_pt(f, meet->basis().row_vec(0));
        std::set<ProjPoint> u(cands[i].pts.begin(), cands[i].pts.end());
        u.insert(cands[j].pts.begin(), cands[j].pts.end());
        if (!with_meet) u.erase(meet_pt);
        if (u == in_k) return {false, StarWitness{plane, cands[i].line, cands[j].line, meet_pt, with_meet}};
      }
  }
  return {true, std::nullopt};
}

bool spans_ambient(const PointSet& k) {
  if (k.points.empty()) return false;
  auto pts = k.as_vector();
  return span(*k.field, std::span<const ProjPoint>(pts)).rank() == k.dim + 1;
}

std::optional<std::vector<ProjPoint>> find_frame(const PointSet& k) {
  if (!spans_ambient(k)) return std::nullopt;
  const Field& f = *k.field;
  const std::size_t m = k.dim;
  const auto pts = k.as_vector();
  std::vector<ProjPoint> chosen;

  auto fits = [&](const ProjPoint& p) {
    if (chosen.size() < m + 1) {
      Matrix g(0, m + 1);
      for (const auto& c : chosen) g.append_row(c.coords());
      g.append_row(p.coords());
      return rank(f, g) == chosen.size() + 1;
    }
    for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
      Matrix g(0, m + 1);
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (i != skip) g.append_row(chosen[i].coords());
      g.append_row(p.coords());
      if (rank(f, g) != m + 1) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (chosen.size() == m + 2) return true;
    for (std::size_t i = from; i < pts.size(); ++i) {
      if (!fits(pts[i])) continue;
      chosen.push_back(pts[i]);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(0)) return chosen;
  return std::nullopt;
}

namespace {

unsigned subgeometry_order(std::size_t m, std::size_t count, const Field& f) {
  for (unsigned s = 2; s <= f.order(); ++s) {
    if (!f.has_subfield(s)) continue;
    BigInt n = gaussian_binomial(static_cast<long>(m + 1), 1, s);
    if (n == count) return s;
  }
  return 0;
}

PointSet line_closure(const PointSet& k, const std::vector<ProjPoint>& frame, ClosureInfo* info) {
  const Field& f = *k.field;
  Matrix base(0, 2);
  base.append_row(frame[0].coords());
  base.append_row(frame[1].coords());
  bool ok = false;
  auto lambda = solve_in_rowspace(f, base, frame[2].coords(), &ok);
  Matrix scaled(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) scaled.at(i, j) = f.mul(lambda[i], base.at(i, j));

  std::vector<Fe> ratios;
  for (const auto& p : k.points) {
    auto x = solve_in_rowspace(f, scaled, p.coords(), &ok);
    if (x[0].v != 0) ratios.push_back(f.div(x[1], x[0]));
  }
  unsigned sub = 0;
  unsigned long long s = 1;
  for (unsigned d = 1; d <= f.prime_degree(); ++d) {
    s *= f.characteristic();
    if (f.prime_degree() % d != 0) continue;
    if (std::all_of(ratios.begin(), ratios.end(), [&](Fe r) { return f.in_subfield(r, static_cast<unsigned>(s)); })) {
      sub = static_cast<unsigned>(s);
      break;
    }
  }
  if (info) {
    info->rounds = 0;
    info->line_case = true;
    info->subfield_order = sub;
  }
  return PointSet(k.field, 1, subgeometry_points(f, 1, sub, frame));
}

}  // namespace

PointSet closure(const PointSet& k, ClosureInfo* info) {
  auto frame = find_frame(k);
  if (!frame) throw std::invalid_argument("closure: point set contains no frame of its ambient space");
  if (k.dim == 1) return line_closure(k, *frame, info);

  const Field& f = *k.field;
  std::set<ProjPoint> current = k.points;
  int rounds = 0;
  while (true) {
    ++rounds;
    // (i) all spans of subsets, grown one point at a time.
    std::set<Subspace> spans;
    std::vector<Subspace> frontier;
    for (const auto& p : current) {
      auto s = Subspace::of_point(f, p);
      if (spans.insert(s).second) frontier.push_back(std::move(s));
    }
    while (!frontier.empty()) {
      std::vector<Subspace> next;
      for (const auto& s : frontier)
        for (const auto& p : current) {
          if (s.contains(f, p)) continue;
          auto t = span(f, s, p);
          if (spans.insert(t).second) next.push_back(std::move(t));
        }
      frontier = std::move(next);
    }
    // (ii) points that are the exact intersection of two such spans.
    std::vector<Subspace> all(spans.begin(), spans.end());
    std::set<ProjPoint> next_points;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].rank() == 1) next_points.emplace(f, all[i].basis().row_vec(0));
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        auto inter = intersect(f, all[i], all[j]);
        if (inter && inter->rank() == 1) next_points.emplace(f, inter->basis().row_vec(0));
      }
    }
    if (next_points == current) break;
    current = std::move(next_points);
  }
  if (info) {
    info->rounds = rounds;
    info->line_case = false;
    info->subfield_order = subgeometry_order(k.dim, current.size(), f);
  }
  return PointSet(k.field, k.dim, std::move(current));
}

nlohmann::json pointset_json(const PointSet& k) {
  auto pts = k.as_vector();
  return points_json(*k.field, k.dim, pts);
}

PointSet pointset_from_json(const nlohmann::json& j) {
  FieldPtr f = parse_field_spec(j.at("field").at("spec").get<std::string>());
  const std::size_t m = j.at("dim").get<std::size_t>();
  std::set<ProjPoint> pts;
  for (const auto& row : j.at("points")) {
    Vec v;
    for (const auto& e : row) v.push_back(element_from_json(*f, e));
    if (v.size() != m + 1) throw std::invalid_argument("pointset_from_json: coordinate count mismatch");
    pts.emplace(*f, std::move(v));
  }
  return PointSet(f, m, std::move(pts));
}

}  // namespace fgeom
