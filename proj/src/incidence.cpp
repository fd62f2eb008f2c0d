#include "fgeom/incidence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgeom {

IncidenceStructure::IncidenceStructure(std::string kind, std::vector<Label> points, std::vector<Label> lines,
                                       std::vector<std::vector<int>> line_points)
    : kind_(std::move(kind)), points_(std::move(points)), lines_(std::move(lines)), line_points_(std::move(line_points)) {
  if (line_points_.size() != lines_.size()) throw std::invalid_argument("IncidenceStructure: line count mismatch");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!point_lookup_.emplace(points_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("IncidenceStructure: duplicate point label");
  for (std::size_t j = 0; j < lines_.size(); ++j)
    if (!line_lookup_.emplace(lines_[j], static_cast<int>(j)).second)
      throw std::invalid_argument("IncidenceStructure: duplicate line label");
  point_lines_.assign(points_.size(), {});
  for (std::size_t j = 0; j < line_points_.size(); ++j) {
    auto& pts = line_points_[j];
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) throw std::invalid_argument("IncidenceStructure: line with fewer than 2 points");
    for (int p : pts) {
      if (p < 0 || static_cast<std::size_t>(p) >= points_.size())
        throw std::invalid_argument("IncidenceStructure: flag references invalid point");
      point_lines_[static_cast<std::size_t>(p)].push_back(static_cast<int>(j));
    }
    flags_ += pts.size();
  }
}

bool IncidenceStructure::incident(int point, int line) const {
  const auto& pts = line_points_.at(static_cast<std::size_t>(line));
  return std::binary_search(pts.begin(), pts.end(), point);
}

int IncidenceStructure::point_index(const Label& l) const {
  auto it = point_lookup_.find(l);
  return it == point_lookup_.end() ? -1 : it->second;
}

int IncidenceStructure::line_index(const Label& l) const {
  auto it = line_lookup_.find(l);
  return it == line_lookup_.end() ? -1 : it->second;
}

bool same_structure(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines() || a.num_flags() != b.num_flags())
    return false;
  std::set<Label> pa(a.point_labels().begin(), a.point_labels().end());
  std::set<Label> pb(b.point_labels().begin(), b.point_labels().end());
  if (pa != pb) return false;
  for (std::size_t j = 0; j < a.num_lines(); ++j) {
    const int jb = b.line_index(a.line_labels()[j]);
    if (jb < 0) return false;
    std::set<Label> la, lb;
    for (int p : a.points_on(j)) la.insert(a.point_labels()[static_cast<std::size_t>(p)]);
    for (int p : b.points_on(static_cast<std::size_t>(jb))) lb.insert(b.point_labels()[static_cast<std::size_t>(p)]);
    if (la != lb) return false;
  }
  return true;
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& a : adj) twice += a.size();
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj.at(static_cast<std::size_t>(u));
  return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

Graph point_graph(const IncidenceStructure& g) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t j = 0; j < g.num_lines(); ++j) {
    const auto& pts = g.points_on(j);
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b) edges.emplace_back(pts[a], pts[b]);
  }
  return Graph::from_edges(g.num_points(), edges);
}

Graph incidence_graph(const IncidenceStructure& g) {
  std::vector<std::pair<int, int>> edges;
  const int np = static_cast<int>(g.num_points());
  for (std::size_t j = 0; j < g.num_lines(); ++j)
    for (int p : g.points_on(j)) edges.emplace_back(p, np + static_cast<int>(j));
  return Graph::from_edges(g.num_points() + g.num_lines(), edges);
}

nlohmann::json structure_json(const IncidenceStructure& g) {
  nlohmann::json lines = nlohmann::json::array();
  for (std::size_t j = 0; j < g.num_lines(); ++j)
    lines.push_back({{"label", g.line_labels()[j]}, {"points", g.points_on(j)}});
  return {{"schema", "fgeom.incidence/1"},
          {"kind", g.kind()},
          {"metadata", g.metadata()},
          {"counts", {{"points", g.num_points()}, {"lines", g.num_lines()}, {"flags", g.num_flags()}}},
          {"points", g.point_labels()},
          {"lines", std::move(lines)}};
}

std::string graph_dimacs(const Graph& g, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "c " << comment << '\n';
  os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (std::size_t u = 0; u < g.adj.size(); ++u)
    for (int v : g.adj[u])
      if (static_cast<std::size_t>(v) > u) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace fgeom
