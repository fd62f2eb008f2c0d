// Abstract point-line incidence structures and their graphs.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fgeom {

/// Canonical label: a flat vector of element indices whose meaning is fixed
/// by the constructing module (coordinates, RREF bases, ...).
using Label = std::vector<std::uint16_t>;

class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// line_points[j] lists the point indices on line j.  Validates that
  /// indices are in range, labels are unique and every line has >= 2 points.
  IncidenceStructure(std::string kind, std::vector<Label> points, std::vector<Label> lines,
                     std::vector<std::vector<int>> line_points);

  const std::string& kind() const { return kind_; }
  std::size_t num_points() const { return points_.size(); }
  std::size_t num_lines() const { return lines_.size(); }
  std::size_t num_flags() const { return flags_; }
  const std::vector<Label>& point_labels() const { return points_; }
  const std::vector<Label>& line_labels() const { return lines_; }
  /// Sorted point indices of line j.
  const std::vector<int>& points_on(std::size_t line) const { return line_points_[line]; }
  /// Sorted line indices through point i.
  const std::vector<int>& lines_through(std::size_t point) const { return point_lines_[point]; }
  bool incident(int point, int line) const;

  int point_index(const Label& l) const;
  int line_index(const Label& l) const;

  nlohmann::json& metadata() { return metadata_; }
  const nlohmann::json& metadata() const { return metadata_; }

 private:
  std::string kind_;
  std::vector<Label> points_;
  std::vector<Label> lines_;
  std::vector<std::vector<int>> line_points_;
  std::vector<std::vector<int>> point_lines_;
  std::map<Label, int> point_lookup_;
  std::map<Label, int> line_lookup_;
  std::size_t flags_ = 0;
  nlohmann::json metadata_ = nlohmann::json::object();
};

/// True when both structures have the same point labels, line labels and
/// flags (compared through labels, independent of index order).
bool same_structure(const IncidenceStructure& a, const IncidenceStructure& b);

/// Simple undirected graph with sorted adjacency lists.
struct Graph {
  std::vector<std::vector<int>> adj;

  std::size_t num_vertices() const { return adj.size(); }
  std::size_t num_edges() const;
  bool adjacent(int u, int v) const;
  static Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);
};

/// Vertices are points; distinct collinear points are adjacent.
Graph point_graph(const IncidenceStructure& g);
/// Points 0..P-1 then lines P..P+L-1; edges are flags.
Graph incidence_graph(const IncidenceStructure& g);

nlohmann::json structure_json(const IncidenceStructure& g);
/// DIMACS "p edge" format, 1-based vertices.
std::string graph_dimacs(const Graph& g, const std::string& comment = "");

}  // namespace fgeom
