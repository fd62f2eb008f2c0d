#include "fgeom/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fgeom {

ColoredGraph colored_incidence_graph(const IncidenceStructure& g) {
  ColoredGraph c{incidence_graph(g), {}};
  c.color.assign(g.num_points(), 0);
  c.color.resize(g.num_points() + g.num_lines(), 1);
  return c;
}

bool is_isomorphism(const ColoredGraph& a, const ColoredGraph& b, const Permutation& p) {
  const std::size_t n = a.graph.num_vertices();
  if (b.graph.num_vertices() != n || p.size() != n) return false;
  if (a.graph.num_edges() != b.graph.num_edges()) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const int w = p[v];
    if (w < 0 || static_cast<std::size_t>(w) >= n || seen[static_cast<std::size_t>(w)]) return false;
    seen[static_cast<std::size_t>(w)] = true;
    if (a.color[v] != b.color[static_cast<std::size_t>(w)]) return false;
  }
  for (std::size_t v = 0; v < n; ++v)
    for (int u : a.graph.adj[v])
      if (!b.graph.adjacent(p[v], p[static_cast<std::size_t>(u)])) return false;
  return true;
}

namespace {

using Colors = std::vector<int>;

// Joint refinement of two colourings.  New colour ids come from the sorted
// signatures over both graphs, so equal signatures get equal ids on both
// sides.  Returns false when the colour class sizes stop matching.
bool refine(const Graph& ga, const Graph& gb, Colors& ca, Colors& cb) {
  auto count = [](const Colors& c) { return std::set<int>(c.begin(), c.end()).size(); };
  std::size_t classes = count(ca);
  while (true) {
    auto signatures = [](const Graph& g, const Colors& c) {
      std::vector<std::vector<int>> s(c.size());
      for (std::size_t v = 0; v < c.size(); ++v) {
        s[v].reserve(g.adj[v].size() + 1);
        for (int u : g.adj[v]) s[v].push_back(c[static_cast<std::size_t>(u)]);
        std::sort(s[v].begin(), s[v].end());
        s[v].insert(s[v].begin(), c[v]);
      }
      return s;
    };
    auto sa = signatures(ga, ca);
    auto sb = signatures(gb, cb);
    std::map<std::vector<int>, std::pair<int, int>> ids;  // signature -> (count a, count b)
    for (const auto& s : sa) ++ids[s].first;
    for (const auto& s : sb) ++ids[s].second;
    std::map<std::vector<int>, int> number;
    for (const auto& [s, cnt] : ids) {
      if (cnt.first != cnt.second) return false;
      number.emplace(s, static_cast<int>(number.size()));
    }
    for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = number.at(sa[v]);
    for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = number.at(sb[v]);
    if (number.size() == classes) return true;
    classes = number.size();
  }
}

// Smallest non-singleton colour class (ties: smallest colour), or -1.
int target_cell(const Colors& c) {
  std::map<int, int> sizes;
  for (int x : c) ++sizes[x];
  int best = -1, best_size = 0;
  for (const auto& [col, sz] : sizes)
    if (sz > 1 && (best < 0 || sz < best_size)) {
      best = col;
      best_size = sz;
    }
  return best;
}

std::vector<int> members(const Colors& c, int col) {
  std::vector<int> out;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c[v] == col) out.push_back(static_cast<int>(v));
  return out;
}

// Gives v a fresh colour above every existing one.
void individualize(Colors& c, int v) {
  c[static_cast<std::size_t>(v)] = *std::max_element(c.begin(), c.end()) + 1;
}

Permutation leaf_map(const Colors& ca, const Colors& cb) {
  std::vector<int> by_color(ca.size());
  for (std::size_t v = 0; v < cb.size(); ++v) by_color[static_cast<std::size_t>(cb[v])] = static_cast<int>(v);
  Permutation p(ca.size());
  for (std::size_t v = 0; v < ca.size(); ++v) p[v] = by_color[static_cast<std::size_t>(ca[v])];
  return p;
}

class Search {
 public:
  Search(const ColoredGraph& a, const ColoredGraph& b, std::uint64_t budget) : a_(a), b_(b), budget_(budget) {}

  std::uint64_t nodes() const { return nodes_; }

  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded("graph search: node budget exceeded");
  }

  // Left side follows the first vertex of each target cell; the right side
  // tries every vertex.  fn(leaf permutation) returns true to stop.
  template <class Fn>
  bool descend(Colors ca, Colors cb, Fn& fn) {
    tick();
    if (!refine(a_.graph, b_.graph, ca, cb)) return false;
    const int cell = target_cell(ca);
    if (cell < 0) {
      Permutation p = leaf_map(ca, cb);
      return is_isomorphism(a_, b_, p) && fn(p);
    }
    const int left = members(ca, cell).front();
    Colors na = ca;
    individualize(na, left);
    for (int right : members(cb, cell)) {
      Colors nb = cb;
      individualize(nb, right);
      if (descend(na, nb, fn)) return true;
    }
    return false;
  }

 private:
  const ColoredGraph& a_;
  const ColoredGraph& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
};

}  // namespace

AutSearchResult automorphism_group(const ColoredGraph& g, std::uint64_t node_budget) {
  const std::size_t n = g.graph.num_vertices();
  AutSearchResult res;
  res.order = 1;
  Search s(g, g, node_budget);

  // Base path: individualize the first vertex of the target cell at each
  // level until the colouring is discrete.
  struct Level {
    Colors colors;  // refined, before individualizing the base point
    int base;
    std::vector<int> cell;
  };
  std::vector<Level> path;
  Colors c = g.color;
  while (true) {
    Colors copy = c;
    refine(g.graph, g.graph, c, copy);
    const int cell = target_cell(c);
    if (cell < 0) break;
    auto mem = members(c, cell);
    path.push_back({c, mem.front(), mem});
    individualize(c, mem.front());
  }

  std::vector<Permutation> gens;
  UnionFind orbits(n);
  for (std::size_t d = path.size(); d-- > 0;) {
    const Level& lv = path[d];
    // Generators from deeper levels fix the base prefix, so their orbits
    // are contained in the orbits of the current stabilizer.
    UnionFind uf(n);
    for (const auto& p : gens)
      for (std::size_t v = 0; v < n; ++v) uf.unite(static_cast<int>(v), p[v]);
    std::set<int> failed_roots;
    for (int v : lv.cell) {
      if (uf.find(v) == uf.find(lv.base) || failed_roots.count(uf.find(v))) continue;
      Colors la = lv.colors, lb = lv.colors;
      individualize(la, lv.base);
      individualize(lb, v);
      Permutation found;
      auto take = [&](const Permutation& p) {
        found = p;
        return true;
      };
      if (s.descend(la, lb, take)) {
        gens.push_back(found);
        for (std::size_t x = 0; x < n; ++x) uf.unite(static_cast<int>(x), found[x]);
      } else {
        failed_roots.insert(uf.find(v));
      }
      // Roots can change after a merge; recompute the failed set.
      std::set<int> fr;
      for (int r : failed_roots) fr.insert(uf.find(r));
      failed_roots.swap(fr);
    }
    std::size_t orbit = 0;
    for (int v : lv.cell)
      if (uf.find(v) == uf.find(lv.base)) ++orbit;
    res.order *= orbit;
  }
  std::sort(gens.begin(), gens.end());
  res.generators = std::move(gens);
  res.nodes = s.nodes();
  return res;
}

std::vector<Permutation> all_isomorphisms(const ColoredGraph& a, const ColoredGraph& b, std::uint64_t node_budget,
                                          std::uint64_t max_results) {
  std::vector<Permutation> out;
  if (a.graph.num_vertices() != b.graph.num_vertices() || a.graph.num_edges() != b.graph.num_edges()) return out;
  Search s(a, b, node_budget);
  auto collect = [&](const Permutation& p) {
    if (out.size() >= max_results) throw BudgetExceeded("all_isomorphisms: result budget exceeded");
    out.push_back(p);
    return false;
  };
  s.descend(a.color, b.color, collect);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fgeom
