#include "fgeom/autcount.hpp"

#include <stdexcept>

namespace fgeom {

namespace {

BigInt qpow(unsigned q, long e) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)); }

unsigned degree_of(unsigned q) { return prime_power(q).second; }

void check_params(long n, long t) {
  if (n < 1 || t < 1) throw std::invalid_argument("order formulas need n >= 1 and t >= 1");
}

// prod_{i=lo}^{hi} (q^i - 1), empty product 1.
BigInt qprod(unsigned q, long lo, long hi) {
  BigInt r = 1;
  for (long i = lo; i <= hi; ++i) r *= qpow(q, i) - 1;
  return r;
}

}  // namespace

BigInt order_pgl(long m, unsigned q) {
  if (m < 1) throw std::invalid_argument("order_pgl: m >= 1 required");
  prime_power(q);
  return order_gl(m, q) / (q - 1);
}

BigInt order_pgammal(long m, unsigned q) { return order_pgl(m, q) * degree_of(q); }

BigInt persp_order(long m, unsigned q) { return qpow(q, m) * (q - 1); }

BigInt order_stab_pi(long n, long t, unsigned q) {
  check_params(n, t);
  return qpow(q, t * (n + 1)) * qpow(q, t * (t - 1) / 2) * qprod(q, 1, t) * order_pgammal(n + 1, q);
}

BigInt order_stab_pi_by_index(long n, long t, unsigned q) {
  check_params(n, t);
  const BigInt all = order_pgammal(n + t + 1, q);
  const BigInt idx = gaussian_binomial(n + t + 1, n + 1, q);
  if (all % idx != 0) throw std::logic_error("order_stab_pi_by_index: index does not divide");
  return all / idx;
}

BigInt order_stab_segre(long n, long t, unsigned q) {
  check_params(n, t);
  return qpow(q, t * (n + 1)) * (q - 1) * qpow(q, t * (t - 1) / 2) * qprod(q, 2, t) * order_pgammal(n + 1, q);
}

BigInt order_stab_segre_by_components(long n, long t, unsigned q) {
  check_params(n, t);
  return persp_order(t * (n + 1), q) * order_pgl(n + 1, q) * order_pgl(t, q) * degree_of(q);
}

BigInt geometric_order(long n, long t, unsigned q) {
  check_params(n, t);
  return qpow(q, t * (n + 1)) * (qpow(q, t) - 1) * t * order_pgammal(n + 1, q);
}

BigRational ratio(long n, long t, unsigned q) {
  check_params(n, t);
  const BigRational r = BigRational(qpow(q, t * (t - 1) / 2) * qprod(q, 1, t - 1), BigInt(t));
  const BigRational quotient(order_stab_pi(n, t, q), geometric_order(n, t, q));
  if (boost::multiprecision::denominator(r) != 1 || r != quotient)
    throw std::logic_error("ratio(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(q) +
                           "): formula " + r.str() + " vs quotient " + quotient.str());
  return r;
}

GroupOrderReport group_order_report(long n, long t, unsigned q) {
  GroupOrderReport r;
  r.n = n;
  r.t = t;
  r.q = q;
  r.h = degree_of(q);
  r.full_order = order_stab_pi(n, t, q);
  r.full_order_by_index = order_stab_pi_by_index(n, t, q);
  r.segre_stab_order = order_stab_segre(n, t, q);
  r.segre_stab_by_components = order_stab_segre_by_components(n, t, q);
  r.persp_order = persp_order(t * (n + 1), q);
  r.geometric_order = geometric_order(n, t, q);
  r.ratio = ratio(n, t, q);
  r.consistent = r.full_order == r.full_order_by_index && r.full_order == r.segre_stab_order &&
                 r.segre_stab_order == r.segre_stab_by_components &&
                 BigRational(r.full_order) == BigRational(r.geometric_order) * r.ratio;
  return r;
}

nlohmann::json group_order_json(const GroupOrderReport& r) {
  return {{"schema", "fgeom.orders/1"},
          {"n", r.n},
          {"t", r.t},
          {"q", r.q},
          {"h", r.h},
          {"full_order", r.full_order.str()},
          {"full_order_by_index", r.full_order_by_index.str()},
          {"segre_stab_order", r.segre_stab_order.str()},
          {"segre_stab_by_components", r.segre_stab_by_components.str()},
          {"persp_order", r.persp_order.str()},
          {"geometric_order", r.geometric_order.str()},
          {"ratio", r.ratio.str()},
          {"consistent", r.consistent},
          {"formulas",
           {{"full_order", "q^(t(n+1)) q^(t(t-1)/2) prod_{i=1..t}(q^i-1) |PGammaL(n+1,q)|"},
            {"full_order_by_index", "|PGammaL(n+t+1,q)| / [n+t+1, n+1]_q"},
            {"segre_stab_order", "q^(t(n+1)) (q-1) q^(t(t-1)/2) prod_{i=2..t}(q^i-1) |PGammaL(n+1,q)|"},
            {"segre_stab_by_components", "q^(t(n+1))(q-1) |PGL(n+1,q)| |PGL(t,q)| h"},
            {"geometric_order", "q^(t(n+1)) (q^t-1) t |PGammaL(n+1,q)|"},
            {"ratio", "(1/t) q^(t(t-1)/2) prod_{i=1..t-1}(q^i-1)"}}}};
}

namespace {

void check_vertices(const IncidenceStructure& g, std::size_t vertex_budget) {
  if (g.num_points() + g.num_lines() > vertex_budget)
    throw BudgetExceeded("incidence graph has " + std::to_string(g.num_points() + g.num_lines()) +
                         " vertices, budget " + std::to_string(vertex_budget));
}

std::pair<Permutation, Permutation> split(const Permutation& p, std::size_t np) {
  Permutation pts(p.begin(), p.begin() + static_cast<long>(np));
  Permutation lines;
  for (auto it = p.begin() + static_cast<long>(np); it != p.end(); ++it) lines.push_back(*it - static_cast<int>(np));
  return {pts, lines};
}

}  // namespace

AutomorphismReport brute_force_automorphisms(const IncidenceStructure& g, std::size_t vertex_budget,
                                             std::uint64_t node_budget) {
  check_vertices(g, vertex_budget);
  const auto res = automorphism_group(colored_incidence_graph(g), node_budget);
  AutomorphismReport r;
  r.order = res.order;
  r.nodes = res.nodes;
  for (const auto& p : res.generators) r.generators.push_back(split(p, g.num_points()));
  return r;
}

nlohmann::json automorphism_json(const AutomorphismReport& r) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& [pts, lines] : r.generators) gens.push_back({{"points", pts}, {"lines", lines}});
  return {{"schema", "fgeom.automorphisms/1"}, {"order", r.order.str()}, {"generators", gens}, {"nodes", r.nodes}};
}

std::vector<GeometryMap> enumerate_isomorphisms(std::shared_ptr<const IncidenceStructure> g1,
                                                std::shared_ptr<const IncidenceStructure> g2,
                                                std::size_t vertex_budget, std::uint64_t node_budget,
                                                std::uint64_t max_results) {
  check_vertices(*g1, vertex_budget);
  check_vertices(*g2, vertex_budget);
  std::vector<GeometryMap> out;
  if (g1->num_points() != g2->num_points() || g1->num_lines() != g2->num_lines()) return out;
  const auto isos = all_isomorphisms(colored_incidence_graph(*g1), colored_incidence_graph(*g2), node_budget, max_results);
  for (const auto& p : isos) {
    auto [pts, lines] = split(p, g1->num_points());
    GeometryMap m;
    m.source = g1;
    m.target = g2;
    m.point_map = std::move(pts);
    m.line_map = std::move(lines);
    verify_map(m);
    out.push_back(std::move(m));
  }
  return out;
}

SrgResult srg_check(const Graph& g) {
  SrgResult r;
  const std::size_t v = g.num_vertices();
  r.v = v;
  if (v == 0) {
    r.message = "empty graph";
    return r;
  }
  r.k = g.adj[0].size();
  for (std::size_t x = 1; x < v; ++x)
    if (g.adj[x].size() != r.k) {
      r.witness = std::pair<int, int>(0, static_cast<int>(x));
      r.message = "degrees differ";
      return r;
    }
  r.regular = true;
  std::optional<std::pair<int, int>> first_adj, first_non;
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y) {
      long common = 0;
      for (int z : g.adj[x])
        if (g.adjacent(z, static_cast<int>(y))) ++common;
      const bool adj = g.adjacent(static_cast<int>(x), static_cast<int>(y));
      long& slot = adj ? r.lambda : r.mu;
      auto& first = adj ? first_adj : first_non;
      if (slot < 0) {
        slot = common;
        first = std::pair<int, int>(static_cast<int>(x), static_cast<int>(y));
      } else if (slot != common) {
        r.witness = std::pair<int, int>(static_cast<int>(x), static_cast<int>(y));
        r.message = std::string(adj ? "adjacent" : "non-adjacent") + " pairs with different common-neighbour counts";
        return r;
      }
    }
  r.strongly_regular = true;
  r.degenerate = r.lambda < 0 || r.mu < 0;
  if (r.degenerate) r.message = r.mu < 0 ? "complete graph" : "edgeless graph";
  return r;
}

nlohmann::json srg_json(const SrgResult& r) {
  nlohmann::json j = {{"schema", "fgeom.srg/1"},
                      {"v", r.v},
                      {"k", r.k},
                      {"regular", r.regular},
                      {"strongly_regular", r.strongly_regular},
                      {"degenerate", r.degenerate}};
  if (r.lambda >= 0) j["lambda"] = r.lambda;
  if (r.mu >= 0) j["mu"] = r.mu;
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

}  // namespace fgeom
