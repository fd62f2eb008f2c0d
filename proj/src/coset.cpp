#include "fgeom/coset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fgeom/linrep.hpp"

namespace fgeom {

namespace {

Vec index_vector(std::size_t index, std::size_t len, unsigned q) {
  Vec x(len);
  for (std::size_t i = len; i-- > 0;) {
    x[i] = Fe{static_cast<std::uint16_t>(index % q)};
    index /= q;
  }
  return x;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Matrix rank_one(const Field& f, std::span<const Fe> b, std::span<const Fe> a) {
  Matrix m(b.size(), a.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m.at(i, j) = f.mul(b[i], a[j]);
  return m;
}

std::vector<MatrixPoint> coset_members(const Field& f, const ProjPoint& b, const MatrixPoint& rep) {
  const std::size_t t = rep.entries.cols();
  const unsigned q = f.order();
  std::vector<MatrixPoint> out;
  for (std::size_t v = 0; v < power(q, t); ++v) {
    const Vec a = index_vector(v, t, q);
    out.push_back({mat_add(f, rep.entries, rank_one(f, b.coords(), a))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CosetGeometry build_coset_geometry(std::size_t n, std::size_t t, FieldPtr fp, std::uint64_t budget) {
  if (n < 1 || t < 1) throw std::invalid_argument("build_coset_geometry: need n >= 1 and t >= 1");
  const Field& f = *fp;
  const unsigned q = f.order();
  const BigInt np = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>((n + 1) * t));
  if (np > budget) throw BudgetExceeded("build_coset_geometry: " + np.str() + " points exceed budget");
  const std::size_t num_points = static_cast<std::size_t>(np);

  CosetGeometry cg;
  cg.n = n;
  cg.t = t;
  cg.field = fp;
  std::vector<Label> plabels;
  cg.points.reserve(num_points);
  for (std::size_t i = 0; i < num_points; ++i) {
    cg.points.push_back({matrix_from_index(i, n + 1, t, q)});
    Label l;
    for (Fe e : cg.points.back().entries.data()) l.push_back(e.v);
    plabels.push_back(std::move(l));
  }

  std::vector<Label> llabels;
  std::vector<std::vector<int>> line_points;
  const std::size_t group = power(q, t);
  for (const auto& b : enumerate_points(f, n)) {
    std::vector<std::size_t> subgroup;
    for (std::size_t v = 0; v < group; ++v)
      subgroup.push_back(matrix_index(rank_one(f, b.coords(), index_vector(v, t, q)), q));
    std::vector<bool> covered(num_points, false);
    // Scanning in index order makes the first uncovered matrix the least
    // element of its coset.
    for (std::size_t r = 0; r < num_points; ++r) {
      if (covered[r]) continue;
      std::vector<int> pts;
      for (std::size_t s : subgroup) {
        const Matrix m = mat_add(f, cg.points[r].entries, cg.points[s].entries);
        const std::size_t idx = matrix_index(m, q);
        covered[idx] = true;
        pts.push_back(static_cast<int>(idx));
      }
      cg.lines.push_back({b, cg.points[r]});
      Label l = point_label(b);
      l.insert(l.end(), plabels[r].begin(), plabels[r].end());
      llabels.push_back(std::move(l));
      line_points.push_back(std::move(pts));
    }
  }
  cg.geometry = IncidenceStructure("coset", std::move(plabels), std::move(llabels), std::move(line_points));
  cg.geometry.metadata() = {{"n", n}, {"t", t}, {"field", field_json(f)}};
  return cg;
}

bool cayley_adjacency(const Field& f, const MatrixPoint& p, const MatrixPoint& q) {
  if (p.entries.rows() != q.entries.rows() || p.entries.cols() != q.entries.cols())
    throw std::invalid_argument("cayley_adjacency: shape mismatch");
  return rank(f, mat_sub(f, p.entries, q.entries)) == 1;
}

Graph cayley_graph(std::size_t n, std::size_t t, const Field& f) {
  const unsigned q = f.order();
  const std::size_t num = power(q, (n + 1) * t);
  // Connection set: all nonzero rank-one matrices.
  std::set<std::size_t> conn;
  for (std::size_t i = 1; i < num; ++i)
    if (rank(f, matrix_from_index(i, n + 1, t, q)) == 1) conn.insert(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < num; ++u) {
    const Matrix mu = matrix_from_index(u, n + 1, t, q);
    for (std::size_t c : conn) {
      const std::size_t v = matrix_index(mat_add(f, mu, matrix_from_index(c, n + 1, t, q)), q);
      if (u < v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return Graph::from_edges(num, edges);
}

AutElement aut_identity(const Field& f, std::size_t n, std::size_t t) {
  return {Matrix(n + 1, t), Matrix::identity(f, n + 1), Matrix::identity(f, t), 0};
}

AutElement make_aut(const Field& f, Matrix a, Matrix b, Matrix c, long l) {
  const std::size_t n1 = b.rows();
  const std::size_t t = c.rows();
  if (b.cols() != n1 || c.cols() != t || a.rows() != n1 || a.cols() != t)
    throw std::invalid_argument("make_aut: shape mismatch");
  if (!is_invertible(f, b) || !is_invertible(f, c)) throw std::invalid_argument("make_aut: B and C must be invertible");
  const long h = static_cast<long>(f.prime_degree());
  long r = l % h;
  if (r < 0) r += h;
  return {std::move(a), std::move(b), std::move(c), static_cast<unsigned>(r)};
}

namespace {

void check_compatible(const AutElement& x, const AutElement& y) {
  if (x.a.rows() != y.a.rows() || x.a.cols() != y.a.cols()) throw std::invalid_argument("group_op: shape mismatch");
}

}  // namespace

AutElement group_op(const Field& f, const AutElement& g2, const AutElement& g1) {
  check_compatible(g2, g1);
  const long s = -static_cast<long>(g1.l);
  const Matrix b2 = mat_frobenius(f, g2.b, s);
  const Matrix c2 = mat_frobenius(f, g2.c, s);
  const Matrix a2 = mat_frobenius(f, g2.a, s);
  AutElement r;
  r.a = mat_add(f, mat_mul(f, mat_mul(f, b2, g1.a), c2), a2);
  r.b = mat_mul(f, b2, g1.b);
  r.c = mat_mul(f, g1.c, c2);
  r.l = static_cast<unsigned>((g1.l + g2.l) % f.prime_degree());
  return r;
}

AutElement group_inverse(const Field& f, const AutElement& g) {
  const long s = static_cast<long>(g.l);
  const Matrix bi = inverse(f, g.b);
  const Matrix ci = inverse(f, g.c);
  AutElement r;
  r.a = mat_frobenius(f, mat_scale(f, f.neg(f.one()), mat_mul(f, mat_mul(f, bi, g.a), ci)), s);
  r.b = mat_frobenius(f, bi, s);
  r.c = mat_frobenius(f, ci, s);
  const unsigned h = f.prime_degree();
  r.l = (h - g.l % h) % h;
  return r;
}

MatrixPoint act(const Field& f, const AutElement& g, const MatrixPoint& p) {
  if (p.entries.rows() != g.b.rows() || p.entries.cols() != g.c.rows())
    throw std::invalid_argument("act: shape mismatch");
  Matrix m = mat_add(f, mat_mul(f, mat_mul(f, g.b, p.entries), g.c), g.a);
  return {mat_frobenius(f, m, static_cast<long>(g.l))};
}

std::vector<AutElement> kernel_elements(std::size_t n, std::size_t t, const Field& f) {
  std::vector<AutElement> out;
  for (unsigned v = 1; v < f.order(); ++v) {
    const Fe lam{static_cast<std::uint16_t>(v)};
    out.push_back({Matrix(n + 1, t), mat_scale(f, lam, Matrix::identity(f, n + 1)),
                   mat_scale(f, f.inv(lam), Matrix::identity(f, t)), 0});
  }
  return out;
}

BigInt aut_group_quotient_order(std::size_t n, std::size_t t, unsigned q) {
  const auto [p, h] = prime_power(q);
  (void)p;
  const BigInt bq = q;
  BigInt r = boost::multiprecision::pow(bq, static_cast<unsigned>((n + 1) * t));
  r *= order_gl(static_cast<long>(n + 1), bq) * order_gl(static_cast<long>(t), bq) * h;
  if (r % (q - 1) != 0) throw std::logic_error("aut_group_quotient_order: kernel order does not divide");
  return r / (q - 1);
}

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, f.order() - 1);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Fe{static_cast<std::uint16_t>(d(rng))};
  return m;
}

Matrix random_invertible(const Field& f, std::size_t k, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(f, k, k, rng);
    if (is_invertible(f, m)) return m;
  }
}

}  // namespace

AutElement random_aut(const Field& f, std::size_t n, std::size_t t, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> dl(0, f.prime_degree() - 1);
  AutElement g;
  g.a = random_matrix(f, n + 1, t, rng);
  g.b = random_invertible(f, n + 1, rng);
  g.c = random_invertible(f, t, rng);
  g.l = dl(rng);
  return g;
}

void for_each_aut(const Field& f, std::size_t n, std::size_t t, std::uint64_t budget,
                  const std::function<void(const AutElement&)>& fn) {
  const unsigned q = f.order();
  const BigInt total = aut_group_quotient_order(n, t, q) * (q - 1);
  if (total > budget) throw BudgetExceeded("for_each_aut: " + total.str() + " elements exceed budget");
  const auto gl_b = enumerate_gl(f, n + 1);
  const auto gl_c = enumerate_gl(f, t);
  const std::size_t num_a = power(q, (n + 1) * t);
  AutElement g;
  for (unsigned l = 0; l < f.prime_degree(); ++l)
    for (const auto& b : gl_b)
      for (const auto& c : gl_c)
        for (std::size_t a = 0; a < num_a; ++a) {
          g.a = matrix_from_index(a, n + 1, t, q);
          g.b = b;
          g.c = c;
          g.l = l;
          fn(g);
        }
}

ProjPoint image_direction(const Field& f, const AutElement& g, const ProjPoint& b) {
  Vec v = vec_mat(f, b.coords(), transpose(g.b));
  for (Fe& x : v) x = f.frobenius(x, static_cast<long>(g.l));
  return ProjPoint(f, std::move(v));
}

DirectionCountReport direction_count_report(std::size_t n, std::size_t t, FieldPtr fp) {
  const Field& f = *fp;
  const unsigned q = f.order();
  std::set<std::vector<std::size_t>> subgroups;
  for (std::size_t bi = 1; bi < power(q, n + 1); ++bi) {
    const Vec b = index_vector(bi, n + 1, q);
    std::vector<std::size_t> members;
    for (std::size_t ai = 0; ai < power(q, t); ++ai)
      members.push_back(matrix_index(rank_one(f, b, index_vector(ai, t, q)), q));
    std::sort(members.begin(), members.end());
    subgroups.insert(std::move(members));
  }
  DirectionCountReport r;
  r.n = n;
  r.t = t;
  r.q = q;
  r.counted = subgroups.size();
  r.projective_points = (boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n + 1)) - 1) / (q - 1);
  r.one_dimension_lower = (boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n)) - 1) / (q - 1);
  r.projective_points_consistent = r.projective_points == r.counted;
  r.one_dimension_lower_consistent = r.one_dimension_lower == r.counted;
  return r;
}

namespace {

nlohmann::json matrix_json(const Field& f, const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (Fe e : m.row(i)) r.push_back(element_json(f, e));
    rows.push_back(std::move(r));
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, const nlohmann::json& j) {
  Matrix m;
  for (const auto& row : j) {
    Vec v;
    for (const auto& e : row) v.push_back(element_from_json(f, e));
    if (m.cols() == 0 && m.rows() == 0) m = Matrix(0, v.size());
    m.append_row(v);
  }
  return m;
}

}  // namespace

nlohmann::json aut_json(const Field& f, const AutElement& g) {
  return {{"A", matrix_json(f, g.a)}, {"B", matrix_json(f, g.b)}, {"C", matrix_json(f, g.c)}, {"l", g.l}};
}

AutElement aut_from_json(const Field& f, const nlohmann::json& j) {
  return make_aut(f, matrix_from_json(f, j.at("A")), matrix_from_json(f, j.at("B")), matrix_from_json(f, j.at("C")),
                  j.at("l").get<long>());
}

nlohmann::json direction_report_json(const DirectionCountReport& r) {
  return {{"n", r.n},
          {"t", r.t},
          {"q", r.q},
          {"directions_counted", r.counted},
          {"formula_projective_points", r.projective_points.str()},
          {"formula_projective_points_consistent", r.projective_points_consistent},
          {"formula_one_dimension_lower", r.one_dimension_lower.str()},
          {"formula_one_dimension_lower_consistent", r.one_dimension_lower_consistent}};
}

}  // namespace fgeom
