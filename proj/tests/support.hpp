// Independent oracles for the tests.  These deliberately avoid the library
// code paths they check: plain integer polynomial arithmetic, determinants
// instead of echelon forms, permutation brute force instead of refinement.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "fgeom/coset.hpp"
#include "fgeom/field.hpp"
#include "fgeom/incidence.hpp"
#include "fgeom/pointsets.hpp"

namespace oracle {

using fgeom::Fe;
using fgeom::Field;

// Digits of an index in base p, lowest first.
inline std::vector<unsigned> digits(unsigned v, unsigned p, unsigned h) {
  std::vector<unsigned> d(h);
  for (unsigned i = 0; i < h; ++i, v /= p) d[i] = v % p;
  return d;
}

inline unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Schoolbook product of two residues of F_p[x]/(m), m monic of degree h
// given by its residues m_0..m_{h-1}.
inline unsigned mulmod(unsigned a, unsigned b, unsigned p, const std::vector<unsigned>& m) {
  const unsigned h = static_cast<unsigned>(m.size());
  const auto x = digits(a, p, h), y = digits(b, p, h);
  std::vector<unsigned> prod(2 * h, 0);
  for (unsigned i = 0; i < h; ++i)
    for (unsigned j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (unsigned k = 2 * h - 1; k >= h; --k) {
    const unsigned c = prod[k];
    prod[k] = 0;
    // x^k = -sum m_i x^{k-h+i}
    for (unsigned i = 0; i < h; ++i) prod[k - h + i] = (prod[k - h + i] + (p - c) * m[i]) % p;
  }
  prod.resize(h);
  return undigits(prod, p);
}

inline unsigned addmod(unsigned a, unsigned b, unsigned p, unsigned h) {
  auto x = digits(a, p, h), y = digits(b, p, h);
  for (unsigned i = 0; i < h; ++i) x[i] = (x[i] + y[i]) % p;
  return undigits(x, p);
}

// Irreducibility of a monic polynomial over F_p of degree <= 4 by absence of
// roots and (for degree 4) of monic quadratic factors.
inline bool irreducible_small(const std::vector<unsigned>& monic_low_first, unsigned p) {
  const unsigned d = static_cast<unsigned>(monic_low_first.size()) - 1;
  auto eval = [&](unsigned x) {
    unsigned r = 0;
    for (std::size_t i = monic_low_first.size(); i-- > 0;) r = (r * x + monic_low_first[i]) % p;
    return r;
  };
  for (unsigned x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  if (d == 4) {
    // Divide by every monic quadratic x^2 + bx + c.
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c) {
        std::vector<unsigned> r = monic_low_first;
        for (int k = 4; k >= 2; --k) {
          const unsigned lead = r[static_cast<std::size_t>(k)];
          r[static_cast<std::size_t>(k)] = 0;
          r[static_cast<std::size_t>(k - 1)] = (r[static_cast<std::size_t>(k - 1)] + (p - lead) * b) % p;
          r[static_cast<std::size_t>(k - 2)] = (r[static_cast<std::size_t>(k - 2)] + (p - lead) * c) % p;
        }
        if (r[0] == 0 && r[1] == 0) return false;
      }
  }
  return d <= 4;
}

// Projective points of PG(m, q) as raw vectors with first nonzero entry 1.
inline std::vector<std::vector<Fe>> raw_points(const Field& f, std::size_t m) {
  std::vector<std::vector<Fe>> out;
  const unsigned q = f.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i <= m; ++i) total *= q;
  for (std::size_t idx = 1; idx < total; ++idx) {
    std::vector<Fe> v(m + 1);
    std::size_t x = idx;
    for (std::size_t i = m + 1; i-- > 0; x /= q) v[i] = Fe{static_cast<std::uint16_t>(x % q)};
    const auto lead = std::find_if(v.begin(), v.end(), [](Fe e) { return e.v != 0; });
    if (lead->v == 1) out.push_back(v);
  }
  return out;
}

inline Fe dot(const Field& f, const std::vector<Fe>& a, const std::vector<Fe>& b) {
  Fe s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

// Lines of PG(2,q) as sorted point sets, one per dual point.
inline std::vector<std::set<std::vector<Fe>>> plane_lines(const Field& f) {
  const auto pts = raw_points(f, 2);
  std::vector<std::set<std::vector<Fe>>> lines;
  for (const auto& l : pts) {
    std::set<std::vector<Fe>> s;
    for (const auto& p : pts)
      if (dot(f, l, p).v == 0) s.insert(p);
    lines.push_back(std::move(s));
  }
  return lines;
}

// K ⊆ PG(2,q) is two distinct lines, with or without their common point.
inline bool is_two_lines(const Field& f, const std::set<std::vector<Fe>>& k) {
  const auto lines = plane_lines(f);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::set<std::vector<Fe>> u = lines[i];
      u.insert(lines[j].begin(), lines[j].end());
      if (u == k) return true;
      std::set<std::vector<Fe>> meet;
      std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(), lines[j].end(),
                            std::inserter(meet, meet.begin()));
      for (const auto& m : meet) u.erase(m);
      if (u == k) return true;
    }
  return false;
}

// Number of point permutations mapping the line set onto itself
// (points <= 9).
inline std::size_t naive_automorphisms(const fgeom::IncidenceStructure& g) {
  std::set<std::vector<int>> lines;
  for (std::size_t j = 0; j < g.num_lines(); ++j) lines.insert(g.points_on(j));
  std::vector<int> perm(g.num_points());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (const auto& l : lines) {
      std::vector<int> img;
      for (int p : l) img.push_back(perm[static_cast<std::size_t>(p)]);
      std::sort(img.begin(), img.end());
      if (!lines.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

struct Srg {
  long k = -1, lambda = -1, mu = -1;
  bool ok = true;
};

// Reads k, lambda, mu off the entries of A and A^2.
inline Srg srg_by_matrix(const fgeom::Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0)), a2(n, std::vector<long>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (int v : g.adj[u]) a[u][static_cast<std::size_t>(v)] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) a2[i][j] += a[k][j];
  Srg s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long& slot = i == j ? s.k : (a[i][j] ? s.lambda : s.mu);
      if (slot < 0)
        slot = a2[i][j];
      else if (slot != a2[i][j])
        s.ok = false;
    }
  return s;
}

// Random subsets of PG(2,q): kind 0 uniform, 1 two lines, 2 two lines minus
// their meet, 3 two lines minus some point.
inline fgeom::PointSet random_plane_set(const fgeom::FieldPtr& f, std::mt19937_64& rng, int kind) {
  const auto pts = fgeom::enumerate_points(*f, 2);
  std::set<fgeom::ProjPoint> k;
  if (kind == 0) {
    std::bernoulli_distribution keep(0.4);
    for (const auto& p : pts)
      if (keep(rng)) k.insert(p);
  } else {
    const auto lines = fgeom::enumerate_subspaces(*f, 2, 1);
    std::uniform_int_distribution<std::size_t> pick(0, lines.size() - 1);
    const auto l1 = lines[pick(rng)];
    auto l2 = lines[pick(rng)];
    while (l2 == l1) l2 = lines[pick(rng)];
    for (const auto& p : l1.points(*f)) k.insert(p);
    for (const auto& p : l2.points(*f)) k.insert(p);
    if (kind == 2) k.erase(fgeom::intersect(*f, l1, l2)->points(*f).front());
    if (kind == 3) k.erase(k.begin());  // usually no longer two lines
  }
  return fgeom::PointSet(f, 2, std::move(k));
}

// Exhaustive checks of the quadruple group on the coset geometry.
struct GroupModelCheck {
  std::size_t elements = 0;
  std::size_t distinct_permutations = 0;
  bool action_axiom = true;
  bool inverse = true;
  bool kernel_trivial = true;
  bool lines_preserved = true;
  bool translations_sharp = true;
  std::size_t pairs_checked = 0;
};

// all_pairs: check the action axiom on every ordered pair; otherwise every
// element is paired with `partners` fixed random elements on both sides.
inline GroupModelCheck check_group_model(std::size_t n, std::size_t t, unsigned q, bool all_pairs,
                                         std::size_t partners = 4) {
  using namespace fgeom;
  const FieldPtr fp = Field::of_order(q);
  const Field& f = *fp;
  const auto cg = build_coset_geometry(n, t, fp);
  const std::size_t np = cg.points.size();
  using Perm = std::vector<std::uint16_t>;
  // (B P C + A)^(p^l) entry by entry with table lookups; no library action.
  const std::size_t rows = n + 1;
  auto perm = [&](const AutElement& g) {
    std::vector<Fe> fr(q);
    for (unsigned x = 0; x < q; ++x) {
      Fe y{static_cast<std::uint16_t>(x)};
      for (unsigned i = 0; i < g.l; ++i) y = f.pow(y, f.characteristic());
      fr[x] = y;
    }
    Perm out(np);
    std::vector<Fe> bp(rows * t);
    for (std::size_t i = 0; i < np; ++i) {
      const auto& pd = cg.points[i].entries.data();
      for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t j = 0; j < t; ++j) {
          Fe s = f.zero();
          for (std::size_t k = 0; k < rows; ++k) s = f.add(s, f.mul(g.b.at(a, k), pd[k * t + j]));
          bp[a * t + j] = s;
        }
      std::size_t idx = 0;
      for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t j = 0; j < t; ++j) {
          Fe s = g.a.at(a, j);
          for (std::size_t k = 0; k < t; ++k) s = f.add(s, f.mul(bp[a * t + k], g.c.at(k, j)));
          idx = idx * q + fr[s.v].v;
        }
      out[i] = static_cast<std::uint16_t>(idx);
    }
    return out;
  };
  auto compose = [](const Perm& second, const Perm& first) {
    Perm r(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
    return r;
  };
  Perm identity(np);
  std::iota(identity.begin(), identity.end(), 0);

  std::set<std::vector<int>> lines;
  for (std::size_t j = 0; j < cg.geometry.num_lines(); ++j) lines.insert(cg.geometry.points_on(j));

  GroupModelCheck r;
  std::mt19937_64 rng(7);
  std::vector<std::pair<AutElement, Perm>> sample;
  for (std::size_t i = 0; i < partners; ++i) {
    auto g = random_aut(f, n, t, rng);
    sample.emplace_back(g, perm(g));
  }
  std::vector<std::pair<AutElement, Perm>> all;
  std::unordered_set<std::string> distinct;
  for_each_aut(f, n, t, 5'000'000, [&](const AutElement& g) {
    ++r.elements;
    const Perm p = perm(g);
    if (all_pairs) all.emplace_back(g, p);
    else
      for (const auto& [h, ph] : sample) {
        r.action_axiom = r.action_axiom && perm(group_op(f, g, h)) == compose(p, ph);
        r.action_axiom = r.action_axiom && perm(group_op(f, h, g)) == compose(ph, p);
        r.pairs_checked += 2;
      }
    r.inverse = r.inverse && perm(group_op(f, group_inverse(f, g), g)) == identity &&
                perm(group_op(f, g, group_inverse(f, g))) == identity;
    if (distinct.insert(std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint16_t))).second) {
      for (const auto& l : lines) {
        std::vector<int> img;
        for (int x : l) img.push_back(p[static_cast<std::size_t>(x)]);
        std::sort(img.begin(), img.end());
        if (!lines.count(img)) {
          r.lines_preserved = false;
          break;
        }
      }
    }
  });
  if (all_pairs)
    for (const auto& [g2, p2] : all)
      for (const auto& [g1, p1] : all) {
        r.action_axiom = r.action_axiom && perm(group_op(f, g2, g1)) == compose(p2, p1);
        ++r.pairs_checked;
      }
  r.distinct_permutations = distinct.size();
  for (const auto& k : kernel_elements(n, t, f)) r.kernel_trivial = r.kernel_trivial && perm(k) == identity;

  // Translations (A, I, I, 0): A -> image of 0 is a bijection, nonzero A
  // has no fixed point, and T_A T_B = T_{A+B}.
  std::set<std::size_t> images;
  for (const auto& a : cg.points) {
    const AutElement ta{a.entries, Matrix::identity(f, n + 1), Matrix::identity(f, t), 0};
    const Perm p = perm(ta);
    images.insert(p[0]);
    if (!a.entries.is_zero())
      for (std::size_t i = 0; i < np; ++i) r.translations_sharp = r.translations_sharp && p[i] != i;
    const auto& b = cg.points[np / 2];
    const AutElement tb{b.entries, Matrix::identity(f, n + 1), Matrix::identity(f, t), 0};
    const AutElement sum{mat_add(f, a.entries, b.entries), Matrix::identity(f, n + 1), Matrix::identity(f, t), 0};
    r.translations_sharp = r.translations_sharp && perm(group_op(f, ta, tb)) == perm(sum);
  }
  r.translations_sharp = r.translations_sharp && images.size() == np;
  return r;
}

}  // namespace oracle
