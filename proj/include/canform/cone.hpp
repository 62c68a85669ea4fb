#ifndef CANFORM_CONE_HPP
#define CANFORM_CONE_HPP

#include <algorithm>
#include <vector>

#include "canform/polytope.hpp"

namespace canform {

// Polyhedral cone spanned by finitely many rays (primitive integer vectors,
// pairwise non-parallel). The cone may live in a proper subspace of the
// ambient space; rank is computed where needed.
struct Cone {
  int ambient = 0;
  std::vector<std::vector<Rat>> rays;
};

inline Cone make_cone(int ambient, std::vector<std::vector<Rat>> rays) {
  Cone c;
  c.ambient = ambient;
  for (auto& r : rays) {
    if (static_cast<int>(r.size()) != ambient)
      throw InputError("cone: ray dimension mismatch");
    r = primitive_vector(r, false);
    bool zero = std::all_of(r.begin(), r.end(),
                            [](const Rat& x) { return x == 0; });
    if (zero) throw InputError("cone: zero ray");
    bool dup = false;
    for (const auto& s : c.rays) {
      if (s == r) {
        dup = true;
        break;
      }
      std::vector<Rat> neg(r);
      for (auto& x : neg) x = -x;
      if (s == neg) throw InputError("cone: opposite rays (not pointed)");
    }
    if (!dup) c.rays.push_back(std::move(r));
  }
  if (c.rays.empty()) throw InputError("cone: no rays");
  return c;
}

// Cone over P placed at height 1: rays (1, v) per vertex, vertex order.
inline Cone homogeneous_cone(const Polytope& p) {
  std::vector<std::vector<Rat>> rays;
  for (const auto& v : p.vertices) {
    std::vector<Rat> r;
    r.reserve(p.dim + 1);
    r.push_back(1);
    r.insert(r.end(), v.begin(), v.end());
    rays.push_back(std::move(r));
  }
  return make_cone(p.dim + 1, std::move(rays));
}

// Dual of the homogeneous cone: generated by the homogenized inward facet
// forms, in facet order. Pairs nonnegatively with every (1, v).
inline Cone dual_cone(const Polytope& p) {
  if (!p.is_full_dimensional()) throw InputError("dual cone: degenerate polytope");
  std::vector<std::vector<Rat>> rays;
  for (const auto& f : p.facets) rays.push_back(f.homogenized());
  return make_cone(p.dim + 1, std::move(rays));
}

// Inner normal fan: one maximal cone per vertex, spanned by the primitive
// normals of the incident facets (facet order).
struct Fan {
  std::vector<Cone> maxcones;  // aligned with vertex indices
};

inline Fan normal_fan(const Polytope& p) {
  if (!p.is_full_dimensional()) throw InputError("normal fan: degenerate polytope");
  Fan fan;
  fan.maxcones.resize(p.vertices.size());
  for (size_t v = 0; v < p.vertices.size(); ++v) {
    std::vector<std::vector<Rat>> rays;
    for (size_t f = 0; f < p.facets.size(); ++f)
      if (std::binary_search(p.incidence[f].begin(), p.incidence[f].end(),
                             static_cast<int>(v)))
        rays.push_back(p.facets[f].coeffs());
    fan.maxcones[v] = make_cone(p.dim, std::move(rays));
  }
  return fan;
}

inline int cone_rank(const Cone& c) {
  return rank(RatMatrix::from_rows(c.rays));
}

inline bool cone_is_simplicial(const Cone& c) {
  return cone_rank(c) == static_cast<int>(c.rays.size());
}

// Pointedness via Caratheodory: the cone has a line exactly when 0 is a
// convex combination of the rays, and then already of an affinely
// independent subset, where barycentric coordinates are unique.
inline bool cone_is_pointed(const Cone& c) {
  const int n = c.ambient;
  const int m = static_cast<int>(c.rays.size());
  bool contains_zero = false;
  for (int s = 1; s <= std::min(m, n + 1) && !contains_zero; ++s) {
    detail::for_each_subset(m, s, [&](const std::vector<int>& sub) {
      if (contains_zero) return;
      RatMatrix a(n + 1, s);
      for (int j = 0; j < s; ++j) {
        for (int i = 0; i < n; ++i) a.at(i, j) = c.rays[sub[j]][i];
        a.at(n, j) = 1;
      }
      // Solve a * lambda = (0,..,0,1); only full-column-rank subsets matter.
      RatMatrix aug(n + 2, s + 1);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j < s; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, s) = (i == n) ? 1 : 0;
      }
      RatMatrix r = rref(aug);
      // Consistency: no pivot in the last column; uniqueness: s pivots.
      int pivots = 0;
      bool inconsistent = false;
      for (int i = 0; i < r.rows(); ++i) {
        int lead = -1;
        for (int j = 0; j <= s; ++j)
          if (r.at(i, j) != 0) {
            lead = j;
            break;
          }
        if (lead == s) inconsistent = true;
        else if (lead >= 0) ++pivots;
      }
      if (inconsistent || pivots != s) return;
      std::vector<Rat> lambda(s);
      for (int i = 0; i < s; ++i) lambda[i] = r.at(i, s);
      for (const auto& l : lambda)
        if (l < 0) return;
      contains_zero = true;
    });
  }
  return !contains_zero;
}

// Supporting hyperplane of a cone facet together with the rays it contains.
struct ConeFacet {
  std::vector<Rat> normal;    // h with <h, ray> >= 0 for all rays
  std::vector<int> rays_on;   // indices with <h, ray> = 0
};

// Facets of a pointed cone of any rank: candidate normals live in the span
// and vanish on rank-1-deficient ray subsets; one-sidedness picks facets.
inline std::vector<ConeFacet> cone_facets(const Cone& c) {
  const int n = c.ambient;
  const int m = static_cast<int>(c.rays.size());
  const int k = cone_rank(c);
  // Orthonormal-free span basis: nonzero rows of the rref of the ray matrix.
  RatMatrix rr = rref(RatMatrix::from_rows(c.rays));
  std::vector<std::vector<Rat>> basis;
  for (int i = 0; i < rr.rows(); ++i) {
    bool nz = false;
    for (int j = 0; j < n; ++j)
      if (rr.at(i, j) != 0) nz = true;
    if (nz) basis.push_back(rr.row(i));
  }

  std::vector<ConeFacet> out;
  detail::for_each_subset(m, k - 1, [&](const std::vector<int>& sub) {
    // h = y . basis must vanish on the chosen rays.
    RatMatrix cond(k - 1, k);
    for (int i = 0; i < k - 1; ++i)
      for (int a = 0; a < k; ++a) {
        Rat dot = 0;
        for (int j = 0; j < n; ++j) dot += basis[a][j] * c.rays[sub[i]][j];
        cond.at(i, a) = dot;
      }
    auto ns = nullspace(cond);
    if (ns.size() != 1) return;
    std::vector<Rat> h(n, Rat(0));
    for (int a = 0; a < k; ++a)
      for (int j = 0; j < n; ++j) h[j] += ns[0][a] * basis[a][j];
    bool pos = false, neg = false;
    std::vector<int> on;
    for (int i = 0; i < m; ++i) {
      Rat dot = 0;
      for (int j = 0; j < n; ++j) dot += h[j] * c.rays[i][j];
      const int s = sign_of(dot);
      if (s == 0) on.push_back(i);
      pos = pos || s > 0;
      neg = neg || s < 0;
    }
    if (pos && neg) return;   // not supporting
    if (!pos && !neg) return; // h orthogonal to the span: impossible unless 0
    if (neg)
      for (auto& x : h) x = -x;
    h = primitive_vector(h, true);
    for (const auto& f : out)
      if (f.rays_on == on && f.normal == h) return;
    out.push_back({std::move(h), std::move(on)});
  });
  return out;
}

namespace detail {

inline std::vector<std::vector<std::vector<Rat>>> cone_triang_rec(
    const Cone& c) {
  if (cone_is_simplicial(c)) return {c.rays};
  // Pull the lexicographically smallest ray; canonical, input-order free.
  size_t apex = 0;
  for (size_t i = 1; i < c.rays.size(); ++i)
    if (c.rays[i] < c.rays[apex]) apex = i;
  std::vector<std::vector<std::vector<Rat>>> pieces;
  for (const auto& facet : cone_facets(c)) {
    if (std::find(facet.rays_on.begin(), facet.rays_on.end(),
                  static_cast<int>(apex)) != facet.rays_on.end())
      continue;
    Cone sub;
    sub.ambient = c.ambient;
    for (int i : facet.rays_on) sub.rays.push_back(c.rays[i]);
    for (auto piece : cone_triang_rec(sub)) {
      piece.push_back(c.rays[apex]);
      pieces.push_back(std::move(piece));
    }
  }
  return pieces;
}

}  // namespace detail

// Pulling triangulation into simplicial subcones with rays among c.rays.
// Deterministic: the pivot is the lexicographically smallest ray at every
// level; pieces come out with sorted rays, sorted among each other.
inline std::vector<Cone> cone_triangulation(const Cone& c) {
  if (!cone_is_pointed(c))
    throw InputError("cone triangulation: cone is not pointed");
  auto raw = detail::cone_triang_rec(c);
  for (auto& piece : raw) std::sort(piece.begin(), piece.end());
  std::sort(raw.begin(), raw.end());
  std::vector<Cone> out;
  for (auto& piece : raw) {
    Cone s;
    s.ambient = c.ambient;
    s.rays = std::move(piece);
    out.push_back(std::move(s));
  }
  return out;
}

// Closed membership test: is u a nonnegative combination of the rays?
inline bool cone_contains(const Cone& c, const std::vector<Rat>& u) {
  for (const auto& simp : cone_triangulation(c)) {
    const int n = c.ambient;
    const int s = static_cast<int>(simp.rays.size());
    RatMatrix aug(n, s + 1);
    for (int j = 0; j < s; ++j)
      for (int i = 0; i < n; ++i) aug.at(i, j) = simp.rays[j][i];
    for (int i = 0; i < n; ++i) aug.at(i, s) = u[i];
    RatMatrix r = rref(aug);
    int pivots = 0;
    bool inconsistent = false;
    for (int i = 0; i < n; ++i) {
      int lead = -1;
      for (int j = 0; j <= s; ++j)
        if (r.at(i, j) != 0) {
          lead = j;
          break;
        }
      if (lead == s) inconsistent = true;
      else if (lead >= 0) ++pivots;
    }
    if (inconsistent || pivots != s) continue;
    bool ok = true;
    for (int i = 0; i < s; ++i)
      if (r.at(i, s) < 0) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace canform

#endif
