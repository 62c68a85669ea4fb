#ifndef CANFORM_POLYTOPE_HPP
#define CANFORM_POLYTOPE_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "canform/linform.hpp"
#include "canform/matrix.hpp"

namespace canform {

// Convex polytope with both representations kept in sync.
//
// Invariants (established by hull_from_vertices):
//  - vertices are the extreme points, in first-occurrence input order;
//  - facets are inward (>= 0 on the polytope), primitive, sorted by
//    pole_order_less, and vanish exactly on their incident vertices;
//  - incidence[i] lists the vertex indices on facet i, ascending;
//  - centroid is the vertex average, strictly interior.
//
// Minkowski summands are allowed to be degenerate (affine span smaller than
// the ambient dimension); such instances carry vertices only and have no
// facet data. Everything else requires a full-dimensional polytope.
struct Polytope {
  int dim = 0;
  std::vector<std::vector<Rat>> vertices;
  std::vector<LinForm> facets;
  std::vector<std::vector<int>> incidence;
  std::vector<Rat> centroid;

  bool is_full_dimensional() const { return !facets.empty(); }
};

namespace detail {

// Enumerates k-subsets of {0..n-1} in lexicographic order.
inline void for_each_subset(int n, int k,
                            const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<std::vector<Rat>> dedupe_points(
    const std::vector<std::vector<Rat>>& pts) {
  std::vector<std::vector<Rat>> out;
  for (const auto& p : pts)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

}  // namespace detail

inline std::vector<Rat> centroid_of(const std::vector<std::vector<Rat>>& pts) {
  std::vector<Rat> c(pts.at(0).size(), Rat(0));
  for (const auto& p : pts)
    for (size_t j = 0; j < c.size(); ++j) c[j] += p[j];
  for (auto& x : c) x /= Rat(static_cast<int>(pts.size()));
  return c;
}

// Exact convex hull by supporting-hyperplane candidacy: every facet
// hyperplane is spanned by some d of the input points, so testing each
// d-subset for one-sidedness finds them all. Quadratic in subsets but exact
// and dimension-uniform; inputs here are desk-scale.
inline Polytope hull_from_vertices(int dim,
                                   const std::vector<std::vector<Rat>>& input) {
  for (const auto& p : input)
    if (static_cast<int>(p.size()) != dim)
      throw InputError("hull: point dimension mismatch");
  const auto pts = detail::dedupe_points(input);
  const int n = static_cast<int>(pts.size());
  if (n < dim + 1)
    throw DimensionError("hull: need at least dim+1 distinct points");
  if (affine_rank(pts) < dim)
    throw DimensionError("hull: points span a lower-dimensional flat");

  // Facet candidates from d-subsets.
  std::vector<LinForm> facets;
  detail::for_each_subset(n, dim, [&](const std::vector<int>& sub) {
    // Homogeneous system (c0, a) . (1, p) = 0 for each chosen point.
    RatMatrix m(dim, dim + 1);
    for (int i = 0; i < dim; ++i) {
      m.at(i, 0) = 1;
      for (int j = 0; j < dim; ++j) m.at(i, j + 1) = pts[sub[i]][j];
    }
    auto ns = nullspace(m);
    if (ns.size() != 1) return;  // affinely dependent subset
    LinForm h = LinForm::from_homogenized(ns[0]);
    bool pos = false, neg = false;
    for (const auto& p : pts) {
      const int s = sign_of(h.eval(p));
      pos = pos || s > 0;
      neg = neg || s < 0;
      if (pos && neg) return;  // not supporting
    }
    if (neg) h = -h;  // orient inward
    h = h.primitive_same_sign();
    if (std::find(facets.begin(), facets.end(), h) == facets.end())
      facets.push_back(h);
  });

  // A point is extreme exactly when its active facet normals span R^d.
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<Rat>> active;
    for (const auto& f : facets)
      if (f.eval(pts[i]) == 0) active.push_back(f.coeffs());
    if (!active.empty() && rank(RatMatrix::from_rows(active)) == dim)
      keep.push_back(i);
  }

  Polytope p;
  p.dim = dim;
  for (int i : keep) p.vertices.push_back(pts[i]);
  std::sort(facets.begin(), facets.end(), pole_order_less);
  p.facets = std::move(facets);
  p.incidence.resize(p.facets.size());
  for (size_t f = 0; f < p.facets.size(); ++f)
    for (size_t v = 0; v < p.vertices.size(); ++v)
      if (p.facets[f].eval(p.vertices[v]) == 0)
        p.incidence[f].push_back(static_cast<int>(v));
  p.centroid = centroid_of(p.vertices);
  return p;
}

// Degenerate vertex-set polytope (Minkowski summand use only).
inline Polytope vertex_set_polytope(int dim,
                                    const std::vector<std::vector<Rat>>& pts) {
  if (pts.empty()) throw InputError("vertex set: no points");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != dim)
      throw InputError("vertex set: point dimension mismatch");
  if (affine_rank(pts) == dim) return hull_from_vertices(dim, pts);
  Polytope p;
  p.dim = dim;
  p.vertices = detail::dedupe_points(pts);
  p.centroid = centroid_of(p.vertices);
  return p;
}

inline bool contains(const Polytope& p, std::span<const Rat> x) {
  for (const auto& f : p.facets)
    if (f.eval(x) < 0) return false;
  return true;
}

inline bool strictly_contains(const Polytope& p, std::span<const Rat> x) {
  for (const auto& f : p.facets)
    if (f.eval(x) <= 0) return false;
  return true;
}

// Pieces of a triangulation, as sorted vertex-index sets into the parent.
struct Triangulation {
  std::vector<std::vector<int>> pieces;
};

namespace detail {

// Pulling triangulation of the face spanned by vertex set S (dimension k):
// cone the lowest-index vertex over the triangulated facets avoiding it.
inline void pulling_rec(const Polytope& p, const std::vector<int>& S, int k,
                        std::vector<std::vector<int>>& out) {
  if (static_cast<int>(S.size()) == k + 1) {
    out.push_back(S);
    return;
  }
  const int apex = S.front();  // S is sorted ascending
  std::vector<std::vector<Rat>> Spts;
  for (int i : S) Spts.push_back(p.vertices[i]);

  // Facets of the face arise as intersections with polytope facets.
  std::vector<std::vector<int>> subfaces;
  for (const auto& inc : p.incidence) {
    std::vector<int> T;
    std::set_intersection(S.begin(), S.end(), inc.begin(), inc.end(),
                          std::back_inserter(T));
    if (T.size() == S.size() || T.empty()) continue;
    std::vector<std::vector<Rat>> Tpts;
    for (int i : T) Tpts.push_back(p.vertices[i]);
    if (affine_rank(Tpts) != k - 1) continue;
    if (std::find(subfaces.begin(), subfaces.end(), T) == subfaces.end())
      subfaces.push_back(T);
  }
  for (const auto& T : subfaces) {
    if (std::binary_search(T.begin(), T.end(), apex)) continue;
    std::vector<std::vector<int>> sub;
    pulling_rec(p, T, k - 1, sub);
    for (auto& piece : sub) {
      piece.insert(piece.begin(), apex);  // stays sorted: apex = min(S)
      out.push_back(std::move(piece));
    }
  }
}

}  // namespace detail

inline Triangulation pulling_triangulation(const Polytope& p) {
  if (!p.is_full_dimensional())
    throw InputError("triangulation: degenerate polytope");
  std::vector<int> all(p.vertices.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  Triangulation t;
  detail::pulling_rec(p, all, p.dim, t.pieces);
  return t;
}

// Normalized volume of a simplex piece: |det| of the edge matrix, which is
// d! times the Euclidean volume.
inline Rat piece_volume(const Polytope& p, const std::vector<int>& piece) {
  const int d = p.dim;
  RatMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.at(i, j) = p.vertices[piece[i + 1]][j] - p.vertices[piece[0]][j];
  Rat dv = det(m);
  return dv < 0 ? Rat(-dv) : dv;
}

inline Rat normalized_volume(const Polytope& p) {
  Rat acc = 0;
  for (const auto& piece : pulling_triangulation(p).pieces)
    acc += piece_volume(p, piece);
  return acc;
}

// Vertex enumeration for an H-representation; rejects unbounded or empty
// input. Redundant inequalities are tolerated and dropped by the hull.
inline Polytope polytope_from_hrep(int dim, const std::vector<LinForm>& forms_in) {
  std::vector<LinForm> forms;
  for (const auto& f : forms_in) {
    if (static_cast<int>(f.coeffs().size()) != dim)
      throw InputError("h-rep: facet arity mismatch");
    if (f.is_constant()) {
      if (f.c0() < 0) throw InputError("h-rep: infeasible constant constraint");
      continue;  // trivially true
    }
    forms.push_back(f);
  }
  if (forms.empty()) throw UnboundedError("h-rep: no constraints");
  const int m = static_cast<int>(forms.size());

  // Recession cone must be {0}: full-rank normals and no extreme direction.
  std::vector<std::vector<Rat>> normals;
  for (const auto& f : forms) normals.push_back(f.coeffs());
  if (rank(RatMatrix::from_rows(normals)) < dim)
    throw UnboundedError("h-rep: unbounded (normals do not span)");
  bool unbounded = false;
  detail::for_each_subset(m, dim - 1, [&](const std::vector<int>& sub) {
    if (unbounded) return;
    std::vector<std::vector<Rat>> rows;
    for (int i : sub) rows.push_back(forms[i].coeffs());
    auto ns = nullspace(RatMatrix::from_rows(rows));
    if (rows.empty()) ns = nullspace(RatMatrix(0, dim));
    if (ns.size() != 1) return;
    for (const auto& dir : {ns[0], [&] {
           std::vector<Rat> neg(ns[0]);
           for (auto& x : neg) x = -x;
           return neg;
         }()}) {
      bool feasible = true;
      for (const auto& f : forms) {
        Rat dot = 0;
        for (int j = 0; j < dim; ++j) dot += f.coeffs()[j] * dir[j];
        if (dot < 0) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        unbounded = true;
        return;
      }
    }
  });
  if (unbounded) throw UnboundedError("h-rep: unbounded (recession direction)");

  // Basic feasible solutions are the vertices.
  std::vector<std::vector<Rat>> verts;
  detail::for_each_subset(m, dim, [&](const std::vector<int>& sub) {
    RatMatrix a(dim, dim);
    std::vector<Rat> b(dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) a.at(i, j) = forms[sub[i]].coeffs()[j];
      b[i] = -forms[sub[i]].c0();
    }
    auto x = linear_solve(a, b);
    if (!x) return;
    for (const auto& f : forms)
      if (f.eval(*x) < 0) return;
    if (std::find(verts.begin(), verts.end(), *x) == verts.end())
      verts.push_back(*x);
  });
  if (verts.empty()) throw InputError("h-rep: empty polytope");
  if (affine_rank(verts) < dim)
    throw DimensionError("h-rep: empty interior (lower-dimensional)");
  return hull_from_vertices(dim, verts);
}

// Polar dual of P - x for x strictly interior: conv{ a_i / l_i(x) } over the
// inward facets l_i = c_i + <a_i, .>. The polar's vertices lie on the rays
// of the normal fan, scaled by the reciprocal facet heights.
inline Polytope polar_at(const Polytope& p, std::span<const Rat> x) {
  if (!p.is_full_dimensional()) throw InputError("polar: degenerate polytope");
  std::vector<std::vector<Rat>> verts;
  for (const auto& f : p.facets) {
    const Rat h = f.eval(x);
    if (h <= 0) throw InputError("polar: point not strictly interior");
    std::vector<Rat> v(f.coeffs());
    for (auto& c : v) c /= h;
    verts.push_back(std::move(v));
  }
  return hull_from_vertices(p.dim, verts);
}

// Weighted Minkowski sum. offsets[i][j] is the support offset of summand j
// against facet i of the sum: facet i of sum(w) is  <a_i, y> + sum_j w_j *
// offsets[i][j] >= 0, for every strictly positive weight vector with the
// same combinatorics. That linearity in w is what dual_mixed_volume uses.
struct MinkowskiSum {
  Polytope sum;
  std::vector<std::vector<Rat>> offsets;
};

inline MinkowskiSum minkowski_sum(const std::vector<Polytope>& ps,
                                  const std::vector<Rat>& weights) {
  if (ps.empty() || ps.size() != weights.size())
    throw InputError("minkowski: need one positive weight per summand");
  const int dim = ps[0].dim;
  for (const auto& q : ps)
    if (q.dim != dim) throw InputError("minkowski: ambient dimension mismatch");
  for (const auto& w : weights)
    if (w <= 0) throw InputError("minkowski: weights must be positive");

  auto hull_at = [&](const std::vector<Rat>& w) {
    std::vector<std::vector<Rat>> cand = {std::vector<Rat>(dim, Rat(0))};
    for (size_t j = 0; j < ps.size(); ++j) {
      std::vector<std::vector<Rat>> next;
      for (const auto& base : cand) {
        for (const auto& v : ps[j].vertices) {
          std::vector<Rat> s(base);
          for (int c = 0; c < dim; ++c) s[c] += w[j] * v[c];
          next.push_back(std::move(s));
        }
      }
      cand = detail::dedupe_points(next);
      if (cand.size() > 20000) throw InputError("minkowski: too many vertices");
    }
    return hull_from_vertices(dim, cand);
  };

  Polytope sum = hull_at(weights);

  // Combinatorics guard: the facet normal set must be weight-independent;
  // recheck at a jittered weight vector and refuse on mismatch.
  std::vector<Rat> jittered(weights);
  for (size_t j = 0; j < jittered.size(); ++j)
    jittered[j] *= Rat(977 + 31 * static_cast<int>(j)) / Rat(977);
  auto normal_set = [](const Polytope& q) {
    std::vector<std::vector<Rat>> ns;
    for (const auto& f : q.facets)
      ns.push_back(primitive_vector(f.coeffs(), false));
    std::sort(ns.begin(), ns.end());
    return ns;
  };
  if (normal_set(sum) != normal_set(hull_at(jittered)))
    throw InputError("minkowski: weights hit a non-generic configuration");

  MinkowskiSum out;
  out.offsets.resize(sum.facets.size());
  for (size_t i = 0; i < sum.facets.size(); ++i) {
    const auto& a = sum.facets[i].coeffs();
    Rat check = 0;
    for (size_t j = 0; j < ps.size(); ++j) {
      Rat mn;
      bool first = true;
      for (const auto& v : ps[j].vertices) {
        Rat dot = 0;
        for (int c = 0; c < dim; ++c) dot += a[c] * v[c];
        if (first || dot < mn) mn = dot;
        first = false;
      }
      out.offsets[i].push_back(-mn);
      check += weights[j] * (-mn);
    }
    if (check != sum.facets[i].c0())
      throw InternalError("minkowski: support offsets disagree with hull");
  }
  out.sum = std::move(sum);
  return out;
}

// Facet i of p, flattened to d-1 coordinates by dropping `pivot` (valid
// whenever the facet form has a nonzero pivot coefficient).
inline Polytope facet_chart(const Polytope& p, int facet_idx, int pivot) {
  std::vector<std::vector<Rat>> pts;
  for (int vi : p.incidence.at(facet_idx)) {
    std::vector<Rat> q;
    for (int c = 0; c < p.dim; ++c)
      if (c != pivot) q.push_back(p.vertices[vi][c]);
    pts.push_back(std::move(q));
  }
  return hull_from_vertices(p.dim - 1, pts);
}

}  // namespace canform

#endif
