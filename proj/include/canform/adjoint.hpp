#ifndef CANFORM_ADJOINT_HPP
#define CANFORM_ADJOINT_HPP

#include <algorithm>
#include <vector>

#include "canform/engines.hpp"

namespace canform {

// Adjoint polynomial: the homogenized canonical-form numerator in X0..Xd,
// content-normalized with positive grevlex-leading coefficient. Its degree
// is pinned to (#facets) - d - 1 by the reducedness of the form.
inline Poly adjoint(const Polytope& P) {
  HomogeneousForm h = homogenize(canonical_form(P));
  Poly a = h.num * (Rat(1) / h.num.content());
  if (a.leading_coeff() < 0) a = -a;
  const int expect = static_cast<int>(P.facets.size()) - P.dim - 1;
  if (a.total_degree() != expect)
    throw InternalError("adjoint: degree disagrees with facet count");
  return a;
}

// A flat of the facet hyperplane arrangement, as the reduced row echelon
// stack of its defining homogeneous linear forms. Projective dimension
// d - rank; the span is the nullspace of the stack.
struct Flat {
  std::vector<std::vector<Rat>> normals;
  int pdim = -1;
  std::vector<int> facets;  // one generating facet subset
};

inline std::vector<std::vector<Rat>> flat_span(const Flat& f) {
  return nullspace(RatMatrix::from_rows(f.normals));
}

// Flats that contain no face of P, i.e. pass through no vertex; maximal
// under inclusion. A flat generated by facet subset S contains a vertex
// exactly when S is part of that vertex's incidence set, so the test is
// combinatorial and representation-independent.
inline std::vector<Flat> residual_arrangement(const Polytope& P) {
  const int d = P.dim;
  if (!P.is_full_dimensional())
    throw InputError("residual arrangement: degenerate polytope");
  if (d > 3)
    throw DimensionError("residual arrangement: implemented for d <= 3");
  const int f = static_cast<int>(P.facets.size());

  std::vector<std::vector<Rat>> hom;
  for (const auto& l : P.facets) hom.push_back(l.homogenized());
  std::vector<std::vector<int>> at_vertex(P.vertices.size());
  for (size_t fi = 0; fi < P.facets.size(); ++fi)
    for (int v : P.incidence[fi]) at_vertex[v].push_back(static_cast<int>(fi));

  std::vector<Flat> flats;
  for (int k = 1; k <= std::min(f, d); ++k) {
    detail::for_each_subset(f, k, [&](const std::vector<int>& S) {
      for (const auto& inc : at_vertex)
        if (std::includes(inc.begin(), inc.end(), S.begin(), S.end()))
          return;  // hyperplanes meet at a vertex: not residual

      std::vector<std::vector<Rat>> rows;
      for (int i : S) rows.push_back(hom[i]);
      RatMatrix r = rref(RatMatrix::from_rows(rows));
      std::vector<std::vector<Rat>> basis;
      for (int i = 0; i < r.rows(); ++i) {
        std::vector<Rat> row(r.row(i));
        if (std::any_of(row.begin(), row.end(),
                        [](const Rat& x) { return x != 0; }))
          basis.push_back(std::move(row));
      }
      if (static_cast<int>(basis.size()) == d + 1) return;  // empty flat
      for (const auto& known : flats)
        if (known.normals == basis) return;
      Flat fl;
      fl.normals = std::move(basis);
      fl.pdim = d - static_cast<int>(fl.normals.size());
      fl.facets = S;
      flats.push_back(std::move(fl));
    });
  }

  // Keep only inclusion-maximal flats: A sits inside B when B's normal
  // rows are linear combinations of A's.
  std::vector<Flat> maximal;
  for (size_t i = 0; i < flats.size(); ++i) {
    bool strict_super = false;
    for (size_t j = 0; j < flats.size() && !strict_super; ++j) {
      if (i == j || flats[j].normals.size() >= flats[i].normals.size())
        continue;
      std::vector<std::vector<Rat>> stacked = flats[i].normals;
      for (const auto& row : flats[j].normals) stacked.push_back(row);
      strict_super = rank(RatMatrix::from_rows(stacked)) ==
                     static_cast<int>(flats[i].normals.size());
    }
    if (!strict_super) maximal.push_back(flats[i]);
  }
  std::sort(maximal.begin(), maximal.end(), [](const Flat& a, const Flat& b) {
    if (a.pdim != b.pdim) return a.pdim > b.pdim;
    return a.normals < b.normals;
  });
  return maximal;
}

// Enumerates exponent vectors of total degree deg in nv variables,
// grevlex-ascending like Poly iteration.
inline std::vector<std::vector<int>> monomials_of_degree(int nv, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(nv, 0);
  const std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nv - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int c = left; c >= 0; --c) {
      e[pos] = c;
      rec(pos + 1, left - c);
    }
  };
  if (nv == 0) return out;
  rec(0, deg);
  return out;
}

// Exact sample points spanning the vanishing conditions on a flat, enough
// that a degree-deg form vanishing at all of them vanishes on the flat.
// Points: 1; lines: deg+1 distinct projective points.
inline std::vector<std::vector<Rat>> flat_probe_points(const Flat& fl,
                                                       int deg) {
  auto span = flat_span(fl);
  std::vector<std::vector<Rat>> pts;
  if (fl.pdim == 0) {
    pts.push_back(span.at(0));
    return pts;
  }
  if (fl.pdim != 1)
    throw InternalError("flat probing: unexpected flat dimension");
  const auto& b0 = span.at(0);
  const auto& b1 = span.at(1);
  for (int t = 0; t < deg; ++t) {
    std::vector<Rat> p(b0);
    for (size_t i = 0; i < p.size(); ++i) p[i] += Rat(t) * b1[i];
    pts.push_back(std::move(p));
  }
  pts.push_back(b1);
  return pts;
}

struct AdjointReport {
  Poly adjoint_poly;
  int degree = 0;
  std::vector<Flat> residual;
  bool vanishes = true;
  // Dimension of the space of degree-`degree` forms vanishing on the
  // residual arrangement; 1 means the adjoint is the unique solution of
  // the interpolation problem (up to scale).
  int kernel_dim = 0;
  bool unique = false;
};

inline AdjointReport adjoint_report(const Polytope& P) {
  AdjointReport rep;
  rep.adjoint_poly = adjoint(P);
  rep.degree = rep.adjoint_poly.total_degree();
  rep.residual = residual_arrangement(P);

  std::vector<std::vector<Rat>> probes;
  for (const auto& fl : rep.residual)
    for (auto& p : flat_probe_points(fl, rep.degree)) {
      if (rep.adjoint_poly.eval(p) != 0) rep.vanishes = false;
      probes.push_back(std::move(p));
    }

  const auto monos = monomials_of_degree(P.dim + 1, rep.degree);
  if (probes.empty()) {
    rep.kernel_dim = static_cast<int>(monos.size());
  } else {
    RatMatrix m(static_cast<int>(probes.size()), static_cast<int>(monos.size()));
    for (size_t r = 0; r < probes.size(); ++r)
      for (size_t c = 0; c < monos.size(); ++c) {
        Rat v = 1;
        for (size_t k = 0; k < monos[c].size(); ++k)
          for (int e = 0; e < monos[c][k]; ++e) v *= probes[r][k];
        m.at(static_cast<int>(r), static_cast<int>(c)) = v;
      }
    rep.kernel_dim = static_cast<int>(monos.size()) - rank(m);
  }
  rep.unique = rep.kernel_dim == 1;
  return rep;
}

}  // namespace canform

#endif
