#ifndef CANFORM_ENGINES_HPP
#define CANFORM_ENGINES_HPP

#include <string>
#include <vector>

#include "canform/cone.hpp"
#include "canform/form.hpp"
#include "canform/matrix.hpp"
#include "canform/polytope.hpp"

namespace canform {

// Three independent routes to the canonical form of a full-dimensional
// polytope. They must agree exactly; the test suite and the `check-*` CLI
// verbs rely on that.

inline CanonicalForm interval_form(const Rat& a, const Rat& b) {
  if (!(a < b)) throw InputError("interval_form: requires a < b");
  CanonicalForm f;
  f.vars = default_vars(1);
  f.num = Poly::constant(1, b - a);
  f.poles.push_back(LinForm(-a, {Rat(1)}));  // x - a
  f.poles.push_back(LinForm(b, {Rat(-1)}));  // b - x
  return reduced(std::move(f));
}

// Canonical form of a d-simplex: |det| of the homogenized inward facet
// forms over their product. Positive on the interior by construction.
inline CanonicalForm simplex_form(const std::vector<std::vector<Rat>>& verts,
                                  std::vector<std::string> vars) {
  const int d = static_cast<int>(vars.size());
  if (static_cast<int>(verts.size()) != d + 1)
    throw InputError("simplex_form: expected d+1 vertices");
  Polytope S = hull_from_vertices(d, verts);
  if (static_cast<int>(S.facets.size()) != d + 1)
    throw InternalError("simplex_form: degenerate simplex");
  std::vector<std::vector<Rat>> cols;
  for (const auto& f : S.facets) cols.push_back(f.homogenized());
  Rat vol = det(RatMatrix::from_columns(cols));
  if (vol < 0) vol = -vol;
  CanonicalForm out;
  out.vars = std::move(vars);
  out.num = Poly::constant(d, vol);
  out.poles = S.facets;
  return reduced(std::move(out));
}

// Engine 1: sum the simplex forms of a pulling triangulation. Interior
// facet poles cancel pairwise in the sum.
inline CanonicalForm canon_triangulation(const Polytope& P) {
  Triangulation tri = pulling_triangulation(P);
  CanonicalForm total;
  total.vars = default_vars(P.dim);
  total.num = Poly(P.dim);
  for (const auto& piece : tri.pieces) {
    std::vector<std::vector<Rat>> verts;
    for (int idx : piece) verts.push_back(P.vertices[idx]);
    total = form_add(total, simplex_form(verts, total.vars));
  }
  return total;
}

// Engine 2: volume of the dual polytope (P - x)^v as a function of the
// base point x. One group of terms per vertex: triangulate the normal
// cone there and take |det| of the facet normals over the facet forms.
struct DualVolumeTerm {
  int vertex = -1;            // vertex of P owning the normal cone piece
  std::vector<int> facets;    // facet indices spanning the piece, d of them
  Rat absdet;                 // |det| of those facets' normal vectors
};

inline std::vector<DualVolumeTerm> dual_volume_terms(const Polytope& P) {
  const int d = P.dim;
  std::vector<DualVolumeTerm> terms;
  for (size_t v = 0; v < P.vertices.size(); ++v) {
    // Facets through this vertex span its normal cone.
    std::vector<int> inc;
    std::vector<std::vector<Rat>> normals;
    for (size_t fi = 0; fi < P.facets.size(); ++fi)
      if (P.facets[fi].eval(P.vertices[v]) == 0) {
        inc.push_back(static_cast<int>(fi));
        normals.push_back(primitive_vector(P.facets[fi].coeffs(), false));
      }
    Cone nc = make_cone(d, normals);
    for (const auto& piece : cone_triangulation(nc)) {
      DualVolumeTerm t;
      t.vertex = static_cast<int>(v);
      std::vector<std::vector<Rat>> cols;
      for (const auto& ray : piece.rays) {
        int match = -1;
        for (size_t k = 0; k < normals.size(); ++k)
          if (normals[k] == ray) match = inc[k];
        if (match < 0) throw InternalError("dual volume: unmatched cone ray");
        t.facets.push_back(match);
        // The determinant row must carry the same scale as the pole form
        // it divides by, so take the stored coefficients, not the
        // primitivized ray.
        cols.push_back(P.facets[match].coeffs());
      }
      Rat dv = det(RatMatrix::from_columns(cols));
      t.absdet = dv < 0 ? -dv : dv;
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

inline CanonicalForm canon_dual_volume(const Polytope& P) {
  CanonicalForm total;
  total.vars = default_vars(P.dim);
  total.num = Poly(P.dim);
  for (const auto& t : dual_volume_terms(P)) {
    CanonicalForm piece;
    piece.vars = total.vars;
    piece.num = Poly::constant(P.dim, t.absdet);
    for (int fi : t.facets) piece.poles.push_back(P.facets[fi]);
    total = form_add(total, reduced(std::move(piece)));
  }
  return total;
}

// Engine 3: triangulate the dual cone (spanned by homogenized facet
// forms); each simplicial piece contributes |det(rays)| over the product
// of the pairings X . ray. Specializing X = (1, x) recovers the affine
// canonical form.
struct LaplaceTerm {
  std::vector<std::vector<Rat>> rays;  // d+1 homogeneous rays, each length d+1
  Rat absdet;
};

inline std::vector<LaplaceTerm> laplace_terms(const Polytope& P) {
  Cone dual = dual_cone(P);
  std::vector<LaplaceTerm> terms;
  for (const auto& piece : cone_triangulation(dual)) {
    LaplaceTerm t;
    t.rays = piece.rays;
    Rat dv = det(RatMatrix::from_columns(t.rays));
    t.absdet = dv < 0 ? -dv : dv;
    terms.push_back(std::move(t));
  }
  return terms;
}

inline CanonicalForm canon_laplace(const Polytope& P) {
  const int d = P.dim;
  CanonicalForm total;
  total.vars = default_vars(d);
  total.num = Poly(d);
  for (const auto& t : laplace_terms(P)) {
    CanonicalForm piece;
    piece.vars = total.vars;
    piece.num = Poly::constant(d, t.absdet);
    for (const auto& ray : t.rays)
      piece.poles.push_back(
          LinForm(ray[0], std::vector<Rat>(ray.begin() + 1, ray.end())));
    total = form_add(total, reduced(std::move(piece)));
  }
  return total;
}

enum class Method { triangulation, dualvol, laplace };

inline CanonicalForm canonical_form(const Polytope& P,
                                    Method m = Method::triangulation) {
  if (!P.is_full_dimensional())
    throw DimensionError("canonical form: polytope must be full-dimensional");
  switch (m) {
    case Method::triangulation: return canon_triangulation(P);
    case Method::dualvol: return canon_dual_volume(P);
    case Method::laplace: return canon_laplace(P);
  }
  throw InternalError("canonical_form: unknown method");
}

}  // namespace canform

#endif
