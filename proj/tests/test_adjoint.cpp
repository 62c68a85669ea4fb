#include <catch2/catch_amalgamated.hpp>
#include <algorithm>

#include "canform/adjoint.hpp"

using namespace canform;

namespace {

std::vector<Rat> pt(std::initializer_list<int> xs) {
  return std::vector<Rat>(xs.begin(), xs.end());
}

Polytope quad() {
  return hull_from_vertices(
      2, {pt({0, 0}), pt({2, 0}), pt({1, 2}), pt({0, 1})});
}

Polytope unit_square() {
  return hull_from_vertices(
      2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})});
}

Polytope cube() {
  std::vector<std::vector<Rat>> v;
  for (int i = 0; i < 8; ++i)
    v.push_back(pt({i & 1, (i >> 1) & 1, (i >> 2) & 1}));
  return hull_from_vertices(3, v);
}

Polytope pentagon() {
  return hull_from_vertices(2, {pt({0, 0}), pt({3, 0}), pt({4, 2}),
                                pt({2, 4}), pt({0, 3})});
}

// Projective points of the residual arrangement's zero-dimensional flats,
// as primitive sign-normalized homogeneous vectors.
std::vector<std::vector<Rat>> residual_points(const Polytope& p) {
  std::vector<std::vector<Rat>> pts;
  for (const auto& fl : residual_arrangement(p)) {
    REQUIRE(fl.pdim == 0);
    pts.push_back(primitive_vector(flat_span(fl).at(0), true));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

TEST_CASE("adjoint of the quadrilateral is the line 4X0+4X1-X2") {
  Poly a = adjoint(quad());
  Poly expect(3);
  expect.add_term({1, 0, 0}, 4);
  expect.add_term({0, 1, 0}, 4);
  expect.add_term({0, 0, 1}, -1);
  REQUIRE(a == expect);
  CHECK(a.total_degree() == 1);
  // Vanishes at the two residual points (-1,0) and (0,4).
  CHECK(a.eval(pt({1, -1, 0})) == 0);
  CHECK(a.eval(pt({1, 0, 4})) == 0);
}

TEST_CASE("simplex adjoints are constant 1") {
  Polytope tri = hull_from_vertices(2, {pt({0, 0}), pt({5, 1}), pt({2, 3})});
  CHECK(adjoint(tri) == Poly::constant(3, 1));
  Polytope tet = hull_from_vertices(
      3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK(adjoint(tet) == Poly::constant(4, 1));
  CHECK(residual_arrangement(tri).empty());
  CHECK(residual_arrangement(tet).empty());
}

TEST_CASE("unit square: adjoint X0, residual points at infinity") {
  CHECK(adjoint(unit_square()) == Poly::variable(3, 0));
  auto pts = residual_points(unit_square());
  REQUIRE(pts == std::vector<std::vector<Rat>>{pt({0, 0, 1}), pt({0, 1, 0})});
}

TEST_CASE("quadrilateral residual arrangement is two affine points") {
  auto pts = residual_points(quad());
  REQUIRE(pts == std::vector<std::vector<Rat>>{pt({1, -1, 0}), pt({1, 0, 4})});
}

TEST_CASE("adjoint degree matches facet count") {
  for (const Polytope& p : {quad(), unit_square(), pentagon(), cube()}) {
    Poly a = adjoint(p);
    CHECK(a.total_degree() ==
          static_cast<int>(p.facets.size()) - p.dim - 1);
    CHECK(a.is_homogeneous());
  }
}

TEST_CASE("adjoint vanishing report on the quadrilateral") {
  AdjointReport rep = adjoint_report(quad());
  CHECK(rep.vanishes);
  CHECK(rep.degree == 1);
  CHECK(rep.residual.size() == 2);
  CHECK(rep.kernel_dim == 1);
  CHECK(rep.unique);
}

TEST_CASE("adjoint vanishing report on a pentagon: unique conic") {
  AdjointReport rep = adjoint_report(pentagon());
  CHECK(rep.vanishes);
  CHECK(rep.degree == 2);
  REQUIRE(rep.residual.size() == 5);
  for (const auto& fl : rep.residual) CHECK(fl.pdim == 0);
  CHECK(rep.kernel_dim == 1);
  CHECK(rep.unique);
}

TEST_CASE("cube residual arrangement is three lines at infinity") {
  auto flats = residual_arrangement(cube());
  REQUIRE(flats.size() == 3);
  for (const auto& fl : flats) {
    CHECK(fl.pdim == 1);
    // Every point of the flat has X0 = 0.
    for (const auto& b : flat_span(fl)) CHECK(b.at(0) == 0);
  }

  AdjointReport rep = adjoint_report(cube());
  CHECK(rep.vanishes);
  CHECK(rep.degree == 2);
  // X0^2 vanishes there, but so does X0*L for any linear L: the
  // interpolation problem on three concurrent lines is 4-dimensional.
  CHECK(rep.adjoint_poly == Poly::monomial(4, {2, 0, 0, 0}, 1));
  CHECK(rep.kernel_dim == 4);
  CHECK_FALSE(rep.unique);
}

TEST_CASE("simplex vanishing check is vacuous but unique at degree 0") {
  Polytope tet = hull_from_vertices(
      3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  AdjointReport rep = adjoint_report(tet);
  CHECK(rep.vanishes);
  CHECK(rep.residual.empty());
  CHECK(rep.kernel_dim == 1);
  CHECK(rep.unique);
}

TEST_CASE("residual arrangement dimension guard") {
  std::vector<std::vector<Rat>> verts;
  verts.push_back(std::vector<Rat>(4, Rat(0)));
  for (int i = 0; i < 4; ++i) {
    std::vector<Rat> e(4, Rat(0));
    e[i] = 1;
    verts.push_back(e);
  }
  CHECK_THROWS_AS(residual_arrangement(hull_from_vertices(4, verts)),
                  DimensionError);
}
