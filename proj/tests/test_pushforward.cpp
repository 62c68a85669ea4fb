#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "canform/pushforward.hpp"

using namespace canform;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<Rat> pt(std::initializer_list<int> xs) {
  return std::vector<Rat>(xs.begin(), xs.end());
}

Polytope quad() {
  return hull_from_vertices(
      2, {pt({0, 0}), pt({2, 0}), pt({1, 2}), pt({0, 1})});
}

Polytope interval01() { return hull_from_vertices(1, {pt({0}), pt({1})}); }

// Degree-two map onto the quadrilateral: heights W over the square's
// lattice points V.
std::vector<std::vector<Rat>> quad_W() {
  return {pt({1, 0, 0}), pt({1, 2, 0}), pt({1, 1, 2}), pt({1, 0, 1})};
}

std::vector<std::vector<int>> square_V() {
  return {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}};
}

// x = z^k / (1 + z^k) on the unit interval; the fiber over x consists
// of the k-th roots of x/(1-x).
std::vector<std::vector<Rat>> interval_W() { return {pt({1, 0}), pt({1, 1})}; }

std::vector<std::vector<int>> power_V(int k) { return {{1, 0}, {1, k}}; }

}  // namespace

TEST_CASE("component assembly matches the worked map") {
  const MonomialMap m = build_map(quad_W(), square_V());
  REQUIRE(m.d == 2);
  REQUIRE(m.components.size() == 3);

  Poly n0(2), n1(2), n2(2);
  n0.add_term({0, 0}, 1);
  n0.add_term({1, 0}, 1);
  n0.add_term({1, 1}, 1);
  n0.add_term({0, 1}, 1);
  n1.add_term({1, 0}, 2);
  n1.add_term({1, 1}, 1);
  n2.add_term({1, 1}, 2);
  n2.add_term({0, 1}, 1);
  CHECK(m.components[0] == n0);
  CHECK(m.components[1] == n1);
  CHECK(m.components[2] == n2);
}

TEST_CASE("translating the lattice does not change the components") {
  // The support is shifted into the nonnegative orthant either way, so a
  // translated lattice assembles the same polynomials.
  std::vector<std::vector<int>> shifted;
  for (const auto& v : square_V())
    shifted.push_back({1, v[1] - 2, v[2] - 1});
  const MonomialMap a = build_map(quad_W(), square_V());
  const MonomialMap b = build_map(quad_W(), shifted);
  for (int k = 0; k <= 2; ++k) CHECK(a.components[k] == b.components[k]);
}

TEST_CASE("oriented matroid comparison") {
  SECTION("the worked pair agrees") {
    const CheckReport rep = oriented_matroid_check(quad_W(), square_V());
    CHECK(rep.passed);
    // C(4,3) maximal minors, all checked.
    CHECK(rep.witnesses.back()["subsets"] == 4);
  }
  SECTION("a point set agrees with itself") {
    std::vector<std::vector<Rat>> w;
    for (const auto& v : square_V()) w.push_back(pt({v[0], v[1], v[2]}));
    CHECK(oriented_matroid_check(w, square_V()).passed);
  }
  SECTION("swapping two lattice points flips a minor") {
    auto v = square_V();
    std::swap(v[1], v[3]);
    const CheckReport rep = oriented_matroid_check(quad_W(), v);
    CHECK_FALSE(rep.passed);
    bool saw = false;
    for (const auto& w : rep.witnesses) saw = saw || w.contains("mismatch");
    CHECK(saw);
  }
  SECTION("malformed inputs are rejected") {
    CHECK_THROWS_AS(oriented_matroid_check({}, {}), InputError);
    CHECK_THROWS_WITH(
        oriented_matroid_check({pt({1, 0}), pt({1})}, power_V(1)),
        ContainsSubstring("ragged"));
    CHECK_THROWS_WITH(
        oriented_matroid_check(interval_W(), {{1, 0}, {2, 1}}),
        ContainsSubstring("start with 1"));
    CHECK_THROWS_WITH(
        oriented_matroid_check({pt({1, 0, 0}), pt({1, 1, 0})},
                               {{1, 0, 0}, {1, 1, 0}}),
        ContainsSubstring("fewer vectors than dimension"));
  }
}

TEST_CASE("preimages of the worked sample") {
  const MonomialMap m = build_map(quad_W(), square_V());
  const std::vector<Rat> x{Rat(1, 2), Rat(1, 2)};
  const auto z = preimages(m, x);
  REQUIRE(z.size() == 2);

  // Both fiber points are real here; sorted by the first coordinate.
  const double s5 = std::sqrt(5.0);
  CHECK_THAT(z[0][0].real(), WithinAbs(-s5 / 5.0, 1e-9));
  CHECK_THAT(z[0][1].real(), WithinAbs(-(s5 + 1.0) / 2.0, 1e-9));
  CHECK_THAT(z[1][0].real(), WithinAbs(s5 / 5.0, 1e-9));
  CHECK_THAT(z[1][1].real(), WithinAbs((s5 - 1.0) / 2.0, 1e-9));
  for (const auto& zz : z)
    for (const auto& zi : zz) CHECK_THAT(zi.imag(), WithinAbs(0.0, 1e-9));

  // Each preimage actually maps to the sample.
  for (const auto& zz : z) {
    const Complex n0 = detail::ceval(m.components[0], zz);
    for (int k = 1; k <= 2; ++k) {
      const Complex ratio = detail::ceval(m.components[k], zz) / n0;
      CHECK_THAT(ratio.real(), WithinAbs(0.5, 1e-9));
      CHECK_THAT(ratio.imag(), WithinAbs(0.0, 1e-9));
    }
  }

  // The two summands are irrational but their sum is the canonical form
  // value 44/5 at the sample.
  Complex lhs = 0;
  for (const auto& zz : z)
    lhs += 1.0 / (forward_jacobian_det(m, zz) * zz[0] * zz[1]);
  CHECK_THAT(lhs.real(), WithinAbs(8.8, 1e-9));
  CHECK_THAT(lhs.imag(), WithinAbs(0.0, 1e-9));
}

TEST_CASE("pushforward identity holds on the quadrilateral") {
  const auto reports =
      pushforward_check(quad_W(), square_V(), quad(), 10, 1e-9);
  REQUIRE(reports.size() == 10);
  for (const auto& r : reports) {
    CHECK(r.passed);
    CHECK(r.degree_found == 2);
    CHECK_FALSE(r.exact);
    CHECK(r.rel_err < 1e-9);
    CHECK(std::abs(r.lhs.imag()) < 1e-9);
  }

  SECTION("the sample stream is deterministic") {
    const auto again =
        pushforward_check(quad_W(), square_V(), quad(), 10, 1e-9);
    for (size_t i = 0; i < reports.size(); ++i)
      CHECK(again[i].sample == reports[i].sample);
  }

  SECTION("worker threads do not change the reports") {
    const auto par =
        pushforward_check(quad_W(), square_V(), quad(), 10, 1e-9, 4242, 3);
    REQUIRE(par.size() == 10);
    for (size_t i = 0; i < reports.size(); ++i) {
      CHECK(par[i].sample == reports[i].sample);
      CHECK(par[i].passed);
      CHECK(par[i].lhs == reports[i].lhs);
    }
  }
}

TEST_CASE("linear interval fiber is evaluated exactly") {
  const auto reports =
      pushforward_check(interval_W(), power_V(1), interval01(), 5, 1e-9);
  for (const auto& r : reports) {
    CHECK(r.exact);
    CHECK(r.passed);
    CHECK(r.degree_found == 1);
    CHECK(r.abs_err == 0.0);
    // z = x/(1-x) is the unique preimage.
    const double x = to_double(r.sample[0]);
    REQUIRE(r.preimages.size() == 1);
    CHECK_THAT(r.preimages[0][0].real(), WithinAbs(x / (1.0 - x), 1e-12));
  }
}

TEST_CASE("quadratic fiber sums two real branches") {
  const auto reports =
      pushforward_check(interval_W(), power_V(2), interval01(), 6, 1e-9);
  for (const auto& r : reports) {
    CHECK(r.passed);
    CHECK(r.degree_found == 2);
    CHECK_FALSE(r.exact);
    REQUIRE(r.preimages.size() == 2);
    // The branches are +-(x/(1-x))^(1/2), reported negative first.
    CHECK(r.preimages[0][0].real() < 0);
    CHECK_THAT(r.preimages[0][0].real() + r.preimages[1][0].real(),
               WithinAbs(0.0, 1e-9));
  }
}

TEST_CASE("cubic fiber cancels a conjugate pair") {
  const auto reports =
      pushforward_check(interval_W(), power_V(3), interval01(), 6, 1e-9);
  for (const auto& r : reports) {
    CHECK(r.passed);
    CHECK(r.degree_found == 3);
    REQUIRE(r.preimages.size() == 3);
    // Exactly one real cube root; the other two are conjugates whose
    // contributions cancel in the imaginary part.
    int real_count = 0;
    for (const auto& z : r.preimages)
      if (std::abs(z[0].imag()) < 1e-9) ++real_count;
    CHECK(real_count == 1);
    CHECK_THAT(r.preimages[0][0].real() - r.preimages[1][0].real(),
               WithinAbs(0.0, 1e-9));
    CHECK_THAT(r.preimages[0][0].imag() + r.preimages[1][0].imag(),
               WithinAbs(0.0, 1e-9));
    CHECK(std::abs(r.lhs.imag()) < 1e-9);
  }
}

TEST_CASE("pushforward input validation") {
  CHECK_THROWS_AS(
      pushforward_check(interval_W(), power_V(1), interval01(), 0, 1e-9),
      InputError);
  CHECK_THROWS_AS(
      pushforward_check(interval_W(), power_V(1), interval01(), 3, 0.0),
      InputError);
  CHECK_THROWS_WITH(
      pushforward_check(quad_W(), square_V(),
                        hull_from_vertices(2, {pt({0, 0}), pt({1, 0}),
                                               pt({1, 1}), pt({0, 1})}),
                        3, 1e-9),
      ContainsSubstring("not the hull of W"));
  // Matroid-compatible pair with a nonpositive height.
  CHECK_THROWS_WITH(
      pushforward_check({pt({-1, -3}), pt({1, 1})}, power_V(1), interval01(),
                        3, 1e-9),
      ContainsSubstring("heights must be positive"));

  // Three-dimensional fibers are out of scope for the numeric layer.
  std::vector<std::vector<Rat>> w3;
  std::vector<std::vector<int>> v3{
      {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};
  for (const auto& v : v3) w3.push_back(pt({v[0], v[1], v[2], v[3]}));
  const MonomialMap m3 = build_map(w3, v3);
  CHECK_THROWS_AS(preimages(m3, {Rat(1, 4), Rat(1, 4), Rat(1, 4)}),
                  DimensionError);
  const Polytope tet = hull_from_vertices(
      3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK_THROWS_AS(pushforward_check(w3, v3, tet, 3, 1e-9), DimensionError);

  CHECK_THROWS_WITH(build_map(quad_W(), [] {
                      auto v = square_V();
                      std::swap(v[1], v[3]);
                      return v;
                    }()),
                    ContainsSubstring("different oriented matroids"));
}

TEST_CASE("factorization through the toric embedding") {
  const MonomialMap m = build_map(quad_W(), square_V());
  CHECK(factorization_check(m).passed);
  CHECK(factorization_check(build_map(interval_W(), power_V(3))).passed);

  // Tampering with a component is caught at the sample points.
  MonomialMap bad = m;
  bad.components[1].add_term({0, 0}, 1);
  const CheckReport rep = factorization_check(bad);
  CHECK_FALSE(rep.passed);
  bool saw = false;
  for (const auto& w : rep.witnesses) saw = saw || w.contains("mismatch");
  CHECK(saw);
}

TEST_CASE("bivariate resultant eliminates one variable") {
  // res_{z2}(z1*z2 - 1, z1 + z2) = z1^2 + 1 up to sign.
  Poly f(2), g(2);
  f.add_term({1, 1}, 1);
  f.add_term({0, 0}, -1);
  g.add_term({1, 0}, 1);
  g.add_term({0, 1}, 1);
  // The result is univariate in the kept variable.
  const Poly r = detail::resultant_2v(f, g, 1);
  Poly expect(1);
  expect.add_term({2}, 1);
  expect.add_term({0}, 1);
  CHECK((r == expect || r == expect * Rat(-1)));
}
