// Acceptance gate: one line per criterion, plain pass/fail, nonzero exit
// when anything fails. Each criterion re-derives its expectations locally
// so a regression in the library cannot hide behind a shared helper.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "canform/io.hpp"
#include "canform/mixedvol.hpp"

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

Polytope pentagon() {
  return hull_from_vertices(2, {pt({0, 0}), pt({3, 0}), pt({4, 2}),
                                pt({2, 4}), pt({0, 3})});
}

Polytope cube01() {
  std::vector<std::vector<Rat>> v;
  for (int i = 0; i < 8; ++i)
    v.push_back(pt({i & 1, (i >> 1) & 1, (i >> 2) & 1}));
  return hull_from_vertices(3, v);
}

const std::string kGolden = "(4+4x-y)/(x*y*(1+x-y)*(4-2x-y)) dx^dy";

// First failed expectation wins the note; later ones are symptoms.
struct Crit {
  bool ok = true;
  std::string note;
  void req(bool c, const std::string& what) {
    if (!c && ok) {
      ok = false;
      note = what;
    }
  }
};

bool criterion_1(Crit& c) {
  const Polytope p = quad();
  const CanonicalForm t = canon_triangulation(p);
  const CanonicalForm dv = canon_dual_volume(p);
  const CanonicalForm lp = canon_laplace(p);
  c.req(form_equal(t, dv), "triangulation vs dual volume");
  c.req(form_equal(t, lp), "triangulation vs dual cone");
  c.req(t.sign == 1, "sign flag");
  Poly num(2);
  num.add_term({0, 0}, 4);
  num.add_term({1, 0}, 4);
  num.add_term({0, 1}, -1);
  c.req(t.num == num, "numerator 4+4x-y");
  const std::vector<LinForm> poles{
      LinForm(0, {Rat(1), Rat(0)}), LinForm(0, {Rat(0), Rat(1)}),
      LinForm(1, {Rat(1), Rat(-1)}), LinForm(4, {Rat(-2), Rat(-1)})};
  c.req(t.poles == poles, "pole factors");
  c.req(pretty(t) == kGolden, "pretty string");
  return c.ok;
}

bool criterion_2(Crit& c) {
  const CanonicalForm t1 =
      simplex_form({pt({0, 0}), pt({2, 0}), pt({0, 1})}, {"x", "y"});
  c.req(t1.sign == 1 && t1.num == Poly::constant(2, 2), "first piece scalar");
  c.req(t1.poles == std::vector<LinForm>{LinForm(0, {Rat(1), Rat(0)}),
                                         LinForm(0, {Rat(0), Rat(1)}),
                                         LinForm(2, {Rat(-1), Rat(-2)})},
        "first piece poles");
  c.req(pretty(t1) == "2/(x*y*(2-x-2y)) dx^dy", "first piece pretty");

  const CanonicalForm t2 =
      simplex_form({pt({2, 0}), pt({1, 2}), pt({0, 1})}, {"x", "y"});
  c.req(t2.sign == -1 && t2.num == Poly::constant(2, 9),
        "second piece scalar");
  c.req(t2.poles == std::vector<LinForm>{LinForm(1, {Rat(1), Rat(-1)}),
                                         LinForm(2, {Rat(-1), Rat(-2)}),
                                         LinForm(4, {Rat(-2), Rat(-1)})},
        "second piece poles");

  c.req(form_equal(form_add(t1, t2), canonical_form(quad())),
        "pieces sum to the whole");
  return c.ok;
}

bool criterion_3(Crit& c) {
  const Polytope p = quad();
  const CanonicalForm omega = canonical_form(p);

  // facets sort as x, y, 1+x-y, 4-2x-y
  const CanonicalForm r0 = residue(omega, p.facets[0]);
  c.req(r0.vars == std::vector<std::string>{"y"} && r0.sign == 1 &&
            r0.num == Poly::constant(1, 1) &&
            r0.poles == std::vector<LinForm>{LinForm(0, {Rat(1)}),
                                             LinForm(1, {Rat(-1)})},
        "residue at x = 0");

  c.req(form_equal(residue(omega, p.facets[1]), form_neg(interval_form(0, 2))),
        "residue at y = 0");

  const CanonicalForm r2 = residue(omega, p.facets[2]);
  c.req(r2.sign == 1 && r2.num == Poly::constant(1, 1) &&
            r2.poles == std::vector<LinForm>{LinForm(0, {Rat(1)}),
                                             LinForm(1, {Rat(-1)})},
        "residue at 1+x-y = 0");

  c.req(form_equal(residue(omega, p.facets[3]), interval_form(1, 2)),
        "residue at 4-2x-y = 0");

  for (auto [a, b] : {std::pair<Rat, Rat>{0, 1}, {Rat(1) / 3, Rat(7) / 2},
                      {-5, -2}}) {
    const CanonicalForm f = interval_form(a, b);
    c.req(point_form_value(residue(f, LinForm(-a, {Rat(1)}))) == 1,
          "left endpoint residue");
    c.req(point_form_value(residue(f, LinForm(b, {Rat(-1)}))) == -1,
          "right endpoint residue");
  }
  return c.ok;
}

bool criterion_4(Crit& c) {
  const Polytope p = quad();
  auto terms = laplace_terms(p);
  c.req(terms.size() == 2, "two dual-cone terms");
  if (terms.size() == 2) {
    auto rayset = [](std::vector<std::vector<Rat>> rs) {
      std::sort(rs.begin(), rs.end());
      return rs;
    };
    if (terms[0].absdet > terms[1].absdet) std::swap(terms[0], terms[1]);
    c.req(terms[0].absdet == 1, "|det| = 1");
    c.req(rayset(terms[0].rays) ==
              rayset({pt({0, 0, 1}), pt({0, 1, 0}), pt({1, 1, -1})}),
          "unit-determinant cone rays");
    c.req(terms[1].absdet == 6, "|det| = 6");
    c.req(rayset(terms[1].rays) ==
              rayset({pt({0, 0, 1}), pt({1, 1, -1}), pt({4, -2, -1})}),
          "determinant-6 cone rays");
  }
  const CanonicalForm lp = canon_laplace(p);
  c.req(pretty(lp) == kGolden, "specialized sum");
  return c.ok;
}

bool criterion_5(Crit& c) {
  const Poly a = adjoint(quad());
  Poly line(3);
  line.add_term({1, 0, 0}, 4);
  line.add_term({0, 1, 0}, 4);
  line.add_term({0, 0, 1}, -1);
  // Scalar multiple up to sign, after clearing the content of both sides.
  const Poly an = a * (Rat(1) / a.content());
  const Poly ln = line * (Rat(1) / line.content());
  c.req(!a.is_zero() && (an == ln || an == -ln),
        "adjoint is a multiple of 4X0+4X1-X2");
  c.req(a.eval(pt({1, -1, 0})) == 0 && a.eval(pt({1, 0, 4})) == 0,
        "vanishing points");

  auto flats = residual_arrangement(quad());
  c.req(flats.size() == 2, "two residual flats");
  std::vector<std::vector<Rat>> spans;
  for (const auto& fl : flats) {
    c.req(fl.pdim == 0, "flats are points");
    spans.push_back(primitive_vector(flat_span(fl).at(0), true));
  }
  std::sort(spans.begin(), spans.end());
  c.req(spans == std::vector<std::vector<Rat>>{pt({1, -1, 0}), pt({1, 0, 4})},
        "residual points");

  for (const Polytope& p :
       {quad(), unit_square(), pentagon(), cube01(),
        hull_from_vertices(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}),
                               pt({0, 0, 1})})}) {
    const Poly adj = adjoint(p);
    const int f = static_cast<int>(p.facets.size());
    c.req(adj.total_degree() == f - p.dim - 1, "degree f-d-1");
    c.req(adj.is_homogeneous(), "homogeneous adjoint");
    if (f == p.dim + 1)
      c.req(adj == Poly::constant(p.dim + 1, 1), "simplex adjoint constant");
  }
  return c.ok;
}

bool criterion_6(Crit& c) {
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<int> coord(-4, 4);
  const int dims[3] = {2, 3, 4};
  std::vector<Polytope> polys;
  int draws = 0;
  while (polys.size() < 30 && draws < 500) {
    ++draws;
    const int d = dims[polys.size() % 3];
    const int n = d == 2 ? 6 : 7;
    std::vector<std::vector<Rat>> pts;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> v;
      for (int j = 0; j < d; ++j) v.push_back(coord(rng));
      pts.push_back(std::move(v));
    }
    try {
      Polytope p = hull_from_vertices(d, pts);
      if (static_cast<int>(p.vertices.size()) > 10) continue;
      polys.push_back(std::move(p));
    } catch (const InputError&) {
      continue;
    }
  }
  c.req(polys.size() == 30, "30 random polytopes generated");

  for (const auto& p : polys) {
    const CanonicalForm t = canon_triangulation(p);
    c.req(form_equal(t, canon_dual_volume(p)), "triangulation = dual volume");
    c.req(form_equal(t, canon_laplace(p)), "triangulation = dual cone");
    // Same hyperplanes: facets carry the inward orientation, poles the
    // default one, so normalize before comparing.
    std::vector<LinForm> fs;
    for (const auto& h : p.facets) fs.push_back(normalized(h).form);
    std::sort(fs.begin(), fs.end(), pole_order_less);
    c.req(t.poles == fs, "pole set = facet set");

    const RecursionResult rec = recursion_trace(p);
    c.req(rec.passed, "recursion passes");
    for (const auto& leaf : rec.leaves) {
      c.req(static_cast<int>(leaf.flag.size()) == p.dim, "full-depth flags");
      c.req(leaf.sigma == 1 || leaf.sigma == -1, "unit leaf signs");
    }
    c.req(positive_convexity_check(p, 100).passed, "positive on interior");
    if (!c.ok) break;
  }
  return c.ok;
}

bool criterion_7(Crit& c) {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> w(-3, 3);
  const std::vector<Polytope> bases{quad(), cube01(), pentagon()};
  int done = 0, trials = 0;
  while (done < 10 && trials < 200) {
    ++trials;
    const Polytope& base = bases[done % bases.size()];
    std::vector<Rat> a;
    bool zero = true;
    for (int j = 0; j < base.dim; ++j) {
      const int x = w(rng);
      zero = zero && x == 0;
      a.push_back(x);
    }
    if (zero) continue;
    // Hyperplane through the centroid always cuts the interior.
    Rat c0 = 0;
    for (int j = 0; j < base.dim; ++j) c0 -= a[j] * base.centroid[j];
    const LinForm h(c0, a);
    try {
      auto stack = base.facets;
      stack.push_back(h);
      const Polytope lo = polytope_from_hrep(base.dim, stack);
      stack.back() = -h;
      const Polytope hi = polytope_from_hrep(base.dim, stack);
      c.req(subdivision_verify(base, {lo, hi}).passed,
            "slice forms sum to the parent");
      ++done;
    } catch (const InputError&) {
      continue;
    }
  }
  c.req(done == 10, "10 hyperplane slices");
  return c.ok;
}

bool criterion_8(Crit& c) {
  const std::vector<Polytope> bodies{
      quad(),
      hull_from_vertices(2, {pt({0, 0}), pt({3, 0}), pt({3, 3}), pt({0, 3})}),
      hull_from_vertices(2, {pt({0, 0}), pt({4, 0}), pt({0, 4})}),
      hull_from_vertices(3,
                         {pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 2, 0}),
                          pt({2, 2, 0}), pt({0, 0, 2}), pt({2, 0, 2}),
                          pt({0, 2, 2}), pt({2, 2, 2})}),
      pentagon()};
  for (const Polytope& p : bodies) {
    // Point summands -e_1..-e_d turn the weight function into the dual
    // volume of P - x at x = unit weights.
    std::vector<Polytope> ps;
    for (int i = 0; i < p.dim; ++i) {
      std::vector<Rat> e(p.dim, Rat(0));
      e[i] = -1;
      ps.push_back(vertex_set_polytope(p.dim, {e}));
    }
    ps.push_back(p);
    const CanonicalForm v = dual_mixed_volume(ps);
    c.req(homogeneous_of_degree(v, -p.dim), "symbolic homogeneity");
    c.req(form_equal(form_specialize(v, p.dim, 1), canon_dual_volume(p)),
          "specialization matches the dual volume");
    if (!c.ok) break;
  }
  return c.ok;
}

bool criterion_9(Crit& c) {
  const std::vector<std::vector<Rat>> W{pt({1, 0, 0}), pt({1, 2, 0}),
                                        pt({1, 1, 2}), pt({1, 0, 1})};
  const std::vector<std::vector<int>> V{
      {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}};
  const auto reports = pushforward_check(W, V, quad(), 10, 1e-9);
  c.req(reports.size() == 10, "ten samples");
  for (const auto& r : reports) {
    c.req(r.passed, "sample passes");
    c.req(r.preimages.size() == 2, "exactly two preimages");
    c.req(r.rel_err < 1e-9, "relative error below 1e-9");
    c.req(std::abs(r.lhs.imag()) < 1e-9, "imaginary part below 1e-9");
  }

  const auto exact = pushforward_check(
      {pt({1, 0}), pt({1, 1})}, {{1, 0}, {1, 1}},
      hull_from_vertices(1, {pt({0}), pt({1})}), 5, 1e-9);
  for (const auto& r : exact)
    c.req(r.exact && r.passed && r.abs_err == 0,
          "interval map matches exactly");
  return c.ok;
}

bool criterion_10(Crit& c) {
  const Polytope sq = unit_square();
  const CanonicalForm f = canonical_form(sq);

  CanonicalForm product;
  product.vars = {"x", "y"};
  product.num = Poly::constant(2, 1);
  product.poles = {LinForm(0, {Rat(1), Rat(0)}), LinForm(1, {Rat(-1), Rat(0)}),
                   LinForm(0, {Rat(0), Rat(1)}), LinForm(1, {Rat(0), Rat(-1)})};
  c.req(form_equal(f, reduced(product)), "product of interval forms");

  c.req(adjoint(sq) == Poly::monomial(3, {1, 0, 0}, 1),
        "homogenized numerator X0");

  auto flats = residual_arrangement(sq);
  c.req(flats.size() == 2, "two flats at infinity");
  std::vector<std::vector<Rat>> spans;
  for (const auto& fl : flats) {
    c.req(fl.pdim == 0, "points at infinity");
    spans.push_back(primitive_vector(flat_span(fl).at(0), true));
  }
  std::sort(spans.begin(), spans.end());
  c.req(spans == std::vector<std::vector<Rat>>{pt({0, 0, 1}), pt({0, 1, 0})},
        "both points on the hyperplane at infinity");
  return c.ok;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<bool(Crit&)> fn;
    double budget_s;  // 0 = no stated time budget
  };
  const std::vector<Entry> entries{
      {"quadrilateral golden form, all three engines", criterion_1, 1.0},
      {"triangulation pieces and their sum", criterion_2, 1.0},
      {"facet and endpoint residues with signs", criterion_3, 0},
      {"dual-cone terms with determinants 1 and 6", criterion_4, 0},
      {"adjoint, vanishing points, degree law", criterion_5, 0},
      {"three-way engine agreement on 30 random polytopes", criterion_6, 60.0},
      {"additivity across 10 random hyperplane slices", criterion_7, 0},
      {"dual mixed volume specialization and homogeneity", criterion_8, 0},
      {"pushforward identity, numeric and exact paths", criterion_9, 5.0},
      {"unit-square cross-oracle", criterion_10, 0},
  };

  int failures = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Crit c;
    bool ok = false;
    try {
      ok = entries[i].fn(c);
    } catch (const std::exception& e) {
      c.note = std::string("exception: ") + e.what();
      ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (entries[i].budget_s > 0 && secs >= entries[i].budget_s) {
      ok = false;
      if (c.note.empty()) c.note = "time budget exceeded";
    }
    if (!ok) ++failures;
    std::printf("%2zu. %-52s %s  (%.0f ms)%s%s\n", i + 1, entries[i].name,
                ok ? "pass" : "FAIL", secs * 1000.0,
                c.note.empty() ? "" : "  -- ", c.note.c_str());
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
