#ifndef CANFORM_CHECKS_HPP
#define CANFORM_CHECKS_HPP

#include <json.hpp>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "canform/adjoint.hpp"
#include "canform/residue.hpp"

namespace canform {

// Outcome of a verification pass. `witnesses` is a JSON array of
// structured entries; the check failed iff it contains an entry with a
// "mismatch" key. Informational entries (recorded signs, per-method
// forms, sample counts) are always present so a passing report still
// documents what was compared.
struct CheckReport {
  std::string name;
  bool passed = true;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
};

namespace detail {

inline nlohmann::ordered_json json_point(const std::vector<Rat>& x) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& c : x) a.push_back(rat_to_string(c));
  return a;
}

}  // namespace detail

// Strictly interior rational points, drawn as convex combinations of
// the vertex set with positive pseudo-random integer weights. Every
// vertex gets nonzero weight, so each facet form is strictly positive
// at the result. Deterministic for a fixed seed.
inline std::vector<std::vector<Rat>> interior_points(const Polytope& p,
                                                     int count,
                                                     std::uint64_t seed) {
  if (count < 1) throw InputError("interior_points: count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 997);
  std::vector<std::vector<Rat>> pts;
  pts.reserve(count);
  for (int s = 0; s < count; ++s) {
    std::vector<Rat> w;
    Rat total = 0;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
      w.push_back(Rat(pick(rng)));
      total += w.back();
    }
    std::vector<Rat> x(p.dim, Rat(0));
    for (size_t i = 0; i < p.vertices.size(); ++i)
      for (int j = 0; j < p.dim; ++j) x[j] += w[i] / total * p.vertices[i][j];
    pts.push_back(std::move(x));
  }
  return pts;
}

// Walks every maximal flag of faces, comparing the iterated residue
// against the face's own canonical form; leaves must come out as +-1.
inline CheckReport recursion_verify(const Polytope& p) {
  CheckReport rep;
  rep.name = "recursion";
  RecursionResult res = recursion_trace(p);
  rep.passed = res.passed;
  for (const auto& leaf : res.leaves)
    rep.witnesses.push_back({{"flag", leaf.flag}, {"sigma", leaf.sigma}});
  for (const auto& msg : res.failures)
    rep.witnesses.push_back({{"mismatch", msg}});
  return rep;
}

// The adjoint must vanish on every flat of the residual arrangement.
// Flats are probed at enough points to pin the restriction of a form
// of the adjoint's degree.
inline CheckReport adjoint_vanishing_check(const Polytope& p) {
  CheckReport rep;
  rep.name = "adjoint-vanishing";
  AdjointReport a = adjoint_report(p);
  rep.passed = a.vanishes;
  rep.witnesses.push_back({{"degree", a.degree},
                           {"flats", a.residual.size()},
                           {"kernel_dim", a.kernel_dim},
                           {"unique", a.unique}});
  for (const auto& fl : a.residual) {
    for (const auto& x : flat_probe_points(fl, a.degree)) {
      const Rat v = a.adjoint_poly.eval(x);
      if (v != 0)
        rep.witnesses.push_back(
            {{"mismatch", "adjoint does not vanish on a residual flat"},
             {"point", detail::json_point(x)},
             {"value", rat_to_string(v)}});
    }
  }
  return rep;
}

// Canonical forms add over subdivisions. The tiling itself is a
// precondition: parts must sit inside the parent, their normalized
// volumes must sum to the parent's, and no two may share an interior
// point. Violations throw; only the form identity is a check outcome.
inline CheckReport subdivision_verify(const Polytope& parent,
                                      const std::vector<Polytope>& parts) {
  if (parts.empty()) throw InputError("subdivision_verify: no parts given");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].dim != parent.dim)
      throw InputError("subdivision_verify: part " + std::to_string(i) +
                       " has mismatched dimension");
    for (const auto& v : parts[i].vertices)
      if (!contains(parent, v))
        throw InputError("subdivision_verify: part " + std::to_string(i) +
                         " reaches outside the parent");
  }
  Rat total = 0;
  for (const auto& q : parts) total += normalized_volume(q);
  const Rat whole_vol = normalized_volume(parent);
  if (total != whole_vol)
    throw InputError("subdivision_verify: part volumes sum to " +
                     rat_to_string(total) + " but the parent has " +
                     rat_to_string(whole_vol));
  for (size_t i = 0; i < parts.size(); ++i) {
    for (size_t j = i + 1; j < parts.size(); ++j) {
      // Interiors overlap iff the joint constraint system is again
      // full-dimensional; empty or flat intersections are fine.
      std::vector<LinForm> stack = parts[i].facets;
      stack.insert(stack.end(), parts[j].facets.begin(),
                   parts[j].facets.end());
      std::vector<Rat> shared;
      try {
        shared = polytope_from_hrep(parent.dim, stack).centroid;
      } catch (const InputError&) {
        continue;
      }
      throw InputError("subdivision_verify: parts " + std::to_string(i) +
                       " and " + std::to_string(j) +
                       " share the interior point (" +
                       detail::json_point(shared).dump() + ")");
    }
  }

  CheckReport rep;
  rep.name = "subdivision";
  CanonicalForm sum = canonical_form(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    sum = form_add(sum, canonical_form(parts[i]));
  const CanonicalForm target = canonical_form(parent);
  rep.passed = form_equal(sum, target);
  rep.witnesses.push_back(
      {{"parts", parts.size()}, {"sum", pretty(sum)}, {"parent", pretty(target)}});
  if (!rep.passed)
    rep.witnesses.push_back(
        {{"mismatch", "part forms do not sum to the parent form"}});
  return rep;
}

// The three independent constructions of the canonical form must agree
// exactly: triangulation of the polytope, the dual-volume vertex sum,
// and the Laplace transform of the dual cone.
inline CheckReport filliman_check(const Polytope& p) {
  CheckReport rep;
  rep.name = "filliman";
  const CanonicalForm a = canonical_form(p, Method::triangulation);
  const CanonicalForm b = canonical_form(p, Method::dualvol);
  const CanonicalForm c = canonical_form(p, Method::laplace);
  rep.witnesses.push_back({{"triangulation", pretty(a)},
                           {"dualvol", pretty(b)},
                           {"laplace", pretty(c)}});
  if (!form_equal(a, b)) {
    rep.passed = false;
    rep.witnesses.push_back(
        {{"mismatch", "dual-volume form disagrees with triangulation"}});
  }
  if (!form_equal(a, c)) {
    rep.passed = false;
    rep.witnesses.push_back(
        {{"mismatch", "dual-cone form disagrees with triangulation"}});
  }
  return rep;
}

// Samples the canonical form at interior points; all values must share
// one strict sign. Interior points can never be poles, so a pole hit
// is an internal inconsistency rather than bad input.
inline CheckReport positive_convexity_check(const Polytope& p, int samples,
                                            std::uint64_t seed = 9001) {
  if (samples < 1)
    throw InputError("positive_convexity_check: need at least one sample");
  CheckReport rep;
  rep.name = "positive-convexity";
  const CanonicalForm f = canonical_form(p);
  int sign = 0;
  auto mismatches = nlohmann::ordered_json::array();
  for (const auto& x : interior_points(p, samples, seed)) {
    Rat v;
    try {
      v = form_value(f, x);
    } catch (const InputError&) {
      throw InternalError("positive_convexity_check: interior sample on a pole");
    }
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) {
      mismatches.push_back({{"mismatch", "form value vanishes or flips sign"},
                            {"point", detail::json_point(x)},
                            {"value", rat_to_string(v)}});
      continue;
    }
    sign = s;
  }
  rep.passed = mismatches.empty();
  rep.witnesses.push_back({{"samples", samples}, {"sign", sign}});
  for (auto& m : mismatches) rep.witnesses.push_back(std::move(m));
  return rep;
}

}  // namespace canform

#endif
