#ifndef CANFORM_RESIDUE_HPP
#define CANFORM_RESIDUE_HPP

#include <optional>
#include <string>
#include <vector>

#include "canform/engines.hpp"
#include "canform/form.hpp"

namespace canform {

// Chart data for a residue: the pole is solved for the highest-index
// variable it involves, which is then eliminated. Res is invariant under
// rescaling the pole factor, so the reduced representation fixes it.
struct ResidueChart {
  int pivot = -1;      // eliminated variable, index into the input vars
  Rat pivot_coeff;     // its coefficient in the stored pole factor
  LinForm pole;        // the reduced form's pole factor on that hyperplane
};

// Residue of a simple pole: with w = (dl/l) ^ eta + eta', returns eta
// restricted to the chart. Moving dl past the first `pivot` measure
// factors contributes (-1)^pivot; solving l = 0 contributes 1/coeff.
inline CanonicalForm residue(const CanonicalForm& f_in, const LinForm& facet,
                             ResidueChart* chart = nullptr) {
  CanonicalForm f = reduced(f_in);
  const int d = f.dim();
  if (d == 0) throw InputError("residue: form is already a point form");

  int at = -1, hits = 0;
  for (size_t i = 0; i < f.poles.size(); ++i)
    if (same_hyperplane(f.poles[i], facet)) {
      at = static_cast<int>(i);
      ++hits;
    }
  if (hits == 0) throw InputError("residue: no pole on that hyperplane");
  if (hits > 1) throw InputError("residue: pole is not simple");

  const LinForm& p = f.poles[at];
  int j = -1;
  for (int i = 0; i < d; ++i)
    if (p.coeffs()[i] != 0) j = i;
  const Rat c = p.coeffs()[j];

  // x_j = repl(x_0 .. x_{d-1} without x_j) on the hyperplane.
  Poly repl(d - 1);
  repl.add_term(std::vector<int>(d - 1, 0), -p.c0() / c);
  for (int i = 0; i < d; ++i) {
    if (i == j || p.coeffs()[i] == 0) continue;
    std::vector<int> e(d - 1, 0);
    e[i < j ? i : i - 1] = 1;
    repl.add_term(e, -p.coeffs()[i] / c);
  }

  CanonicalForm out;
  out.vars = f.vars;
  out.vars.erase(out.vars.begin() + j);
  out.sign = f.sign * (j % 2 == 0 ? 1 : -1);
  out.num = f.num.eliminate_var(j, repl) * (Rat(1) / c);
  for (size_t i = 0; i < f.poles.size(); ++i) {
    if (static_cast<int>(i) == at) continue;
    const LinForm& q = f.poles[i];
    Rat c0 = q.c0() + q.coeffs()[j] * (-p.c0() / c);
    std::vector<Rat> a;
    for (int k = 0; k < d; ++k) {
      if (k == j) continue;
      a.push_back(q.coeffs()[k] + q.coeffs()[j] * (-p.coeffs()[k] / c));
    }
    out.poles.push_back(LinForm(std::move(c0), std::move(a)));
  }
  if (chart) {
    chart->pivot = j;
    chart->pivot_coeff = c;
    chart->pole = p;
  }
  return reduced(std::move(out));
}

// Point evaluation of a 0-dimensional form.
inline Rat point_form_value(const CanonicalForm& f) {
  if (f.dim() != 0) throw InputError("point_form_value: dimension > 0");
  if (f.num.is_zero()) return 0;
  return Rat(f.sign) * f.num.constant_value();
}

// Boundary recursion audit. Walks every flag of faces, comparing the
// residue at each facet with the facet's own canonical form in chart
// coordinates; they must match up to a sign, which is recorded and
// carried down. Leaves are point forms of value +-1 times the carried
// sign product.
struct RecursionLeaf {
  std::vector<int> flag;  // facet index chain, outermost first
  int sigma = 0;          // product of the per-step matching signs
};

struct RecursionResult {
  bool passed = true;
  std::vector<RecursionLeaf> leaves;
  std::vector<std::string> failures;
};

namespace detail {

inline void recursion_walk(const Polytope& Q, const CanonicalForm& f, int sigma,
                           std::vector<int>& flag, RecursionResult& res) {
  if (Q.dim == 0) {
    RecursionLeaf leaf;
    leaf.flag = flag;
    const Rat v = point_form_value(f);
    if (v == sigma)
      leaf.sigma = sigma;
    else {
      res.passed = false;
      res.failures.push_back("leaf value " + rat_to_string(v) +
                             " does not match carried sign");
    }
    res.leaves.push_back(std::move(leaf));
    return;
  }
  for (size_t fi = 0; fi < Q.facets.size(); ++fi) {
    ResidueChart chart;
    CanonicalForm r = residue(f, Q.facets[fi], &chart);

    // The facet as a (d-1)-polytope in the chart: the hyperplane graphs
    // over the non-pivot coordinates.
    int step = 0;
    Polytope F;
    if (Q.dim == 1) {
      const Rat v = point_form_value(r);
      if (v == 1 || v == -1) step = static_cast<int>(v);
    } else {
      F = facet_chart(Q, static_cast<int>(fi), chart.pivot);
      CanonicalForm omega = canonical_form(F);
      omega.vars = r.vars;
      if (form_equal(r, omega))
        step = 1;
      else if (form_equal(r, form_neg(omega)))
        step = -1;
    }
    flag.push_back(static_cast<int>(fi));
    if (step == 0) {
      res.passed = false;
      std::string where;
      for (int k : flag) where += (where.empty() ? "" : ".") + std::to_string(k);
      res.failures.push_back("residue at flag " + where +
                             " is not +-1 times the face form");
      flag.pop_back();
      continue;
    }
    if (Q.dim == 1) {
      RecursionLeaf leaf;
      leaf.flag = flag;
      leaf.sigma = sigma * step;
      res.leaves.push_back(std::move(leaf));
    } else {
      recursion_walk(F, r, sigma * step, flag, res);
    }
    flag.pop_back();
  }
}

}  // namespace detail

inline RecursionResult recursion_trace(const Polytope& P) {
  RecursionResult res;
  CanonicalForm f = canonical_form(P);
  std::vector<int> flag;
  detail::recursion_walk(P, f, 1, flag, res);
  return res;
}

}  // namespace canform

#endif
