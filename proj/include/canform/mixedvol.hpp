#ifndef CANFORM_MIXEDVOL_HPP
#define CANFORM_MIXEDVOL_HPP

#include <string>
#include <vector>

#include "canform/engines.hpp"

namespace canform {

// Volume of the dual of the weighted sum x1*P1 + ... + xr*Pr, as an
// exact rational function of the weights (carried in a CanonicalForm,
// variables x1..xr). The vertex-cone sum runs on the unit-weight sum;
// the minkowski_sum genericity guard rejects weight vectors whose
// combinatorics is unstable. 0 must be interior to the unit-weight sum,
// which makes every facet offset function positive there.
inline CanonicalForm dual_mixed_volume(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw InputError("dual_mixed_volume: no summands");
  const int r = static_cast<int>(ps.size());
  MinkowskiSum m = minkowski_sum(ps, std::vector<Rat>(r, Rat(1)));
  const Polytope& s = m.sum;
  if (!s.is_full_dimensional())
    throw InputError("dual_mixed_volume: sum is not full-dimensional");

  std::vector<LinForm> pole_of_facet;
  for (size_t i = 0; i < s.facets.size(); ++i) {
    Rat at_ones = 0;
    for (const auto& h : m.offsets[i]) at_ones += h;
    if (at_ones <= 0)
      throw InputError("dual_mixed_volume: 0 is not interior to the sum");
    pole_of_facet.emplace_back(Rat(0), m.offsets[i]);
  }

  std::vector<std::string> vars;
  for (int j = 1; j <= r; ++j) vars.push_back("x" + std::to_string(j));
  CanonicalForm total;
  total.vars = vars;
  total.num = Poly::constant(r, 0);
  for (const auto& t : dual_volume_terms(s)) {
    CanonicalForm piece;
    piece.vars = vars;
    piece.num = Poly::constant(r, t.absdet);
    for (int fi : t.facets) piece.poles.push_back(pole_of_facet[fi]);
    total = form_add(total, piece);
  }
  return total;
}

// True iff f(lambda x) = lambda^deg f(x) identically: homogeneous
// numerator, poles without constant terms, and the right degree gap.
inline bool homogeneous_of_degree(const CanonicalForm& f_in, int deg) {
  const CanonicalForm f = reduced(f_in);
  if (!f.num.is_homogeneous()) return false;
  for (const auto& p : f.poles)
    if (p.c0() != 0) return false;
  return f.num.total_degree() - static_cast<int>(f.poles.size()) == deg;
}

}  // namespace canform

#endif
