#ifndef CANFORM_FORM_HPP
#define CANFORM_FORM_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "canform/linform.hpp"
#include "canform/poly.hpp"

namespace canform {

// Rational top-form  sign * num / (l_1 ... l_f)  dx_1 ^ ... ^ dx_d  with
// affine-linear pole factors. Canonical (reduced) representation:
//  - pole factors primitive under the default sign rule, sorted;
//  - no pole factor divides the numerator;
//  - numerator's grevlex-leading coefficient is positive, the overall
//    orientation sits in `sign`.
// A polytope's canonical form is positive at the centroid as a value; its
// displayed sign flag depends on the default pole orientations.
struct CanonicalForm {
  std::vector<std::string> vars;
  Poly num;
  std::vector<LinForm> poles;
  int sign = 1;

  int dim() const { return static_cast<int>(vars.size()); }
};

inline CanonicalForm reduced(CanonicalForm f) {
  // Normalize pole factors, shifting scalars into the numerator.
  Rat scale = 1;
  std::vector<LinForm> poles;
  for (const auto& p : f.poles) {
    if (p.is_zero()) throw InternalError("form: zero pole factor");
    if (p.is_constant()) {
      scale /= p.c0();
      continue;
    }
    auto n = normalized(p);
    scale /= n.factor;
    poles.push_back(n.form);
  }
  Poly num = f.num * scale;

  // Cancel pole factors dividing the numerator (all poles are linear, so
  // any common factor is a product of them).
  bool changed = true;
  while (changed && !num.is_zero()) {
    changed = false;
    for (size_t i = 0; i < poles.size(); ++i) {
      if (auto q = exact_div(num, poles[i])) {
        num = std::move(*q);
        poles.erase(poles.begin() + i);
        changed = true;
        break;
      }
    }
  }

  CanonicalForm out;
  out.vars = std::move(f.vars);
  out.sign = f.sign;
  if (num.is_zero()) {
    out.num = Poly(out.dim());
    out.sign = 1;
    return out;
  }
  if (num.leading_coeff() < 0) {
    num = -num;
    out.sign = -out.sign;
  }
  std::sort(poles.begin(), poles.end(), pole_order_less);
  out.num = std::move(num);
  out.poles = std::move(poles);
  return out;
}

inline Poly denominator_poly(const CanonicalForm& f) {
  Poly d = Poly::constant(f.dim(), 1);
  for (const auto& p : f.poles) d = d * p.to_poly();
  return d;
}

// Exact equality as rational functions (cross-multiplied), so it tolerates
// non-reduced inputs.
inline bool form_equal(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.dim() != b.dim()) return false;
  Poly lhs = a.num * Rat(a.sign) * denominator_poly(b);
  Poly rhs = b.num * Rat(b.sign) * denominator_poly(a);
  return lhs == rhs;
}

inline CanonicalForm form_neg(CanonicalForm f) {
  f.sign = -f.sign;
  return f;
}

inline CanonicalForm form_scale(CanonicalForm f, const Rat& s) {
  if (s < 0) {
    f.sign = -f.sign;
    f.num = f.num * Rat(-s);
  } else {
    f.num = f.num * s;
  }
  return reduced(std::move(f));
}

// Sum over the multiset lcm of the denominators, then reduce.
inline CanonicalForm form_add(const CanonicalForm& a_in,
                              const CanonicalForm& b_in) {
  CanonicalForm a = reduced(a_in), b = reduced(b_in);
  if (a.dim() != b.dim()) throw InternalError("form_add: dimension mismatch");
  if (a.num.is_zero()) return b;
  if (b.num.is_zero()) return a;

  auto count = [](const std::vector<LinForm>& v, const LinForm& f) {
    return std::count(v.begin(), v.end(), f);
  };
  std::vector<LinForm> all = a.poles;
  for (const auto& p : b.poles) all.push_back(p);
  std::sort(all.begin(), all.end(), pole_order_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<LinForm> lcm_den, miss_a, miss_b;
  for (const auto& p : all) {
    const long ca = count(a.poles, p), cb = count(b.poles, p);
    const long cm = std::max(ca, cb);
    for (long i = 0; i < cm; ++i) lcm_den.push_back(p);
    for (long i = 0; i < cm - ca; ++i) miss_a.push_back(p);
    for (long i = 0; i < cm - cb; ++i) miss_b.push_back(p);
  }
  Poly na = a.num * Rat(a.sign), nb = b.num * Rat(b.sign);
  for (const auto& p : miss_a) na = na * p.to_poly();
  for (const auto& p : miss_b) nb = nb * p.to_poly();

  CanonicalForm out;
  out.vars = a.vars;
  out.num = na + nb;
  out.poles = std::move(lcm_den);
  return reduced(std::move(out));
}

// Value of the coefficient function at a point off the pole locus.
inline Rat form_value(const CanonicalForm& f, std::span<const Rat> x) {
  Rat den = 1;
  for (const auto& p : f.poles) {
    const Rat v = p.eval(x);
    if (v == 0) throw InputError("form value: point on a pole");
    den *= v;
  }
  return Rat(f.sign) * f.num.eval(x) / den;
}

// Substitutes one variable by a rational constant and drops its slot.
// Poles meeting the substituted hyperplane identically are input errors.
inline CanonicalForm form_specialize(const CanonicalForm& f_in, int var,
                                     const Rat& value) {
  CanonicalForm f = reduced(f_in);
  const int d = f.dim();
  if (var < 0 || var >= d)
    throw InputError("form_specialize: no such variable");
  CanonicalForm out;
  out.sign = f.sign;
  out.vars = f.vars;
  out.vars.erase(out.vars.begin() + var);
  out.num = f.num.eliminate_var(var, Poly::constant(d - 1, value));
  for (const auto& p : f.poles) {
    std::vector<Rat> c = p.coeffs();
    Rat c0 = p.c0() + c[var] * value;
    c.erase(c.begin() + var);
    LinForm q(std::move(c0), std::move(c));
    if (q.is_zero())
      throw InputError("form_specialize: a pole vanishes identically");
    out.poles.push_back(std::move(q));
  }
  return reduced(std::move(out));
}

// Projectivization: poles become linear forms in (X0..Xd) and the numerator
// is padded with X0 to make the net degree exactly -(d+1).
struct HomogeneousForm {
  int dim = 0;  // affine dimension d; variables are X0..Xd
  Poly num;
  std::vector<std::vector<Rat>> poles;
  int sign = 1;
};

inline HomogeneousForm homogenize(const CanonicalForm& f_in) {
  CanonicalForm f = reduced(f_in);
  const int d = f.dim();
  const int target = static_cast<int>(f.poles.size()) - d - 1;
  if (f.num.is_zero()) throw InputError("homogenize: zero form");
  if (f.num.total_degree() > target)
    throw InternalError("homogenize: numerator degree exceeds pole budget");
  HomogeneousForm h;
  h.dim = d;
  h.sign = f.sign;
  h.num = f.num.homogenize_to(target);
  for (const auto& p : f.poles) h.poles.push_back(p.homogenized());
  return h;
}

// --- display helpers ---

inline std::string pole_factor_string(const LinForm& p,
                                      std::span<const std::string> vars) {
  // Bare variable factors print unparenthesized: x*y*(1+x-y)*...
  int nz = -1, count = 0;
  for (int i = 0; i < p.nvars(); ++i)
    if (p.coeffs()[i] != 0) {
      nz = i;
      ++count;
    }
  if (p.c0() == 0 && count == 1 && p.coeffs()[nz] == 1) return vars[nz];
  return "(" + linform_to_string(p, vars) + ")";
}

inline std::string measure_string(std::span<const std::string> vars) {
  std::string out;
  for (size_t i = 0; i < vars.size(); ++i) {
    out += (i == 0) ? " d" : "^d";
    out += vars[i];
  }
  return out;
}

// The coefficient function alone, without the measure suffix. Repeated
// pole factors group into powers.
inline std::string pretty_function(const CanonicalForm& f) {
  if (f.dim() == 0 || (f.poles.empty() && f.num.is_constant())) {
    Rat v = f.num.is_zero() ? Rat(0) : f.num.constant_value() * Rat(f.sign);
    return rat_to_string(v);
  }
  std::string num = poly_to_string(f.num, f.vars);
  if (f.num.term_count() > 1) num = "(" + num + ")";
  std::string out = (f.sign < 0) ? "-" : "";
  out += num;
  if (!f.poles.empty()) {
    std::string den;
    int factors = 0;
    for (size_t i = 0; i < f.poles.size();) {
      size_t j = i;
      while (j < f.poles.size() && f.poles[j] == f.poles[i]) ++j;
      if (!den.empty()) den += "*";
      den += pole_factor_string(f.poles[i], f.vars);
      if (j - i > 1) den += "^" + std::to_string(j - i);
      ++factors;
      i = j;
    }
    // A lone factor is already bare or parenthesized; products get parens.
    out += "/" + (factors == 1 ? den : "(" + den + ")");
  }
  return out;
}

inline std::string pretty(const CanonicalForm& f) {
  return pretty_function(f) + measure_string(f.vars);
}

}  // namespace canform

#endif
