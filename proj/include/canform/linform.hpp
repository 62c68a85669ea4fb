#ifndef CANFORM_LINFORM_HPP
#define CANFORM_LINFORM_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "canform/poly.hpp"
#include "canform/rat.hpp"

namespace canform {

// Affine-linear form c0 + sum_i coeffs[i] * x_i. Facet forms and pole
// factors are kept primitive (coprime integer entries); the sign is either
// the default one (first nonzero of (c0, coeffs) positive) or fixed by an
// orientation such as pointing inward on a polytope.
class LinForm {
 public:
  LinForm() = default;
  LinForm(Rat c0, std::vector<Rat> coeffs)
      : c0_(std::move(c0)), coeffs_(std::move(coeffs)) {}

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const Rat& c0() const { return c0_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    if (c0_ != 0) return false;
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_constant() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  Rat eval(std::span<const Rat> x) const {
    if (static_cast<int>(x.size()) != nvars())
      throw InputError("LinForm::eval: wrong point dimension");
    Rat acc = c0_;
    for (int i = 0; i < nvars(); ++i) acc += coeffs_[i] * x[i];
    return acc;
  }

  // (c0, coeffs...) as one vector; doubles as the homogenization, with the
  // slot-0 coordinate playing X0.
  std::vector<Rat> homogenized() const {
    std::vector<Rat> v;
    v.reserve(coeffs_.size() + 1);
    v.push_back(c0_);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return v;
  }

  static LinForm from_homogenized(const std::vector<Rat>& v) {
    return LinForm(v.at(0), std::vector<Rat>(v.begin() + 1, v.end()));
  }

  LinForm operator-() const {
    std::vector<Rat> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return LinForm(-c0_, std::move(c));
  }

  bool operator==(const LinForm& o) const = default;

  Poly to_poly() const {
    Poly p = Poly::constant(nvars(), c0_);
    for (int i = 0; i < nvars(); ++i)
      if (coeffs_[i] != 0) p += Poly::variable(nvars(), i) * coeffs_[i];
    return p;
  }

  // Primitive with the sign kept as-is (for orientation-carrying forms).
  LinForm primitive_same_sign() const {
    if (is_zero()) return *this;
    return from_homogenized(primitive_vector(homogenized(), false));
  }

 private:
  Rat c0_ = 0;
  std::vector<Rat> coeffs_;
};

// Primitive representative of the same hyperplane under the default sign
// rule (first nonzero of (c0, coeffs) positive); original == factor * form.
struct NormalizedLinForm {
  LinForm form;
  Rat factor;
};

inline NormalizedLinForm normalized(const LinForm& f) {
  if (f.is_zero()) return {f, 1};
  std::vector<Rat> v = f.homogenized();
  std::vector<Rat> prim = primitive_vector(v, /*flip_sign=*/true);
  Rat factor = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (prim[i] != 0) {
      factor = v[i] / prim[i];
      break;
    }
  }
  return {LinForm::from_homogenized(prim), factor};
}

// Canonical display-and-storage order for facet lists and pole products:
// ascending constant term, then lexicographically descending coefficients.
// Puts x before y and both before offset forms like 1+x-y.
inline bool pole_order_less(const LinForm& a, const LinForm& b) {
  if (a.c0() != b.c0()) return a.c0() < b.c0();
  return a.coeffs() > b.coeffs();
}

inline bool same_hyperplane(const LinForm& a, const LinForm& b) {
  return normalized(a).form == normalized(b).form;
}

inline std::string linform_to_string(const LinForm& f,
                                     std::span<const std::string> vars) {
  return poly_to_string(f.to_poly(), vars);
}

// Detects a polynomial of total degree <= 1.
inline std::optional<LinForm> linform_from_poly(const Poly& p) {
  if (p.total_degree() > 1) return std::nullopt;
  Rat c0 = 0;
  std::vector<Rat> coeffs(p.nvars(), 0);
  for (const auto& [e, c] : p.terms()) {
    if (total_degree_of(e) == 0) {
      c0 = c;
      continue;
    }
    for (int i = 0; i < p.nvars(); ++i)
      if (e[i] == 1) coeffs[i] = c;
  }
  return LinForm(std::move(c0), std::move(coeffs));
}

// Exact division of a polynomial by an affine-linear form. The divisor's
// pivot variable has a constant leading coefficient, so quotient and
// remainder are unique; returns the quotient only when the remainder is 0.
inline std::optional<Poly> exact_div(const Poly& num, const LinForm& div) {
  if (div.nvars() != num.nvars())
    throw InternalError("exact_div: arity mismatch");
  if (div.is_zero()) throw InternalError("exact_div: zero divisor");
  if (num.is_zero()) return num;
  if (div.is_constant()) return num * (Rat(1) / div.c0());
  int pivot = -1;
  for (int i = 0; i < div.nvars(); ++i)
    if (div.coeffs()[i] != 0) pivot = i;  // any nonzero slot works
  const Rat cp = div.coeffs()[pivot];
  const Poly divp = div.to_poly();
  Poly rem = num;
  Poly quot(num.nvars());
  while (rem.degree_in(pivot) > 0) {
    // Peel the top var-degree block of the remainder.
    const int top = rem.degree_in(pivot);
    Poly block(num.nvars());
    for (const auto& [e, c] : rem.terms()) {
      if (e[pivot] == top) {
        Exponents q(e);
        q[pivot] -= 1;
        block.add_term(std::move(q), c / cp);
      }
    }
    quot += block;
    rem -= block * divp;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

}  // namespace canform

#endif
