#ifndef CANFORM_POLY_HPP
#define CANFORM_POLY_HPP

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "canform/rat.hpp"

namespace canform {

using Exponents = std::vector<int>;

inline int total_degree_of(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Graded reverse lexicographic order: grade first; on a tie, a < b exactly
// when the rightmost nonzero entry of a-b is positive.
struct GrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree_of(a), db = total_degree_of(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};

// Sparse multivariate polynomial over Rat. The term map is the canonical
// representation: no zero coefficients, keys ordered by grevlex, so equal
// polynomials compare equal structurally regardless of construction order.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rat, GrevlexLess>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Poly variable(int nvars, int idx) {
    Poly p(nvars);
    Exponents e(nvars, 0);
    e.at(idx) = 1;
    p.add_term(e, 1);
    return p;
  }

  static Poly monomial(int nvars, Exponents e, const Rat& c) {
    Poly p(nvars);
    p.add_term(std::move(e), c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  // Accumulates c * x^e, dropping the term if the sum cancels.
  void add_term(Exponents e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : total_degree_of(terms_.rbegin()->first);
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  bool is_constant() const { return total_degree() <= 0; }

  Rat constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
  }

  // Coefficient of the grevlex-leading term; 0 for the zero polynomial.
  Rat leading_coeff() const {
    return terms_.empty() ? Rat(0) : terms_.rbegin()->second;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree_of(e) != d) return false;
    return true;
  }

  Poly operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  Poly& operator+=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }

  friend Poly operator*(const Poly& a, const Rat& s) {
    Poly out(a.nvars_);
    if (s == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * s);
    return out;
  }

  friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rat eval(std::span<const Rat> x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw InputError("eval: wrong point dimension");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      acc += t;
    }
    return acc;
  }

  Poly derivative(int var) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d(e);
      d[var] -= 1;
      out.add_term(std::move(d), c * Rat(e[var]));
    }
    return out;
  }

  // Substitutes variable `var` by `repl` (a polynomial in the remaining
  // variables, original order) and drops the slot. Result has nvars-1 vars.
  Poly eliminate_var(int var, const Poly& repl) const {
    if (repl.nvars() != nvars_ - 1)
      throw InternalError("eliminate_var: replacement has wrong arity");
    std::vector<Poly> powers = {Poly::constant(nvars_ - 1, 1)};
    const int maxp = degree_in(var);
    for (int k = 1; k <= maxp; ++k) powers.push_back(powers.back() * repl);
    Poly out(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
      Exponents rest;
      rest.reserve(nvars_ - 1);
      for (int i = 0; i < nvars_; ++i)
        if (i != var) rest.push_back(e[i]);
      out += powers[e[var]] * Poly::monomial(nvars_ - 1, std::move(rest), c);
    }
    return out;
  }

  // Drops a variable the polynomial does not use.
  Poly drop_var(int var) const {
    Poly out(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e[var] != 0) throw InternalError("drop_var: variable occurs");
      Exponents rest;
      rest.reserve(nvars_ - 1);
      for (int i = 0; i < nvars_; ++i)
        if (i != var) rest.push_back(e[i]);
      out.add_term(std::move(rest), c);
    }
    return out;
  }

  // Homogenizes to the given total degree with the new variable in slot 0.
  Poly homogenize_to(int deg) const {
    Poly out(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
      const int slack = deg - total_degree_of(e);
      if (slack < 0) throw InternalError("homogenize_to: degree too small");
      Exponents h;
      h.reserve(nvars_ + 1);
      h.push_back(slack);
      h.insert(h.end(), e.begin(), e.end());
      out.add_term(std::move(h), c);
    }
    return out;
  }

  // Sets the slot-0 variable to 1 (inverse of homogenize_to up to degree).
  Poly dehomogenize() const {
    Poly out(nvars_ - 1);
    for (const auto& [e, c] : terms_)
      out.add_term(Exponents(e.begin() + 1, e.end()), c);
    return out;
  }

  // Coefficients with respect to `var`, each a polynomial with that
  // variable dropped. Entry k is the coefficient of var^k.
  std::vector<Poly> coeffs_in(int var) const {
    std::vector<Poly> out(degree_in(var) + 1, Poly(nvars_ - 1));
    for (const auto& [e, c] : terms_) {
      Exponents rest;
      rest.reserve(nvars_ - 1);
      for (int i = 0; i < nvars_; ++i)
        if (i != var) rest.push_back(e[i]);
      out[e[var]].add_term(std::move(rest), c);
    }
    return out;
  }

  // gcd of all coefficients, as a positive rational; 0 for the zero poly.
  Rat content() const {
    Int l = 1, g = 0;
    for (const auto& [e, c] : terms_) l = lcm(l, den_of(c));
    for (const auto& [e, c] : terms_)
      g = gcd(g, Int(num_of(c) * (l / den_of(c))));
    if (g == 0) return 0;
    return Rat(g) / Rat(l);
  }

 private:
  void check_vars(const Poly& o) const {
    if (nvars_ != o.nvars_) throw InternalError("polynomial arity mismatch");
  }

  int nvars_;
  TermMap terms_;
};

// Renders terms by ascending total degree, lexicographically descending
// inside a degree block, e.g. "4+4x-y" and "4+2x-5y-2x^2+x*y+y^2".
inline std::string poly_to_string(const Poly& p,
                                  std::span<const std::string> vars) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Rat>> ts(p.terms().begin(),
                                            p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int da = total_degree_of(a.first), db = total_degree_of(b.first);
    if (da != db) return da < db;
    return a.first > b.first;  // lex descending
  });
  std::string out;
  for (const auto& [e, c] : ts) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rat a = c < 0 ? Rat(-c) : c;
    std::string coeff = rat_to_string(a);
    if (!out.empty())
      out += (c < 0) ? "-" : "+";
    else if (c < 0)
      out += "-";
    if (mono.empty()) {
      out += coeff;
    } else if (a == 1) {
      out += mono;
    } else {
      out += coeff;
      if (!is_integer(a)) out += "*";
      out += mono;
    }
  }
  return out;
}

inline std::vector<std::string> default_vars(int d) {
  if (d == 1) return {"x"};
  if (d == 2) return {"x", "y"};
  if (d == 3) return {"x", "y", "z"};
  std::vector<std::string> v;
  for (int i = 1; i <= d; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

inline std::vector<std::string> homogeneous_vars(int d) {
  std::vector<std::string> v;
  for (int i = 0; i <= d; ++i) v.push_back("X" + std::to_string(i));
  return v;
}

}  // namespace canform

#endif
