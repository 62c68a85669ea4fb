#ifndef CANFORM_RAT_HPP
#define CANFORM_RAT_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "canform/errors.hpp"

namespace canform {

// Exact arbitrary-precision arithmetic. GMP keeps rationals canonical
// (gcd(num, den) = 1, den > 0), which the serialization below relies on.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline int sign_of(const Rat& r) { return r.sign(); }

inline Int num_of(const Rat& r) { return Int(numerator(r)); }
inline Int den_of(const Rat& r) { return Int(denominator(r)); }

inline bool is_integer(const Rat& r) { return den_of(r) == 1; }

// Serializes as "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& r) { return r.str(); }

// Accepts "p", "-p", "p/q"; the result is canonicalized by the division.
inline Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw InputError("rational with zero denominator: " + s);
    return Rat(p) / Rat(q);
  } catch (const std::runtime_error&) {
    throw InputError("cannot parse rational: '" + s + "'");
  }
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Scales a rational vector to coprime integers; (0,...,0) stays put.
// When flip_sign is set, orients so the first nonzero entry is positive.
inline std::vector<Rat> primitive_vector(const std::vector<Rat>& v,
                                         bool flip_sign) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, den_of(x));
  Int g = 0;
  for (const auto& x : v) g = gcd(g, Int(num_of(x) * (l / den_of(x))));
  if (g == 0) return v;
  Rat scale = Rat(l) / Rat(g);
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * scale);
  if (flip_sign) {
    for (const auto& x : out) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : out) y = -y;
      break;
    }
  }
  return out;
}

}  // namespace canform

#endif
