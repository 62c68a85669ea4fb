#ifndef CANFORM_PUSHFORWARD_HPP
#define CANFORM_PUSHFORWARD_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <utility>
#include <vector>

#include "canform/checks.hpp"
#include "canform/matrix.hpp"

// Numeric verification of the toric pushforward identity for d <= 2.
// Everything upstream of this header is exact; the numeric layer lives
// here alone. Root residuals are filtered at 1e-10 and comparisons
// default to 1e-9, comfortable for the desk-scale degrees (<= ~6)
// this module accepts.

namespace canform {

using Complex = std::complex<double>;

// Monomial map z -> sum_i z^{v_i} W_i between projective d-spaces.
// Components are stored with the lattice translated into the
// nonnegative orthant; that scales all of them by one common monomial,
// leaving the projective map, and hence its fibers over the torus,
// unchanged.
struct MonomialMap {
  int d = 0;
  std::vector<std::vector<int>> lattice;  // V_i = (1, v_i), as given
  std::vector<std::vector<Rat>> targets;  // W_i, length d+1
  std::vector<Poly> components;           // N_0..N_d in z_1..z_d
};

// Sign data of every maximal minor must agree between the target
// vectors W and the lattice vectors V.
inline CheckReport oriented_matroid_check(
    const std::vector<std::vector<Rat>>& W,
    const std::vector<std::vector<int>>& V) {
  if (W.empty() || W.size() != V.size())
    throw InputError("oriented matroid: W and V must pair up");
  const int n = static_cast<int>(W[0].size());
  for (const auto& w : W)
    if (static_cast<int>(w.size()) != n)
      throw InputError("oriented matroid: ragged W");
  for (const auto& v : V) {
    if (static_cast<int>(v.size()) != n)
      throw InputError("oriented matroid: V arity differs from W");
    if (v[0] != 1)
      throw InputError("oriented matroid: V rows must start with 1");
  }
  CheckReport rep;
  rep.name = "oriented-matroid";
  const int m = static_cast<int>(W.size());
  if (n > m)
    throw InputError("oriented matroid: fewer vectors than dimension");
  int subsets = 0;
  detail::for_each_subset(m, n, [&](const std::vector<int>& idx) {
    std::vector<std::vector<Rat>> wc, vc;
    for (int i : idx) {
      wc.push_back(W[i]);
      vc.push_back(std::vector<Rat>(V[i].begin(), V[i].end()));
    }
    const Rat dw = det(RatMatrix::from_columns(wc));
    const Rat dv = det(RatMatrix::from_columns(vc));
    const int sw = dw > 0 ? 1 : (dw < 0 ? -1 : 0);
    const int sv = dv > 0 ? 1 : (dv < 0 ? -1 : 0);
    ++subsets;
    if (sw != sv) {
      rep.passed = false;
      rep.witnesses.push_back(
          {{"mismatch", "maximal minor signs differ"},
           {"subset", idx},
           {"w_sign", sw},
           {"v_sign", sv}});
    }
  });
  rep.witnesses.push_back({{"subsets", subsets}});
  return rep;
}

inline MonomialMap build_map(const std::vector<std::vector<Rat>>& W,
                             const std::vector<std::vector<int>>& V) {
  if (!oriented_matroid_check(W, V).passed)
    throw InputError("build_map: W and V have different oriented matroids");
  MonomialMap m;
  m.d = static_cast<int>(W[0].size()) - 1;
  m.targets = W;
  m.lattice = V;
  std::vector<int> shift(m.d, 0);
  for (int j = 0; j < m.d; ++j)
    for (const auto& v : V) shift[j] = std::min(shift[j], v[j + 1]);
  for (int k = 0; k <= m.d; ++k) {
    Poly nk(m.d);
    for (size_t i = 0; i < V.size(); ++i) {
      Exponents e;
      e.reserve(m.d);
      for (int j = 0; j < m.d; ++j) e.push_back(V[i][j + 1] - shift[j]);
      nk.add_term(std::move(e), W[i][k]);
    }
    m.components.push_back(std::move(nk));
  }
  return m;
}

namespace detail {

inline Complex ceval(const Poly& p, std::span<const Complex> z) {
  Complex acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Complex t = to_double(c);
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= z[i];
    acc += t;
  }
  return acc;
}

// Magnitude budget of p at z; relative residuals divide by this.
inline double cmag(const Poly& p, std::span<const Complex> z) {
  double acc = 1.0;
  for (const auto& [e, c] : p.terms()) {
    double t = std::abs(to_double(c));
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= std::abs(z[i]);
    acc += t;
  }
  return acc;
}

// Roots of sum_k c[k] t^k as companion-matrix eigenvalues. Leading
// coefficients below 1e-12 of the largest are trimmed first.
inline std::vector<Complex> poly_roots(std::vector<Complex> c) {
  double mx = 0;
  for (const auto& x : c) mx = std::max(mx, std::abs(x));
  if (mx == 0) throw ResampleNeeded("root solve: zero polynomial");
  while (!c.empty() && std::abs(c.back()) < 1e-12 * mx) c.pop_back();
  if (c.size() <= 1) return {};
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success)
    throw ResampleNeeded("root solve: eigenvalue iteration failed");
  std::vector<Complex> roots;
  for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

inline std::vector<Complex> univariate_coeffs(const Poly& p) {
  std::vector<Complex> c(p.degree_in(0) + 1, Complex(0));
  for (const auto& [e, co] : p.terms()) c[e[0]] = to_double(co);
  return c;
}

inline Poly poly_minor_det(const std::vector<std::vector<Poly>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc(m[0][0].nvars());
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    const Poly term = m[0][c] * poly_minor_det(sub);
    if (c % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Sylvester resultant of two bivariate polynomials with respect to
// variable `elim`; the result is univariate in the other variable.
inline Poly resultant_2v(const Poly& f, const Poly& g, int elim) {
  const int keep = 1 - elim;
  auto coeff_rows = [&](const Poly& h) {
    std::vector<Poly> cs(h.degree_in(elim) + 1, Poly(1));
    for (const auto& [e, c] : h.terms())
      cs[e[elim]] += Poly::monomial(1, {e[keep]}, c);
    return cs;
  };
  const std::vector<Poly> fc = coeff_rows(f), gc = coeff_rows(g);
  const int p = static_cast<int>(fc.size()) - 1;
  const int q = static_cast<int>(gc.size()) - 1;
  // A factor constant in the eliminated variable contributes itself.
  if (p == 0) return fc[0];
  if (q == 0) return gc[0];
  const int n = p + q;
  std::vector<std::vector<Poly>> syl(n, std::vector<Poly>(n, Poly(1)));
  for (int i = 0; i < q; ++i)
    for (int k = 0; k <= p; ++k) syl[i][i + p - k] = fc[k];
  for (int i = 0; i < p; ++i)
    for (int k = 0; k <= q; ++k) syl[q + i][i + q - k] = gc[k];
  return poly_minor_det(syl);
}

}  // namespace detail

// All torus preimages of a sample point under the map, as complex
// coordinate vectors. d=1 reduces to one univariate solve; d=2 goes
// through a Sylvester resultant, numeric roots, and back-substitution
// with a residual filter. Draws that land on degenerate configurations
// signal for a fresh sample.
inline std::vector<std::vector<Complex>> preimages(
    const MonomialMap& m, const std::vector<Rat>& sample) {
  if (static_cast<int>(sample.size()) != m.d)
    throw InputError("preimages: sample arity mismatch");
  if (m.d < 1 || m.d > 2)
    throw DimensionError("preimages: only d <= 2 is supported");

  std::vector<Poly> F;
  for (int k = 1; k <= m.d; ++k)
    F.push_back(m.components[k] - m.components[0] * sample[k - 1]);

  std::vector<std::vector<Complex>> sols;
  if (m.d == 1) {
    for (const Complex& z : detail::poly_roots(detail::univariate_coeffs(F[0])))
      if (std::abs(z) > 1e-12) sols.push_back({z});
  } else {
    // Eliminate z2 first; swap when the resultant collapses.
    int elim = 1;
    Poly res = detail::resultant_2v(F[0], F[1], elim);
    if (res.is_zero()) {
      elim = 0;
      res = detail::resultant_2v(F[0], F[1], elim);
    }
    if (res.is_zero())
      throw ResampleNeeded("preimages: resultant vanishes identically");
    const int keep = 1 - elim;

    auto slice = [&](const Poly& h, const Complex& r) {
      std::vector<Complex> c(h.degree_in(elim) + 1, Complex(0));
      for (const auto& [e, co] : h.terms()) {
        Complex t = to_double(co);
        for (int k = 0; k < e[keep]; ++k) t *= r;
        c[e[elim]] += t;
      }
      return c;
    };

    for (const Complex& r : detail::poly_roots(detail::univariate_coeffs(res))) {
      if (std::abs(r) < 1e-12) continue;
      std::vector<Complex> candidates;
      for (const Poly& h : F)
        if (h.degree_in(elim) > 0)
          for (const Complex& s : detail::poly_roots(slice(h, r)))
            candidates.push_back(s);
      for (const Complex& s : candidates) {
        if (std::abs(s) < 1e-12) continue;
        std::vector<Complex> z(2);
        z[keep] = r;
        z[elim] = s;
        bool ok = true;
        for (const Poly& h : F)
          ok = ok &&
               std::abs(detail::ceval(h, z)) < 1e-10 * detail::cmag(h, z);
        bool dup = false;
        for (const auto& seen : sols)
          dup = dup || (std::abs(seen[0] - z[0]) + std::abs(seen[1] - z[1]) <
                        1e-8);
        if (ok && !dup) sols.push_back(std::move(z));
      }
    }
  }
  // Deterministic report order.
  std::sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
      if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
  });
  return sols;
}

// det(dx/dz) at z, from the exact quotient rule on the components.
inline Complex forward_jacobian_det(const MonomialMap& m,
                                    std::span<const Complex> z) {
  const Complex n0 = detail::ceval(m.components[0], z);
  Eigen::MatrixXcd jac(m.d, m.d);
  for (int k = 1; k <= m.d; ++k) {
    const Complex nk = detail::ceval(m.components[k], z);
    for (int j = 0; j < m.d; ++j) {
      const Complex dnk = detail::ceval(m.components[k].derivative(j), z);
      const Complex dn0 = detail::ceval(m.components[0].derivative(j), z);
      jac(k - 1, j) = (dnk * n0 - nk * dn0) / (n0 * n0);
    }
  }
  return jac.determinant();
}

struct PushforwardReport {
  std::vector<Rat> sample;
  std::vector<std::vector<Complex>> preimages;
  int degree_found = 0;
  Complex lhs;
  double rhs = 0;
  double abs_err = 0;
  double rel_err = 0;
  bool exact = false;  // rational single-preimage path, compared exactly
  bool passed = false;
};

// Compares sum_j det(dz/dx)|_j / prod_i z_i^(j) against the canonical
// form of the target at interior samples. The identity pins |lhs| and a
// global sign that must be consistent across samples; each preimage
// summand may be irrational even though the sum is rational.
inline std::vector<PushforwardReport> pushforward_check(
    const std::vector<std::vector<Rat>>& W,
    const std::vector<std::vector<int>>& V, const Polytope& target,
    int nsamples, double tol, std::uint64_t seed = 4242, int threads = 1) {
  if (nsamples < 1) throw InputError("pushforward_check: need samples");
  if (!(tol > 0)) throw InputError("pushforward_check: tolerance must be positive");
  MonomialMap map = build_map(W, V);
  if (map.d < 1 || map.d > 2)
    throw DimensionError("pushforward_check: only d <= 2 is supported");

  std::vector<std::vector<Rat>> waff, vaff;
  for (const auto& w : W) {
    if (w[0] <= 0)
      throw InputError("pushforward_check: W heights must be positive");
    std::vector<Rat> a;
    for (int j = 1; j <= map.d; ++j) a.push_back(w[j] / w[0]);
    waff.push_back(std::move(a));
  }
  for (const auto& v : V)
    vaff.push_back(std::vector<Rat>(v.begin() + 1, v.end()));
  {
    auto a = hull_from_vertices(map.d, waff).vertices;
    auto b = target.vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw InputError("pushforward_check: target is not the hull of W");
  }
  const CanonicalForm omega = canonical_form(target);
  const Rat expected_degree = normalized_volume(hull_from_vertices(map.d, vaff));

  auto run_slot = [&](int slot) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      const auto x = interior_points(
          target, 1, seed + 1000003ull * slot + attempt)[0];
      PushforwardReport rep;
      rep.sample = x;
      const bool linear_fiber = map.d == 1 &&
                                map.components[0].degree_in(0) <= 1 &&
                                map.components[1].degree_in(0) <= 1;
      try {
        // Single rational preimage: evaluate the chain rule exactly.
        if (linear_fiber) {
          const Poly f = map.components[1] - map.components[0] * x[0];
          const Rat c1 = f.derivative(0).constant_value();
          if (c1 == 0) throw ResampleNeeded("fiber equation degenerates");
          const Rat z0 = -f.eval(std::vector<Rat>{Rat(0)}) / c1;
          if (z0 == 0) throw ResampleNeeded("preimage at torus boundary");
          const Poly n0 = map.components[0], n1 = map.components[1];
          const std::vector<Rat> zv{z0};
          const Rat v0 = n0.eval(zv);
          const Rat dxdz =
              (n1.derivative(0).eval(zv) * v0 - n1.eval(zv) *
               n0.derivative(0).eval(zv)) / (v0 * v0);
          if (dxdz == 0) throw ResampleNeeded("singular Jacobian");
          const Rat lhs_exact = 1 / (dxdz * z0);
          const Rat rhs_exact = form_value(omega, x);
          rep.preimages = {{Complex(to_double(z0), 0)}};
          rep.degree_found = 1;
          rep.lhs = Complex(to_double(lhs_exact), 0);
          rep.rhs = to_double(rhs_exact);
          rep.exact = true;
          const Rat diff = abs(abs(lhs_exact) - abs(rhs_exact));
          rep.abs_err = to_double(diff);
          rep.rel_err = rep.abs_err == 0 ? 0 : rep.abs_err / std::abs(rep.rhs);
          rep.passed = diff == 0 && Rat(rep.degree_found) == expected_degree;
          return rep;
        }

        rep.preimages = preimages(map, x);
        rep.degree_found = static_cast<int>(rep.preimages.size());
        Complex lhs = 0;
        for (const auto& z : rep.preimages) {
          const Complex dj = forward_jacobian_det(map, z);
          if (std::abs(dj) < 1e-12)
            throw ResampleNeeded("singular Jacobian at a preimage");
          Complex prod = 1;
          for (const auto& zi : z) prod *= zi;
          lhs += 1.0 / (dj * prod);
        }
        rep.lhs = lhs;
      } catch (const ResampleNeeded&) {
        continue;
      }
      rep.rhs = to_double(form_value(omega, x));
      rep.abs_err = std::abs(std::abs(rep.lhs) - std::abs(rep.rhs));
      rep.rel_err = rep.abs_err / std::max(std::abs(rep.rhs), 1e-300);
      rep.passed = rep.rel_err < tol && std::abs(rep.lhs.imag()) < tol &&
                   Rat(rep.degree_found) == expected_degree;
      return rep;
    }
    throw InternalError("pushforward_check: resampling never converged");
  };

  std::vector<PushforwardReport> reports(nsamples);
  if (threads > 1) {
    std::vector<std::future<PushforwardReport>> futs;
    for (int i = 0; i < nsamples; ++i)
      futs.push_back(
          std::async(std::launch::async, [&run_slot, i] { return run_slot(i); }));
    for (int i = 0; i < nsamples; ++i) reports[i] = futs[i].get();
  } else {
    for (int i = 0; i < nsamples; ++i) reports[i] = run_slot(i);
  }

  // One orientation for the whole batch.
  int gsign = 0;
  for (auto& rep : reports) {
    const double prod = rep.lhs.real() * rep.rhs;
    const int s = prod > 0 ? 1 : (prod < 0 ? -1 : 0);
    if (gsign == 0) gsign = s;
    if (s == 0 || s != gsign) rep.passed = false;
  }
  return reports;
}

// Phi factors as the toric embedding by all lattice monomials followed
// by the linear map with columns W; both composites must agree with the
// assembled components projectively, exactly, at rational points.
inline CheckReport factorization_check(const MonomialMap& m,
                                       std::uint64_t seed = 77) {
  CheckReport rep;
  rep.name = "factorization";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw_num(1, 9), draw_den(1, 7);
  std::vector<int> shift(m.d, 0);
  for (int j = 0; j < m.d; ++j)
    for (const auto& v : m.lattice) shift[j] = std::min(shift[j], v[j + 1]);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rat> z;
    for (int j = 0; j < m.d; ++j)
      z.push_back(Rat(draw_num(rng), draw_den(rng)));
    // alpha with the same orthant translation the components use
    std::vector<Rat> alpha;
    for (const auto& v : m.lattice) {
      Rat t = 1;
      for (int j = 0; j < m.d; ++j)
        for (int k = 0; k < v[j + 1] - shift[j]; ++k) t *= z[j];
      alpha.push_back(t);
    }
    bool ok = true;
    for (int k = 0; k <= m.d; ++k) {
      Rat beta_k = 0;
      for (size_t i = 0; i < m.targets.size(); ++i)
        beta_k += m.targets[i][k] * alpha[i];
      ok = ok && beta_k == m.components[k].eval(z);
    }
    if (!ok)
      rep.witnesses.push_back(
          {{"mismatch", "factored and direct evaluations differ"},
           {"point", detail::json_point(z)}});
    rep.passed = rep.passed && ok;
  }
  rep.witnesses.push_back({{"points", 5}});
  return rep;
}

}  // namespace canform

#endif
