#pragma once

// The scalar intertwining integral operator in its reference-domain form,
//
//   F(x, y) = int_{0<z<e} det(z)^{lambda-n/r} det(e-z)^{mu-n/r}
//                 Delta_k( P(u^{1/2}) (z - z o z) ) f(y + P(u^{1/2}) z) dz,
//
// with u = x - y. This is the contour integral attached to the pair (x, y)
// after the chart substitution w = y + P(u^{1/2})z: the det(u) powers cancel
// exactly against the det(x-y) prefactor, and the interval resolvent reduces
// to P(u^{1/2})(z - z o z). The kernel is normalized so that its lowest
// component at x is Delta_k(x); on constants the operator reproduces
// B_r(lambda, mu, k) Delta_k(x - y).
//
// Also here: the classical rank-1 holographic integral and its composition
// with the bidifferential bracket, and per-generator equivariance residuals.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcone/geometry.hpp"
#include "symcone/jordan.hpp"
#include "symcone/polynomial.hpp"
#include "symcone/quadrature.hpp"
#include "symcone/special.hpp"

namespace symcone {

struct ScalarFunction {
  std::string label;
  std::function<cplx(const Element&)> eval;

  static ScalarFunction constant(cplx c) {
    return {"const", [c](const Element&) { return c; }};
  }
  static ScalarFunction monomial(std::vector<int> expo) {
    return {"monomial", [e = std::move(expo)](const Element& z) {
              cplx acc(1.0);
              for (std::size_t i = 0; i < e.size() && i < z.coords().size(); ++i)
                for (int t = 0; t < e[i]; ++t) acc *= z.coord(i);
              return acc;
            }};
  }
  static ScalarFunction delta_power(Signature k) {
    return {"delta-power",
            [k = std::move(k)](const Element& z) { return delta_k(z, k); }};
  }
  static ScalarFunction callback(std::string label,
                                 std::function<cplx(const Element&)> fn) {
    return {std::move(label), std::move(fn)};
  }
};

struct HoloResult {
  cplx value{0.0};
  double quad_error = 0.0;
  WeightParams params;
  Element x, y;
};

namespace detail {

// nodes and complex weights for int_{-1}^1 g(z) (1-z)^a (1+z)^b dz.
// Real exponents use the matching Gauss-Jacobi rule (exact for polynomial g);
// complex exponents oscillate at the endpoints, so the rule switches to the
// sin-mapped Legendre grid with the full weight evaluated at the nodes.
struct WeightedRule1D {
  std::vector<double> x;
  std::vector<cplx> w;
};

inline WeightedRule1D jacobi_rule_complex(std::size_t n, cplx a, cplx b) {
  WeightedRule1D out;
  if (a.imag() == 0.0 && b.imag() == 0.0) {
    GaussRule g = gauss_jacobi(n, a.real(), b.real());
    out.x = g.x;
    out.w.assign(g.w.begin(), g.w.end());
    return out;
  }
  GaussRule g = gauss_sym_trig(n);
  out.x = g.x;
  out.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = g.x[i];
    out.w[i] = g.w[i] * std::exp(a * std::log(1.0 - z) + b * std::log(1.0 + z));
  }
  return out;
}

}  // namespace detail

inline HoloResult holo_up_scalar(const WeightParams& params,
                                 const ScalarFunction& f, const Element& x,
                                 const Element& y, const QuadratureRule& rule) {
  const JordanAlgebra& alg = *params.alg;
  if (x.algebra_ptr() != params.alg || rule.alg != params.alg)
    throw std::invalid_argument("holo_up_scalar: algebra mismatch");
  ContourChart chart = contour_chart(x, y);
  if (!chart.valid)
    throw std::invalid_argument("holo_up_scalar: inadmissible pair (x, y)");

  const double nr = static_cast<double>(alg.dim()) / static_cast<double>(alg.rank());
  const cplx el = params.lambda - nr;
  const cplx em = params.mu - nr;
  const Element unit = alg.unit();
  const Mat& S = chart.sqrt_map.matrix;
  const bool k_trivial = (params.k.sum() == 0);

  auto integrand = [&](const Element& z) -> cplx {
    const double dz = jordan_det(z).real();
    const double de = jordan_det(sub(unit, z)).real();
    if (!(dz > 0.0) || !(de > 0.0))
      throw std::runtime_error("holo_up_scalar: node outside reference domain");
    cplx val = std::exp(el * std::log(dz) + em * std::log(de));
    if (!k_trivial) {
      Element res = resolvent_unit_ref(z);  // z - z o z
      Element mapped(params.alg, S.apply(res.coords()), ScalarKind::Complex);
      val *= delta_k(mapped, params.k);
    }
    Element w(params.alg, S.apply(z.coords()), ScalarKind::Complex);
    val *= f.eval(add(chart.base, w));
    return val;
  };

  IntegrationResult r = integrate(rule, integrand);
  return {r.value, r.error_estimate, params, x, y};
}

// lhs: the operator applied to the constant 1 at (u, 0);
// rhs: B_r(lambda, mu, k) Delta_k(u). Equality pins the normalization.
inline std::pair<cplx, cplx> min_ktype_image(const WeightParams& params,
                                             const Element& u,
                                             const QuadratureRule& rule) {
  if (!u.is_real() || !in_cone(u, 0.0))
    throw std::invalid_argument("min_ktype_image: u must be cone-interior");
  HoloResult lhs = holo_up_scalar(params, ScalarFunction::constant(1.0), u,
                                  u.algebra().zero(), rule);
  const cplx rhs = beta_constant(params) * delta_k(u, params.k);
  return {lhs.value, rhs};
}

// ---------------------------------------------------------------------------
// rank-1 classical holographic integral
//
//   (x-y)^l / (2^{lambda+mu+2l-1} l!) *
//     int_{-1}^{1} f( ((y-x)z + (x+y))/2 ) (1-z)^{lambda+l-1} (1+z)^{mu+l-1} dz

inline cplx kp_holo_1d(cplx lambda, cplx mu, int l,
                       const std::function<cplx(cplx)>& f, cplx x, cplx y,
                       std::size_t size = 64) {
  if (l < 0) throw std::invalid_argument("kp_holo_1d: l must be >= 0");
  if (!(lambda.real() > -static_cast<double>(l)) ||
      !(mu.real() > -static_cast<double>(l)))
    throw std::invalid_argument("kp_holo_1d: need Re(lambda), Re(mu) > -l");
  if (x == y) throw std::invalid_argument("kp_holo_1d: x and y must differ");
  if (!(x.imag() > 0.0) || !(y.imag() > 0.0))
    throw std::invalid_argument("kp_holo_1d: points must lie in the upper half plane");

  detail::WeightedRule1D g = detail::jacobi_rule_complex(
      size, lambda + static_cast<double>(l) - 1.0,
      mu + static_cast<double>(l) - 1.0);
  std::vector<cplx> terms(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double z = g.x[i];
    const cplx w = 0.5 * ((y - x) * z + (x + y));
    terms[i] = g.w[i] * f(w);
  }
  cplx integral = pairwise_sum(terms);
  cplx pre = cpow(cplx(2.0), lambda + mu + 2.0 * l - 1.0);
  for (int t = 1; t <= l; ++t) pre *= static_cast<double>(t);
  cplx diffpow(1.0);
  for (int t = 0; t < l; ++t) diffpow *= (x - y);
  return diffpow / pre * integral;
}

// Polynomial image of the rank-1 holographic integral: exact in (x, y) once
// the Jacobi moments are in hand. Needed to compose with the bracket.
inline Poly2<cplx> kp_holo_poly(cplx lambda, cplx mu, int l,
                                const Poly1<cplx>& f) {
  if (l < 0) throw std::invalid_argument("kp_holo_poly: l must be >= 0");
  if (!(lambda.real() > -static_cast<double>(l)) ||
      !(mu.real() > -static_cast<double>(l)))
    throw std::invalid_argument("kp_holo_poly: need Re(lambda), Re(mu) > -l");
  const std::size_t deg = f.size() == 0 ? 0 : f.size() - 1;
  const std::size_t quad_n =
      (lambda.imag() == 0.0 && mu.imag() == 0.0) ? deg + l + 8 : 96;
  detail::WeightedRule1D g = detail::jacobi_rule_complex(
      quad_n, lambda + static_cast<double>(l) - 1.0,
      mu + static_cast<double>(l) - 1.0);
  std::vector<cplx> moments(deg + 1, cplx(0.0));
  for (std::size_t i = 0; i < quad_n; ++i) {
    const double z = g.x[i];
    cplx zp(1.0);
    for (std::size_t m = 0; m <= deg; ++m) {
      moments[m] += g.w[i] * zp;
      zp *= z;
    }
  }

  // f evaluated at w0 + delta z, collected by powers of z
  const Poly2<cplx> w0 = Poly2<cplx>::monomial(1, 0, 0.5) +
                         Poly2<cplx>::monomial(0, 1, 0.5);
  const Poly2<cplx> delta = Poly2<cplx>::monomial(0, 1, 0.5) -
                            Poly2<cplx>::monomial(1, 0, 0.5);
  std::vector<Poly2<cplx>> acc;  // coefficients of z^m
  for (std::size_t k = f.size(); k-- > 0;) {
    std::vector<Poly2<cplx>> next(acc.size() + 1);
    for (std::size_t m = 0; m < acc.size(); ++m) {
      next[m] = next[m] + acc[m] * w0;
      next[m + 1] = next[m + 1] + acc[m] * delta;
    }
    if (next.empty()) next.resize(1);
    next[0] = next[0] + Poly2<cplx>::constant(f.coeff(k));
    acc = std::move(next);
  }

  Poly2<cplx> sum;
  for (std::size_t m = 0; m < acc.size() && m <= deg; ++m)
    sum = sum + acc[m].scaled(moments[m]);

  Poly2<cplx> xy = Poly2<cplx>::monomial(1, 0, 1.0) -
                   Poly2<cplx>::monomial(0, 1, 1.0);
  for (int t = 0; t < l; ++t) sum = sum * xy;
  cplx pre = cpow(cplx(2.0), lambda + mu + 2.0 * l - 1.0);
  for (int t = 1; t <= l; ++t) pre *= static_cast<double>(t);
  return sum.scaled(cplx(1.0) / pre);
}

// Bracket-after-integral on monomials w^j. Each composite is a multiple of
// the identity on the weight-(lambda+mu+2l) space, so the returned ratios
// must coincide across degrees; the common value is reported, not asserted.
inline std::vector<cplx> rc_kp_composition(cplx lambda, cplx mu, int l,
                                           int degree_cap) {
  std::vector<cplx> ratios;
  for (int j = 0; j <= degree_cap; ++j) {
    Poly1<cplx> f = Poly1<cplx>::monomial(j);
    Poly2<cplx> img = kp_holo_poly(lambda, mu, l, f);
    Poly1<cplx> back = rankin_cohen<cplx>(lambda, mu, l, img);
    ratios.push_back(back.coeff(static_cast<std::size_t>(j)));
  }
  return ratios;
}

// ---------------------------------------------------------------------------
// equivariance residuals
//
// Supported configurations (others are rejected, not approximated):
//   Translate(a), a real                         - any signature
//   Dilate(a), a cone-interior                   - frame-diagonal a for
//                                                  general k; any a when k is
//                                                  scalar type (l,..,l)
//   Invert                                       - scalar-type k only; every
//                                                  det along the path must
//                                                  stay off (-inf, 0]
// The identities checked are the transformation rules of the integral under
// the substitution w -> g.w, with all cocycle scalars taken principal:
//   Translate: F(x+a, y+a; f) = F(x, y; f(.+a))
//   Dilate:    F(P(a)x, P(a)y; f) = Delta_k(a)^2 F(x, y; f o P(a))
//   Invert:    F(-x^{-1}, -y^{-1}; f)
//                = det(x)^lambda det(y)^mu F(x, y; det(w)^{-lambda-mu-2l} f(-w^{-1}))

struct EquivarianceCheck {
  double residual = 0.0;
  double error_budget = 0.0;
};

namespace detail {

inline bool is_frame_diagonal(const Element& a, double tol = 1e-12) {
  const JordanAlgebra& alg = a.algebra();
  Element rec = alg.zero();
  for (const Element& ej : alg.frame())
    rec = add(rec, scale(inner(a, ej), ej));
  return sub(rec, a).norm() <= tol * std::max(1.0, a.norm());
}

inline bool is_scalar_signature(const Signature& k) {
  for (std::size_t j = 1; j < k.size(); ++j)
    if (k.part(j) != k.part(0)) return false;
  return true;
}

inline cplx safe_cpow(cplx base, cplx expo, const char* what) {
  if (std::abs(base) < 1e-150 ||
      (base.real() < 0.0 && std::abs(base.imag()) < 1e-9 * std::abs(base)))
    throw std::domain_error(std::string(what) + ": branch-unsafe configuration");
  return cpow(base, expo);
}

}  // namespace detail

inline EquivarianceCheck equivariance_residual(const WeightParams& params,
                                               const ScalarFunction& f,
                                               const GroupGenerator& g,
                                               const Element& x, const Element& y,
                                               const QuadratureRule& rule) {
  switch (g.kind) {
    case GeneratorKind::Translate: {
      const Element& a = *g.a;
      if (!a.is_real())
        throw std::invalid_argument("equivariance: translation must be real");
      HoloResult lhs = holo_up_scalar(params, f, add(x, a), add(y, a), rule);
      ScalarFunction shifted = ScalarFunction::callback(
          "shifted", [&f, &a](const Element& w) { return f.eval(add(w, a)); });
      HoloResult rhs = holo_up_scalar(params, shifted, x, y, rule);
      return {std::abs(lhs.value - rhs.value), lhs.quad_error + rhs.quad_error};
    }
    case GeneratorKind::Dilate: {
      const Element& a = *g.a;
      const bool scalar_k = detail::is_scalar_signature(params.k);
      if (!scalar_k && !detail::is_frame_diagonal(a))
        throw std::invalid_argument(
            "equivariance: dilation needs a frame-diagonal parameter for "
            "non-scalar signatures");
      LinearMap Pa = quad_p(a);
      HoloResult lhs =
          holo_up_scalar(params, f, Pa.apply(x), Pa.apply(y), rule);
      ScalarFunction pulled = ScalarFunction::callback(
          "dilated", [&f, &Pa](const Element& w) { return f.eval(Pa.apply(w)); });
      HoloResult rhs = holo_up_scalar(params, pulled, x, y, rule);
      cplx factor = delta_k(a, params.k);
      factor *= factor;
      return {std::abs(lhs.value - factor * rhs.value),
              lhs.quad_error + std::abs(factor) * rhs.quad_error};
    }
    case GeneratorKind::Invert: {
      if (!detail::is_scalar_signature(params.k))
        throw std::invalid_argument(
            "equivariance: invert supports scalar-type signatures only "
            "(branch-unsafe configuration otherwise)");
      const int l = params.k.size() ? params.k.part(0) : 0;
      const cplx twist_expo =
          -(params.lambda + params.mu + 2.0 * static_cast<double>(l));
      HoloResult lhs = holo_up_scalar(params, f, scale(-1.0, inv(x)),
                                      scale(-1.0, inv(y)), rule);
      ScalarFunction twisted = ScalarFunction::callback(
          "inverted", [&f, twist_expo](const Element& w) {
            const cplx dw = jordan_det(w);
            return detail::safe_cpow(dw, twist_expo, "equivariance") *
                   f.eval(scale(-1.0, inv(w)));
          });
      HoloResult rhs = holo_up_scalar(params, twisted, x, y, rule);
      const cplx pre =
          detail::safe_cpow(jordan_det(x), params.lambda, "equivariance") *
          detail::safe_cpow(jordan_det(y), params.mu, "equivariance");
      return {std::abs(lhs.value - pre * rhs.value),
              lhs.quad_error + std::abs(pre) * rhs.quad_error};
    }
    default:
      throw std::invalid_argument(
          "equivariance: only the translation, dilation and inversion "
          "generators are supported");
  }
}

}  // namespace symcone
