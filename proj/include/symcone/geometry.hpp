#pragma once

// Symmetric-cone geometry: the cone, the bounded domain, the tube domain,
// quasi-inverses, the generator actions with their cocycle scalars, the
// interval-resolvent map, and the reference-domain chart
//   z  |->  y + P(u^{1/2}) z,   u = x - y,
// which carries the reference interval {0 < z < e} onto the real interval
// manifold attached to the pair (x, y).

#include <cmath>
#include <optional>
#include <stdexcept>

#include "symcone/jordan.hpp"

namespace symcone {

inline constexpr double kMembershipTol = 1e-9;

inline bool in_cone(const Element& x, double tol = kMembershipTol) {
  if (!x.is_real())
    throw std::invalid_argument("in_cone: element must be real-kind");
  SpectralData sd = spectral(x);
  for (double lam : sd.eigenvalues)
    if (!(lam > tol)) return false;
  return true;
}

inline bool in_disk(const Element& x, double tol = kMembershipTol) {
  return spectral_norm(x) < 1.0 - tol;
}

inline bool in_tube(const Element& x, double tol = kMembershipTol) {
  return in_cone(imag_part(x), tol);
}

// quasi-inverse x^v = B(x,v)^{-1}(x - P(x)v), the polynomial extension of
// (x^{-1} - v)^{-1}
inline Element quasi_inverse(const Element& x, const Element& v) {
  check_same_algebra(x, v, "quasi_inverse");
  LinearMap B = bmap_b(x, v);
  Element rhs = sub(x, quad_p(x).apply(v));
  std::vector<cplx> sol = B.matrix.solve(rhs.coords());  // throws if singular
  return x.algebra().element(std::move(sol));
}

// ((w-y)^{-1} + (x-w)^{-1})^{-1}; determinant equals
// det(w-y) det(x-y)^{-1} det(x-w)
inline Element midpoint_resolvent(const Element& w, const Element& y,
                                  const Element& x) {
  Element a = sub(w, y), b = sub(x, w);
  return inv(add(inv(a), inv(b)));
}

// Polynomial form of the resolvent: with z = w - y, u = x - y,
//   ((w-y)^{-1} + (x-w)^{-1})^{-1} = z - P(z) u^{-1},
// finite even where the two inverses individually are not. On the reference
// interval (u = e) this is z - z o z.
inline Element resolvent_poly(const Element& z, const Element& u) {
  return sub(z, quad_p(z).apply(inv(u)));
}

inline Element resolvent_unit_ref(const Element& z) {
  return sub(z, square(z));
}

// ---------------------------------------------------------------------------
// group generators

enum class GeneratorKind { Translate, Dilate, Invert, Cayley, InverseCayley };

struct GroupGenerator {
  GeneratorKind kind;
  std::optional<Element> a;  // Translate offset / Dilate cone point

  static GroupGenerator translate(Element offset) {
    return {GeneratorKind::Translate, std::move(offset)};
  }
  static GroupGenerator dilate(Element cone_point) {
    if (!in_cone(cone_point, 0.0))
      throw std::invalid_argument("dilate: parameter must be cone-interior");
    return {GeneratorKind::Dilate, std::move(cone_point)};
  }
  static GroupGenerator invert() { return {GeneratorKind::Invert, {}}; }
  static GroupGenerator cayley() { return {GeneratorKind::Cayley, {}}; }
  static GroupGenerator inverse_cayley() {
    return {GeneratorKind::InverseCayley, {}};
  }
};

inline Element act(const GroupGenerator& g, const Element& x) {
  const JordanAlgebra& alg = x.algebra();
  const cplx i(0.0, 1.0);
  switch (g.kind) {
    case GeneratorKind::Translate:
      return add(x, *g.a);
    case GeneratorKind::Dilate:
      return quad_p(*g.a).apply(x);
    case GeneratorKind::Invert:
      return scale(-1.0, inv(x));
    case GeneratorKind::Cayley: {
      // (x + i e) o (i x + e)^{-1}
      Element num = add(x, scale(i, alg.unit()));
      Element den = add(scale(i, x), alg.unit());
      return mul(num, inv(den));
    }
    case GeneratorKind::InverseCayley: {
      Element num = sub(x, scale(i, alg.unit()));
      Element den = add(scale(-i, x), alg.unit());
      return mul(num, inv(den));
    }
  }
  throw std::logic_error("act: unreachable");
}

// chi of the automorphy cocycle at (g, x), principal branches
inline cplx cocycle_chi(const GroupGenerator& g, const Element& x) {
  const JordanAlgebra& alg = x.algebra();
  const cplx i(0.0, 1.0);
  const double half_rank = 0.5 * static_cast<double>(alg.rank());
  switch (g.kind) {
    case GeneratorKind::Translate:
      return cplx(1.0);
    case GeneratorKind::Dilate:
      return jordan_det(*g.a);
    case GeneratorKind::Invert: {
      const cplx det = jordan_det(x);
      if (std::abs(det) < 1e-150)
        throw std::domain_error("cocycle_chi: invert at singular point");
      return cplx(1.0) / det;
    }
    case GeneratorKind::Cayley: {
      // chi = det(2^{-1/2}(i x + e))^{-1}
      const cplx det = jordan_det(add(scale(i, x), alg.unit()));
      if (std::abs(det) < 1e-150)
        throw std::domain_error("cocycle_chi: cayley at singular point");
      return std::pow(2.0, half_rank) / det;
    }
    case GeneratorKind::InverseCayley: {
      const cplx det = jordan_det(add(scale(-i, x), alg.unit()));
      if (std::abs(det) < 1e-150)
        throw std::domain_error("cocycle_chi: inverse cayley at singular point");
      return std::pow(2.0, half_rank) / det;
    }
  }
  throw std::logic_error("cocycle_chi: unreachable");
}

// ---------------------------------------------------------------------------
// reference-domain chart

struct ContourChart {
  Element base;        // y
  Element u;           // x - y
  Element sqrt_u;      // principal square root of u
  LinearMap sqrt_map;  // P(u^{1/2})
  bool valid = false;

  Element map(const Element& z) const { return add(base, sqrt_map.apply(z)); }
};

// A pair (x, y) is admissible when u = x - y has a principal-branch square
// root: every closed-form eigenvalue of u stays off (-inf, 0]. For real u
// this is exactly cone membership.
inline ContourChart contour_chart(const Element& x, const Element& y) {
  check_same_algebra(x, y, "contour_chart");
  ContourChart chart;
  chart.base = y;
  chart.u = sub(x, y);
  try {
    chart.sqrt_u = sqrt_principal(chart.u);
  } catch (const std::exception&) {
    chart.valid = false;
    return chart;
  }
  chart.sqrt_map = quad_p(chart.sqrt_u);
  chart.valid = true;
  return chart;
}

}  // namespace symcone
