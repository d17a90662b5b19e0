#pragma once

// Numerical integration over the reference interval {0 < z < e} and over the
// cone with exponential weight. Two independent engine families:
//
//  * EigenAngle: eigenvalue/angle parametrization with the trace-form Weyl
//    density c * prod_{i<j} |a_i - a_j|^d (c = sqrt(2) for Sym(2,R) with
//    theta in [0,pi); c = 2^{1-n/2} with the S^{n-2} surface measure for
//    Spin(n)). Eigenvalue pairs run over the ordered triangle via a Duffy
//    map, so the |a_1 - a_2| factor never produces a kink.
//
//  * CartesianIndicator: entry/trace-orthonormal coordinates, membership
//    realized through exact innermost bounds (interval in the off-diagonal
//    coordinate for Sym(2,R), ball radius for Spin(n)) with the outer square
//    split along its kink line. No Weyl constant enters, which is the point:
//    agreement between the engines validates the measure normalization.
//
// Cone rules integrate g |-> int_cone g(x) e^{-tr x} det(x)^alpha dm(x) via a
// product substitution a1 = s/(1+t), a2 = s t/(1+t) that turns the weight
// into generalized-Laguerre x Jacobi exactly.

#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"
#include "symcone/geometry.hpp"
#include "symcone/jordan.hpp"
#include "symcone/linalg.hpp"

namespace symcone {

// ---------------------------------------------------------------------------
// 1D Gauss rules via Golub-Welsch

// weight (1-x)^a (1+x)^b on (-1,1)
inline GaussRule gauss_jacobi(std::size_t n, double a, double b) {
  if (!(a > -1.0) || !(b > -1.0))
    throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  std::vector<double> diag(n), off(n > 0 ? n - 1 : 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 0) {
      diag[j] = (b - a) / (a + b + 2.0);
    } else {
      const double jj = static_cast<double>(j);
      const double den = (2.0 * jj + a + b) * (2.0 * jj + a + b + 2.0);
      diag[j] = (b * b - a * a) / den;
    }
  }
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    double e2;
    if (j == 1) {
      e2 = 4.0 * (a + 1.0) * (b + 1.0) /
           ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
    } else {
      e2 = 4.0 * jj * (jj + a) * (jj + b) * (jj + a + b) /
           ((2.0 * jj + a + b) * (2.0 * jj + a + b) * (2.0 * jj + a + b + 1.0) *
            (2.0 * jj + a + b - 1.0));
    }
    off[j - 1] = std::sqrt(e2);
  }
  const double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  return golub_welsch(std::move(diag), std::move(off), mu0);
}

inline GaussRule gauss_legendre(std::size_t n) { return gauss_jacobi(n, 0.0, 0.0); }

// Legendre nodes mapped to (0,1)
inline GaussRule gauss_legendre_01(std::size_t n) {
  GaussRule g = gauss_legendre(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.x[i] = 0.5 * (g.x[i] + 1.0);
    g.w[i] *= 0.5;
  }
  return g;
}

// Legendre rule on (0,1) seen through x = sin^2(psi). The substitution turns
// x^s and (1-x)^s endpoint factors into sin^{2s}/cos^{2s}, doubling the
// endpoint order; half-integer powers of x(1-x) become analytic.
inline GaussRule gauss_01_trig(std::size_t n) {
  GaussRule g = gauss_legendre(n);
  const double quarter_pi = 0.25 * std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    const double psi = quarter_pi * (g.x[i] + 1.0);
    const double s = std::sin(psi);
    g.x[i] = s * s;
    g.w[i] *= quarter_pi * std::sin(2.0 * psi);
  }
  return g;
}

// Legendre rule on (-1,1) seen through x = sin(theta); doubles the order of
// (1-x^2)^s endpoint factors.
inline GaussRule gauss_sym_trig(std::size_t n) {
  GaussRule g = gauss_legendre(n);
  const double half_pi = 0.5 * std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    const double th = half_pi * g.x[i];
    g.x[i] = std::sin(th);
    g.w[i] *= half_pi * std::cos(th);
  }
  return g;
}

// weight x^a e^{-x} on (0, inf)
inline GaussRule gauss_laguerre(std::size_t n, double a) {
  if (!(a > -1.0))
    throw std::invalid_argument("gauss_laguerre: exponent must exceed -1");
  std::vector<double> diag(n), off(n > 0 ? n - 1 : 0);
  for (std::size_t j = 0; j < n; ++j)
    diag[j] = 2.0 * static_cast<double>(j) + a + 1.0;
  for (std::size_t j = 1; j < n; ++j)
    off[j - 1] = std::sqrt(static_cast<double>(j) * (static_cast<double>(j) + a));
  return golub_welsch(std::move(diag), std::move(off), std::exp(std::lgamma(a + 1.0)));
}

// weight t^b (1-t)^a on (0,1)
inline GaussRule gauss_jacobi_01(std::size_t n, double a, double b) {
  GaussRule g = gauss_jacobi(n, a, b);
  const double scale = std::exp(-(a + b + 1.0) * std::log(2.0));
  for (std::size_t i = 0; i < n; ++i) {
    g.x[i] = 0.5 * (g.x[i] + 1.0);
    g.w[i] *= scale;
  }
  return g;
}

// ---------------------------------------------------------------------------

enum class Scheme { GaussJacobi1D, EigenAngle, CartesianIndicator, MonteCarlo };

inline const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::GaussJacobi1D: return "gauss-jacobi-1d";
    case Scheme::EigenAngle: return "eigen-angle";
    case Scheme::CartesianIndicator: return "cartesian-indicator";
    case Scheme::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

struct QuadratureRule {
  const JordanAlgebra* alg = nullptr;
  Scheme scheme = Scheme::GaussJacobi1D;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::vector<Element> nodes;
  std::vector<double> weights;
  std::shared_ptr<const QuadratureRule> companion;
};

inline double angular_constant(const JordanAlgebra& alg) {
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      return 1.0;
    case AlgebraKind::SymReal:
      if (alg.rank() != 2)
        throw std::invalid_argument("angular_constant: SymReal(2) only");
      return std::sqrt(2.0);
    case AlgebraKind::Spin:
      return std::pow(2.0, 1.0 - 0.5 * static_cast<double>(alg.dim()));
  }
  throw std::logic_error("angular_constant: unreachable");
}

namespace detail {

struct AngularNode {
  std::vector<double> dir;  // unit direction data (theta for sym2, xi for spin)
  double weight;
};

inline std::size_t default_angular(std::size_t size) {
  return std::max<std::size_t>(8, std::min<std::size_t>(size, 32));
}

inline std::vector<AngularNode> angular_nodes(const JordanAlgebra& alg,
                                              std::size_t size) {
  const double pi = std::numbers::pi;
  std::vector<AngularNode> out;
  if (alg.kind() == AlgebraKind::SymReal) {
    const std::size_t M = default_angular(size);
    for (std::size_t m = 0; m < M; ++m)
      out.push_back({{pi * (static_cast<double>(m) + 0.5) / static_cast<double>(M)},
                     pi / static_cast<double>(M)});
    return out;
  }
  // Spin(n): directions on S^{n-2}
  const std::size_t n = alg.dim();
  if (n == 3) {
    const std::size_t M = default_angular(size);
    for (std::size_t m = 0; m < M; ++m) {
      const double phi = 2.0 * pi * (static_cast<double>(m) + 0.5) /
                         static_cast<double>(M);
      out.push_back({{std::cos(phi), std::sin(phi)}, 2.0 * pi / static_cast<double>(M)});
    }
    return out;
  }
  if (n == 4) {
    const std::size_t M = default_angular(size);
    GaussRule gc = gauss_legendre(std::max<std::size_t>(6, M / 2));
    for (std::size_t i = 0; i < gc.x.size(); ++i) {
      const double c = gc.x[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (std::size_t m = 0; m < M; ++m) {
        const double phi = 2.0 * pi * (static_cast<double>(m) + 0.5) /
                           static_cast<double>(M);
        out.push_back({{c, s * std::cos(phi), s * std::sin(phi)},
                       gc.w[i] * 2.0 * pi / static_cast<double>(M)});
      }
    }
    return out;
  }
  throw std::invalid_argument("angular_nodes: Spin(n) supported for n <= 4");
}

inline Element sym2_from_eigen(const JordanAlgebra& alg, double a1, double a2,
                               double theta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double p = a1 * ct * ct + a2 * st * st;
  const double s = a1 * st * st + a2 * ct * ct;
  const double q = (a1 - a2) * ct * st;
  return alg.element(std::vector<double>{p, s, std::sqrt(2.0) * q});
}

inline Element spin_from_eigen(const JordanAlgebra& alg, double a1, double a2,
                               const std::vector<double>& xi) {
  std::vector<double> c(alg.dim(), 0.0);
  c[0] = 0.5 * (a1 + a2);
  for (std::size_t i = 0; i + 1 < alg.dim(); ++i)
    c[i + 1] = 0.5 * (a1 - a2) * xi[i];
  return alg.element(c);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// reference rules over {0 < z < e}

inline QuadratureRule reference_rule(const JordanAlgebra& alg, Scheme scheme,
                                     std::size_t size, std::uint64_t seed = 1);

namespace detail {

inline QuadratureRule reference_rank1(const JordanAlgebra& alg, std::size_t size) {
  QuadratureRule rule;
  rule.alg = &alg;
  rule.scheme = Scheme::GaussJacobi1D;
  rule.size = size;
  GaussRule g = gauss_01_trig(size);
  for (std::size_t i = 0; i < size; ++i) {
    rule.nodes.push_back(alg.element(std::vector<double>{g.x[i]}));
    rule.weights.push_back(g.w[i]);
  }
  return rule;
}

inline QuadratureRule reference_eigen(const JordanAlgebra& alg, std::size_t size) {
  QuadratureRule rule;
  rule.alg = &alg;
  rule.scheme = Scheme::EigenAngle;
  rule.size = size;
  const double d = alg.peirce_d();
  const double c_ang = angular_constant(alg);
  GaussRule gs = gauss_01_trig(size);
  GaussRule gt = gauss_01_trig(size);
  auto ang = angular_nodes(alg, size);
  // ordered eigenvalue pair via a1 = s, a2 = s*t; Jacobian s
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const double a1 = gs.x[i];
      const double a2 = a1 * gt.x[j];
      const double dens = c_ang * std::pow(a1 - a2, d) * a1 * gs.w[i] * gt.w[j];
      for (const auto& an : ang) {
        Element z = (alg.kind() == AlgebraKind::SymReal)
                        ? sym2_from_eigen(alg, a1, a2, an.dir[0])
                        : spin_from_eigen(alg, a1, a2, an.dir);
        rule.nodes.push_back(std::move(z));
        rule.weights.push_back(dens * an.weight);
      }
    }
  return rule;
}

inline QuadratureRule reference_cartesian_sym2(const JordanAlgebra& alg,
                                               std::size_t size) {
  QuadratureRule rule;
  rule.alg = &alg;
  rule.scheme = Scheme::CartesianIndicator;
  rule.size = size;
  GaussRule ga = gauss_01_trig(size);
  GaussRule gb = gauss_01_trig(size);
  GaussRule gq = gauss_sym_trig(size);
  // two Duffy triangles of the (p,s) square split along p+s=1; on each, the
  // admissible off-diagonal range is q^2 < min(ps, (1-p)(1-s)) with the
  // binding bound smooth inside the triangle
  for (int tri = 0; tri < 2; ++tri)
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        const double a = ga.x[i], b = gb.x[j];
        double p = a * b, s = a * (1.0 - b);
        if (tri == 1) {
          p = 1.0 - a * b;
          s = 1.0 - a * (1.0 - b);
        }
        const double qstar = std::sqrt(std::min(p * s, (1.0 - p) * (1.0 - s)));
        const double base_w = ga.w[i] * gb.w[j] * a;  // Duffy Jacobian a
        for (std::size_t m = 0; m < size; ++m) {
          const double q = qstar * gq.x[m];
          rule.nodes.push_back(alg.element(
              std::vector<double>{p, s, std::sqrt(2.0) * q}));
          rule.weights.push_back(base_w * std::sqrt(2.0) * qstar * gq.w[m]);
        }
      }
  return rule;
}

inline QuadratureRule reference_cartesian_spin(const JordanAlgebra& alg,
                                               std::size_t size) {
  QuadratureRule rule;
  rule.alg = &alg;
  rule.scheme = Scheme::CartesianIndicator;
  rule.size = size;
  const std::size_t n = alg.dim();
  const double vol_scale = std::pow(2.0, 0.5 * static_cast<double>(n));
  GaussRule gz = gauss_01_trig(size);
  GaussRule gr = gauss_01_trig(size);
  auto ang = angular_nodes(alg, size);
  // z1 panels split at the kink z1 = 1/2; the radial bound is exact
  for (int panel = 0; panel < 2; ++panel)
    for (std::size_t i = 0; i < size; ++i) {
      const double z1 = 0.5 * (static_cast<double>(panel) + gz.x[i]);
      const double w1 = 0.5 * gz.w[i];
      const double R = std::min(z1, 1.0 - z1);
      for (std::size_t j = 0; j < size; ++j) {
        const double rho = R * gr.x[j];
        const double wr = R * gr.w[j] * std::pow(rho, static_cast<double>(n) - 2.0);
        for (const auto& an : ang) {
          std::vector<double> c(n, 0.0);
          c[0] = z1;
          for (std::size_t t = 0; t + 1 < n; ++t) c[t + 1] = rho * an.dir[t];
          rule.nodes.push_back(alg.element(c));
          rule.weights.push_back(vol_scale * w1 * wr * an.weight);
        }
      }
    }
  return rule;
}

inline QuadratureRule reference_monte_carlo(const JordanAlgebra& alg,
                                            std::size_t size, std::uint64_t seed) {
  QuadratureRule rule;
  rule.alg = &alg;
  rule.scheme = Scheme::MonteCarlo;
  rule.size = size;
  rule.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const std::size_t n = alg.dim();
  double box_volume = 1.0;
  std::vector<double> lo(n, 0.0), hi(n, 1.0);
  if (alg.kind() == AlgebraKind::SymReal) {
    lo[2] = -std::sqrt(0.5);
    hi[2] = std::sqrt(0.5);
    box_volume = std::sqrt(2.0);
  } else if (alg.kind() == AlgebraKind::Spin) {
    for (std::size_t i = 1; i < n; ++i) {
      lo[i] = -0.5;
      hi[i] = 0.5;
    }
    // unit coordinate box carries the 2^{n/2} trace-form volume scale
    box_volume = std::pow(2.0, 0.5 * static_cast<double>(n));
  }
  const double w_each = box_volume / static_cast<double>(size);
  for (std::size_t t = 0; t < size; ++t) {
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i)
      c[i] = lo[i] + (hi[i] - lo[i]) * u01(rng);
    Element z = alg.element(c);
    Element ez = sub(alg.unit(), z);
    if (in_cone(z, 0.0) && in_cone(ez, 0.0)) {
      rule.nodes.push_back(std::move(z));
      rule.weights.push_back(w_each);
    }
  }
  return rule;
}

}  // namespace detail

inline QuadratureRule reference_rule(const JordanAlgebra& alg, Scheme scheme,
                                     std::size_t size, std::uint64_t seed) {
  if (size < 2) throw std::invalid_argument("reference_rule: size too small");
  QuadratureRule rule;
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      if (scheme != Scheme::GaussJacobi1D && scheme != Scheme::CartesianIndicator &&
          scheme != Scheme::MonteCarlo)
        throw std::invalid_argument("reference_rule: unsupported scheme for rank 1");
      rule = (scheme == Scheme::MonteCarlo)
                 ? detail::reference_monte_carlo(alg, size, seed)
                 : detail::reference_rank1(alg, size);
      rule.scheme = scheme;
      break;
    case AlgebraKind::SymReal:
      if (alg.rank() != 2)
        throw std::invalid_argument("reference_rule: SymReal supported at rank 2");
      if (scheme == Scheme::EigenAngle)
        rule = detail::reference_eigen(alg, size);
      else if (scheme == Scheme::CartesianIndicator)
        rule = detail::reference_cartesian_sym2(alg, size);
      else if (scheme == Scheme::MonteCarlo)
        rule = detail::reference_monte_carlo(alg, size, seed);
      else
        throw std::invalid_argument("reference_rule: unsupported scheme for SymReal");
      break;
    case AlgebraKind::Spin:
      if (scheme == Scheme::EigenAngle)
        rule = detail::reference_eigen(alg, size);
      else if (scheme == Scheme::CartesianIndicator)
        rule = detail::reference_cartesian_spin(alg, size);
      else if (scheme == Scheme::MonteCarlo)
        rule = detail::reference_monte_carlo(alg, size, seed);
      else
        throw std::invalid_argument("reference_rule: unsupported scheme for Spin");
      break;
  }
  if (size >= 4) {
    auto comp = std::make_shared<QuadratureRule>(
        reference_rule(alg, scheme, size / 2, seed + 1));
    comp->companion.reset();
    rule.companion = std::move(comp);
  }
  return rule;
}

// rule over the cone adapted to weight e^{-tr x} det(x)^alpha
inline QuadratureRule cone_rule(const JordanAlgebra& alg, std::size_t size,
                                double alpha = 0.0) {
  if (size < 2) throw std::invalid_argument("cone_rule: size too small");
  QuadratureRule rule;
  rule.alg = &alg;
  rule.scheme = Scheme::EigenAngle;
  rule.size = size;
  if (alg.kind() == AlgebraKind::Rank1) {
    GaussRule g = gauss_laguerre(size, alpha);
    for (std::size_t i = 0; i < size; ++i) {
      rule.nodes.push_back(alg.element(std::vector<double>{g.x[i]}));
      rule.weights.push_back(g.w[i]);
    }
  } else {
    if (alg.kind() == AlgebraKind::SymReal && alg.rank() != 2)
      throw std::invalid_argument("cone_rule: SymReal supported at rank 2");
    const double d = alg.peirce_d();
    const double c_ang = angular_constant(alg);
    // a1 = s/(1+t), a2 = s t/(1+t): the weight factors exactly as
    // s^{2 alpha + d + 1} e^{-s}  x  t^alpha (1-t)^d  x  (1+t)^{-(2 alpha + d + 2)}
    GaussRule gs = gauss_laguerre(size, 2.0 * alpha + d + 1.0);
    GaussRule gt = gauss_jacobi_01(size, d, alpha);
    auto ang = detail::angular_nodes(alg, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        const double s = gs.x[i], t = gt.x[j];
        const double a1 = s / (1.0 + t), a2 = s * t / (1.0 + t);
        const double w = c_ang * gs.w[i] * gt.w[j] *
                         std::pow(1.0 + t, -(2.0 * alpha + d + 2.0));
        for (const auto& an : ang) {
          Element z = (alg.kind() == AlgebraKind::SymReal)
                          ? detail::sym2_from_eigen(alg, a1, a2, an.dir[0])
                          : detail::spin_from_eigen(alg, a1, a2, an.dir);
          rule.nodes.push_back(std::move(z));
          rule.weights.push_back(w * an.weight);
        }
      }
  }
  if (size >= 4) {
    auto comp = std::make_shared<QuadratureRule>(cone_rule(alg, size / 2, alpha));
    comp->companion.reset();
    rule.companion = std::move(comp);
  }
  return rule;
}

// ---------------------------------------------------------------------------

struct IntegrationResult {
  cplx value{0.0};
  double error_estimate = 0.0;
};

namespace detail {

inline cplx rule_sum(const QuadratureRule& rule,
                     const std::function<cplx(const Element&)>& f) {
  const std::size_t n = rule.nodes.size();
  std::vector<cplx> terms(n);
  auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      terms[i] = f(rule.nodes[i]) * rule.weights[i];
  };
  const std::size_t kParallelThreshold = 32768;
  if (n >= kParallelThreshold) {
    const std::size_t nthreads =
        std::min<std::size_t>(4, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> futs;
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, eval_range, lo, hi));
    }
    for (auto& fu : futs) fu.get();
  } else {
    eval_range(0, n);
  }
  for (const auto& v : terms)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("integrate: non-finite integrand value at a node");
  return pairwise_sum(terms);
}

}  // namespace detail

inline IntegrationResult integrate(const QuadratureRule& rule,
                                   const std::function<cplx(const Element&)>& f) {
  IntegrationResult out;
  out.value = detail::rule_sum(rule, f);
  if (rule.scheme == Scheme::MonteCarlo && !rule.nodes.empty()) {
    // standard error of the indicator estimator; rejected samples count as 0
    const double N = static_cast<double>(rule.size);
    const double V = rule.weights[0] * N;
    double second = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      second += std::norm(V * f(rule.nodes[i])) / N;
    const double var = std::max(0.0, second - std::norm(out.value));
    out.error_estimate = std::sqrt(var / N);
    return out;
  }
  if (rule.companion) {
    const cplx cv = detail::rule_sum(*rule.companion, f);
    out.error_estimate = std::abs(out.value - cv);
  }
  return out;
}

// Angular normalization recovered from the Cartesian engine; the frozen
// analytic constant used by the eigen rules must agree to 1e-6 on two probes.
inline double calibrate_angular_constant(const JordanAlgebra& alg) {
  if (alg.kind() == AlgebraKind::Rank1) return 1.0;
  const double frozen = angular_constant(alg);
  const std::size_t size = 28;
  QuadratureRule eig = reference_rule(alg, Scheme::EigenAngle, size);
  QuadratureRule cart = reference_rule(alg, Scheme::CartesianIndicator, size);
  auto probe1 = [](const Element& z) {
    return std::exp(-jordan_trace(z));
  };
  auto probe2 = [](const Element& z) { return jordan_det(z); };
  const double c1 = frozen * integrate(cart, probe1).value.real() /
                    integrate(eig, probe1).value.real();
  const double c2 = frozen * integrate(cart, probe2).value.real() /
                    integrate(eig, probe2).value.real();
  if (std::abs(c1 - c2) > 1e-6 * std::abs(c1))
    throw std::runtime_error(
        "calibrate_angular_constant: calibration residual above threshold");
  return c1;
}

inline nlohmann::ordered_json rule_to_json(const QuadratureRule& rule) {
  nlohmann::ordered_json j;
  j["scheme"] = scheme_name(rule.scheme);
  j["size"] = rule.size;
  j["algebra"] = rule.alg->name();
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& z : rule.nodes) {
    auto c = nlohmann::ordered_json::array();
    for (const auto& v : z.coords()) c.push_back(v.real());
    nodes.push_back(std::move(c));
  }
  j["nodes"] = std::move(nodes);
  j["weights"] = rule.weights;
  return j;
}

}  // namespace symcone
