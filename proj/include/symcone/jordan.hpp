#pragma once

// Euclidean Jordan algebras of rank <= 2 plus Sym(r,R): the Jordan product,
// the L/P/D/B operator calculus, determinant/trace/trace-form, generic and
// spectral norms, and spectral functional calculus (real elements via
// eigendecomposition, complex elements of rank <= 2 via closed forms).
//
// Coordinates: Sym(r,R) elements are stored in a trace-orthonormal basis
// (diagonal entries, then (E_ij+E_ji)/sqrt(2) for i<j), so the trace form is
// the plain dot product and Lebesgue measure is the coordinate measure.
// Spin(n) elements are stored as (x1, xbar) with trace form 2<.,.>.

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcone/linalg.hpp"

namespace symcone {

enum class AlgebraKind { Rank1, SymReal, Spin };
enum class ScalarKind { Real, Complex };

class JordanAlgebra;
const JordanAlgebra& algebra_instance(AlgebraKind kind, std::size_t param);

class Element {
 public:
  Element() = default;
  Element(const JordanAlgebra* alg, std::vector<cplx> coords, ScalarKind kind)
      : alg_(alg), c_(std::move(coords)), kind_(kind) {}

  const JordanAlgebra& algebra() const { return *alg_; }
  const JordanAlgebra* algebra_ptr() const { return alg_; }
  const std::vector<cplx>& coords() const { return c_; }
  cplx coord(std::size_t i) const { return c_[i]; }
  ScalarKind scalar_kind() const { return kind_; }
  bool is_real() const { return kind_ == ScalarKind::Real; }

  double norm() const {
    double s = 0.0;
    for (const auto& z : c_) s += std::norm(z);
    return std::sqrt(s);
  }

 private:
  const JordanAlgebra* alg_ = nullptr;
  std::vector<cplx> c_;
  ScalarKind kind_ = ScalarKind::Real;
};

struct LinearMap {
  const JordanAlgebra* alg = nullptr;
  Mat matrix;

  Element apply(const Element& x) const;
  LinearMap compose(const LinearMap& o) const { return {alg, matrix * o.matrix}; }
  LinearMap inverse() const { return {alg, matrix.inverse()}; }
  cplx determinant() const { return matrix.determinant(); }
};

struct SpectralData {
  std::vector<double> eigenvalues;  // non-increasing
  std::vector<Element> idempotents;
};

class JordanAlgebra {
 public:
  static const JordanAlgebra& rank1() {
    return algebra_instance(AlgebraKind::Rank1, 1);
  }
  static const JordanAlgebra& sym_real(std::size_t r) {
    return algebra_instance(AlgebraKind::SymReal, r);
  }
  static const JordanAlgebra& spin(std::size_t n) {
    return algebra_instance(AlgebraKind::Spin, n);
  }

  AlgebraKind kind() const { return kind_; }
  std::size_t rank() const { return r_; }
  std::size_t dim() const { return n_; }
  double peirce_d() const { return d_; }
  const std::vector<Element>& frame() const { return frame_; }
  std::string name() const { return name_; }

  Element zero() const {
    return Element(this, std::vector<cplx>(n_, cplx(0.0)), ScalarKind::Real);
  }
  Element unit() const {
    std::vector<cplx> c(n_, cplx(0.0));
    switch (kind_) {
      case AlgebraKind::Rank1:
        c[0] = 1.0;
        break;
      case AlgebraKind::SymReal:
        for (std::size_t i = 0; i < r_; ++i) c[i] = 1.0;
        break;
      case AlgebraKind::Spin:
        c[0] = 1.0;
        break;
    }
    return Element(this, std::move(c), ScalarKind::Real);
  }

  Element element(std::vector<cplx> coords) const {
    if (coords.size() != n_)
      throw std::invalid_argument("Element: coordinate length != algebra dim");
    bool real = true;
    for (const auto& z : coords)
      if (z.imag() != 0.0) {
        real = false;
        break;
      }
    return Element(this, std::move(coords),
                   real ? ScalarKind::Real : ScalarKind::Complex);
  }
  Element element(std::vector<double> coords) const {
    std::vector<cplx> c(coords.begin(), coords.end());
    return element(std::move(c));
  }

  // index of the sqrt(2)-scaled off-diagonal coordinate for i<j (SymReal)
  std::size_t offdiag_index(std::size_t i, std::size_t j) const {
    std::size_t idx = r_;
    for (std::size_t a = 0; a < r_; ++a)
      for (std::size_t b = a + 1; b < r_; ++b) {
        if (a == i && b == j) return idx;
        ++idx;
      }
    throw std::logic_error("offdiag_index: bad indices");
  }

  Mat to_matrix(const Element& x) const {
    if (kind_ != AlgebraKind::SymReal)
      throw std::logic_error("to_matrix: SymReal only");
    Mat m(r_, r_);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < r_; ++i) m(i, i) = x.coord(i);
    std::size_t idx = r_;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = i + 1; j < r_; ++j) {
        m(i, j) = m(j, i) = x.coord(idx) * inv_sqrt2;
        ++idx;
      }
    return m;
  }

  Element from_matrix(const Mat& m) const {
    if (kind_ != AlgebraKind::SymReal)
      throw std::logic_error("from_matrix: SymReal only");
    const double sqrt2 = std::sqrt(2.0);
    std::vector<cplx> c(n_, cplx(0.0));
    for (std::size_t i = 0; i < r_; ++i) c[i] = m(i, i);
    std::size_t idx = r_;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = i + 1; j < r_; ++j) {
        c[idx] = 0.5 * (m(i, j) + m(j, i)) * sqrt2;
        ++idx;
      }
    return element(std::move(c));
  }

 private:
  friend const JordanAlgebra& algebra_instance(AlgebraKind, std::size_t);
  JordanAlgebra(AlgebraKind kind, std::size_t param) : kind_(kind) {
    switch (kind) {
      case AlgebraKind::Rank1:
        r_ = 1;
        n_ = 1;
        d_ = 0.0;
        name_ = "rank1";
        break;
      case AlgebraKind::SymReal:
        if (param < 1) throw std::invalid_argument("SymReal: rank must be >= 1");
        r_ = param;
        n_ = param * (param + 1) / 2;
        d_ = 1.0;
        name_ = "sym" + std::to_string(param);
        break;
      case AlgebraKind::Spin:
        if (param < 3)
          throw std::invalid_argument("Spin: dimension must be >= 3");
        r_ = 2;
        n_ = param;
        d_ = static_cast<double>(param) - 2.0;
        name_ = "spin" + std::to_string(param);
        break;
    }
    // n = r + (d/2) r (r-1) must hold exactly
    const double n_check =
        static_cast<double>(r_) + 0.5 * d_ * static_cast<double>(r_ * (r_ - 1));
    if (std::abs(n_check - static_cast<double>(n_)) > 1e-12)
      throw std::logic_error("JordanAlgebra: structure constants inconsistent");
    build_frame();
  }

  void build_frame();

  AlgebraKind kind_;
  std::size_t r_ = 0, n_ = 0;
  double d_ = 0.0;
  std::vector<Element> frame_;
  std::string name_;
};

inline const JordanAlgebra& algebra_instance(AlgebraKind kind,
                                             std::size_t param) {
  static std::map<std::pair<int, std::size_t>, std::unique_ptr<JordanAlgebra>>
      cache;
  auto key = std::make_pair(static_cast<int>(kind), param);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache
             .emplace(key, std::unique_ptr<JordanAlgebra>(
                               new JordanAlgebra(kind, param)))
             .first;
  }
  return *it->second;
}

// ---------------------------------------------------------------------------
// element arithmetic

inline void check_same_algebra(const Element& x, const Element& y,
                               const char* what) {
  if (x.algebra_ptr() != y.algebra_ptr())
    throw std::invalid_argument(std::string(what) + ": algebra mismatch");
}

inline ScalarKind join_kind(const Element& x, const Element& y) {
  return (x.is_real() && y.is_real()) ? ScalarKind::Real : ScalarKind::Complex;
}

inline Element add(const Element& x, const Element& y) {
  check_same_algebra(x, y, "add");
  std::vector<cplx> c(x.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coord(i);
  return Element(x.algebra_ptr(), std::move(c), join_kind(x, y));
}

inline Element sub(const Element& x, const Element& y) {
  check_same_algebra(x, y, "sub");
  std::vector<cplx> c(x.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y.coord(i);
  return Element(x.algebra_ptr(), std::move(c), join_kind(x, y));
}

inline Element scale(cplx s, const Element& x) {
  std::vector<cplx> c(x.coords());
  for (auto& z : c) z *= s;
  const bool real = x.is_real() && s.imag() == 0.0;
  return Element(x.algebra_ptr(), std::move(c),
                 real ? ScalarKind::Real : ScalarKind::Complex);
}

inline Element conj_element(const Element& x) {
  std::vector<cplx> c(x.coords());
  for (auto& z : c) z = std::conj(z);
  return Element(x.algebra_ptr(), std::move(c), x.scalar_kind());
}

inline Element real_part(const Element& x) {
  std::vector<cplx> c(x.coords());
  for (auto& z : c) z = z.real();
  return Element(x.algebra_ptr(), std::move(c), ScalarKind::Real);
}

inline Element imag_part(const Element& x) {
  std::vector<cplx> c(x.coords());
  for (auto& z : c) z = z.imag();
  return Element(x.algebra_ptr(), std::move(c), ScalarKind::Real);
}

// Jordan product
inline Element mul(const Element& x, const Element& y) {
  check_same_algebra(x, y, "mul");
  const JordanAlgebra& alg = x.algebra();
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      return Element(x.algebra_ptr(), {x.coord(0) * y.coord(0)},
                     join_kind(x, y));
    case AlgebraKind::SymReal: {
      const Mat a = alg.to_matrix(x), b = alg.to_matrix(y);
      Mat p = a * b, q = b * a;
      Element r = alg.from_matrix((p + q) * cplx(0.5));
      return Element(x.algebra_ptr(), r.coords(), join_kind(x, y));
    }
    case AlgebraKind::Spin: {
      const std::size_t n = alg.dim();
      cplx dot(0.0);
      for (std::size_t i = 1; i < n; ++i) dot += x.coord(i) * y.coord(i);
      std::vector<cplx> c(n, cplx(0.0));
      c[0] = x.coord(0) * y.coord(0) + dot;
      for (std::size_t i = 1; i < n; ++i)
        c[i] = x.coord(0) * y.coord(i) + y.coord(0) * x.coord(i);
      return Element(x.algebra_ptr(), std::move(c), join_kind(x, y));
    }
  }
  throw std::logic_error("mul: unreachable");
}

inline Element square(const Element& x) { return mul(x, x); }

inline cplx jordan_det(const Element& x) {
  const JordanAlgebra& alg = x.algebra();
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      return x.coord(0);
    case AlgebraKind::SymReal:
      return alg.to_matrix(x).determinant();
    case AlgebraKind::Spin: {
      cplx dot(0.0);
      for (std::size_t i = 1; i < alg.dim(); ++i)
        dot += x.coord(i) * x.coord(i);
      return x.coord(0) * x.coord(0) - dot;
    }
  }
  throw std::logic_error("jordan_det: unreachable");
}

inline cplx jordan_trace(const Element& x) {
  const JordanAlgebra& alg = x.algebra();
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      return x.coord(0);
    case AlgebraKind::SymReal: {
      cplx t(0.0);
      for (std::size_t i = 0; i < alg.rank(); ++i) t += x.coord(i);
      return t;
    }
    case AlgebraKind::Spin:
      return 2.0 * x.coord(0);
  }
  throw std::logic_error("jordan_trace: unreachable");
}

// trace form (x|y) = tr(x o y); bilinear (no conjugation)
inline cplx inner(const Element& x, const Element& y) {
  check_same_algebra(x, y, "inner");
  cplx dot(0.0);
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    dot += x.coord(i) * y.coord(i);
  if (x.algebra().kind() == AlgebraKind::Spin) dot *= 2.0;
  return dot;
}

// ---------------------------------------------------------------------------
// the operator calculus L, P, D, B

inline Element LinearMap::apply(const Element& x) const {
  auto c = matrix.apply(x.coords());
  bool real = x.is_real();
  if (real)
    for (std::size_t i = 0; i < matrix.rows() && real; ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j)
        if (matrix(i, j).imag() != 0.0) {
          real = false;
          break;
        }
  return Element(alg, std::move(c),
                 real ? ScalarKind::Real : ScalarKind::Complex);
}

inline LinearMap lmap_l(const Element& x) {
  const JordanAlgebra& alg = x.algebra();
  const std::size_t n = alg.dim();
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<cplx> ej(n, cplx(0.0));
    ej[j] = 1.0;
    Element bj(x.algebra_ptr(), std::move(ej), ScalarKind::Real);
    Element col = mul(x, bj);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coord(i);
  }
  return {x.algebra_ptr(), std::move(m)};
}

inline LinearMap quad_p(const Element& x) {
  LinearMap L = lmap_l(x);
  LinearMap L2 = lmap_l(square(x));
  return {x.algebra_ptr(), L.matrix * L.matrix * cplx(2.0) - L2.matrix};
}

inline LinearMap dmap_d(const Element& x, const Element& y) {
  check_same_algebra(x, y, "dmap_d");
  LinearMap Lx = lmap_l(x), Ly = lmap_l(y), Lxy = lmap_l(mul(x, y));
  Mat m = (Lx.matrix * Ly.matrix + Lxy.matrix - Ly.matrix * Lx.matrix) *
          cplx(2.0);
  return {x.algebra_ptr(), std::move(m)};
}

inline LinearMap bmap_b(const Element& x, const Element& y) {
  check_same_algebra(x, y, "bmap_b");
  const std::size_t n = x.algebra().dim();
  LinearMap D = dmap_d(x, y);
  LinearMap Px = quad_p(x), Py = quad_p(y);
  return {x.algebra_ptr(),
          Mat::identity(n) - D.matrix + Px.matrix * Py.matrix};
}

// generic norm h(x,y); h(x, conj(x)) > 0 cuts out the bounded domain
inline cplx generic_norm(const Element& x, const Element& y) {
  check_same_algebra(x, y, "generic_norm");
  const JordanAlgebra& alg = x.algebra();
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      return cplx(1.0) - x.coord(0) * y.coord(0);
    case AlgebraKind::SymReal: {
      const Mat a = alg.to_matrix(x), b = alg.to_matrix(y);
      return (Mat::identity(alg.rank()) - a * b).determinant();
    }
    case AlgebraKind::Spin: {
      const cplx q = 0.5 * inner(x, y);
      return cplx(1.0) - 2.0 * q + jordan_det(x) * jordan_det(y);
    }
  }
  throw std::logic_error("generic_norm: unreachable");
}

// ---------------------------------------------------------------------------
// spectral decomposition of real elements

inline SpectralData spectral(const Element& x) {
  if (!x.is_real())
    throw std::invalid_argument("spectral: element must be real-kind");
  const JordanAlgebra& alg = x.algebra();
  SpectralData out;
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      out.eigenvalues = {x.coord(0).real()};
      out.idempotents = {alg.unit()};
      break;
    case AlgebraKind::SymReal: {
      const std::size_t r = alg.rank();
      Mat m = alg.to_matrix(x);
      std::vector<double> a(r * r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a[i * r + j] = m(i, j).real();
      std::vector<double> vals, vecs;
      symmetric_eigen(std::move(a), r, vals, vecs);
      out.eigenvalues = vals;
      for (std::size_t c = 0; c < r; ++c) {
        Mat idem(r, r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            idem(i, j) = vecs[i * r + c] * vecs[j * r + c];
        out.idempotents.push_back(alg.from_matrix(idem));
      }
      break;
    }
    case AlgebraKind::Spin: {
      const std::size_t n = alg.dim();
      double s2 = 0.0;
      for (std::size_t i = 1; i < n; ++i) s2 += std::norm(x.coord(i).real());
      const double s = std::sqrt(s2);
      const double x1 = x.coord(0).real();
      out.eigenvalues = {x1 + s, x1 - s};
      std::vector<cplx> c1(n, cplx(0.0)), c2(n, cplx(0.0));
      c1[0] = 0.5;
      c2[0] = 0.5;
      if (s > 1e-150) {
        for (std::size_t i = 1; i < n; ++i) {
          c1[i] = 0.5 * x.coord(i).real() / s;
          c2[i] = -c1[i];
        }
      } else {
        c1[1] = 0.5;
        c2[1] = -0.5;
      }
      out.idempotents = {
          Element(x.algebra_ptr(), std::move(c1), ScalarKind::Real),
          Element(x.algebra_ptr(), std::move(c2), ScalarKind::Real)};
      break;
    }
  }
  // reconstruction is the contract
  Element rec = alg.zero();
  for (std::size_t j = 0; j < out.eigenvalues.size(); ++j)
    rec = add(rec, scale(out.eigenvalues[j], out.idempotents[j]));
  const double scale_ref = std::max(1.0, x.norm());
  if (sub(rec, x).norm() > 1e-10 * scale_ref)
    throw std::runtime_error("spectral: reconstruction failed beyond tolerance");
  return out;
}

enum class SpectralFn { Inv, Sqrt, Pow, Artanh, Tanh, Log };

inline Element spectral_fn(const Element& x, SpectralFn fn, double p = 0.0) {
  SpectralData sd = spectral(x);
  const JordanAlgebra& alg = x.algebra();
  Element out = alg.zero();
  for (std::size_t j = 0; j < sd.eigenvalues.size(); ++j) {
    const double lam = sd.eigenvalues[j];
    double v = 0.0;
    switch (fn) {
      case SpectralFn::Inv:
        if (std::abs(lam) < 1e-150)
          throw std::domain_error("spectral_fn: inverse of singular element");
        v = 1.0 / lam;
        break;
      case SpectralFn::Sqrt:
        if (lam <= 0.0)
          throw std::domain_error("spectral_fn: sqrt needs positive spectrum");
        v = std::sqrt(lam);
        break;
      case SpectralFn::Pow:
        if (lam <= 0.0)
          throw std::domain_error("spectral_fn: pow needs positive spectrum");
        v = std::pow(lam, p);
        break;
      case SpectralFn::Artanh:
        if (std::abs(lam) >= 1.0)
          throw std::domain_error("spectral_fn: artanh needs |eigenvalue|<1");
        v = 0.5 * std::log((1.0 + lam) / (1.0 - lam));
        break;
      case SpectralFn::Tanh:
        v = std::tanh(lam);
        break;
      case SpectralFn::Log:
        if (lam <= 0.0)
          throw std::domain_error("spectral_fn: log needs positive spectrum");
        v = std::log(lam);
        break;
    }
    out = add(out, scale(v, sd.idempotents[j]));
  }
  return out;
}

// inverse for real or complex elements (closed forms; no branch issues)
inline Element inv(const Element& x) {
  const JordanAlgebra& alg = x.algebra();
  const cplx det = jordan_det(x);
  if (std::abs(det) < 1e-150)
    throw std::domain_error("inv: singular element");
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      return Element(x.algebra_ptr(), {cplx(1.0) / x.coord(0)},
                     x.scalar_kind());
    case AlgebraKind::SymReal:
      return Element(x.algebra_ptr(),
                     alg.from_matrix(alg.to_matrix(x).inverse()).coords(),
                     x.scalar_kind());
    case AlgebraKind::Spin: {
      std::vector<cplx> c(x.coords());
      for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
      for (auto& z : c) z /= det;
      return Element(x.algebra_ptr(), std::move(c), x.scalar_kind());
    }
  }
  throw std::logic_error("inv: unreachable");
}

// ---------------------------------------------------------------------------
// complex spectral decomposition, rank <= 2 closed forms

struct ComplexSpectral {
  std::vector<cplx> eigenvalues;
  std::vector<Element> idempotents;
  bool degenerate = false;  // coincident eigenvalues, no idempotent split
};

inline ComplexSpectral complex_spectral(const Element& x) {
  const JordanAlgebra& alg = x.algebra();
  ComplexSpectral out;
  switch (alg.kind()) {
    case AlgebraKind::Rank1:
      out.eigenvalues = {x.coord(0)};
      out.idempotents = {alg.unit()};
      return out;
    case AlgebraKind::Spin: {
      const std::size_t n = alg.dim();
      cplx s2(0.0);
      for (std::size_t i = 1; i < n; ++i) s2 += x.coord(i) * x.coord(i);
      const cplx s = std::sqrt(s2);
      const double scale_ref = std::max(1.0, x.norm());
      if (std::abs(s) <= 1e-9 * scale_ref) {
        out.degenerate = true;
        out.eigenvalues = {x.coord(0), x.coord(0)};
        return out;
      }
      out.eigenvalues = {x.coord(0) + s, x.coord(0) - s};
      std::vector<cplx> c1(n, cplx(0.0)), c2(n, cplx(0.0));
      c1[0] = 0.5;
      c2[0] = 0.5;
      for (std::size_t i = 1; i < n; ++i) {
        c1[i] = 0.5 * x.coord(i) / s;
        c2[i] = -c1[i];
      }
      out.idempotents = {
          Element(x.algebra_ptr(), std::move(c1), ScalarKind::Complex),
          Element(x.algebra_ptr(), std::move(c2), ScalarKind::Complex)};
      return out;
    }
    case AlgebraKind::SymReal: {
      if (alg.rank() != 2)
        throw std::invalid_argument(
            "complex_spectral: SymReal supported for rank 2 only");
      const cplx tr = jordan_trace(x), det = jordan_det(x);
      const cplx disc = std::sqrt(tr * tr - 4.0 * det);
      const cplx t1 = 0.5 * (tr + disc), t2 = 0.5 * (tr - disc);
      const double scale_ref = std::max(1.0, x.norm());
      if (std::abs(t1 - t2) <= 1e-9 * scale_ref) {
        out.degenerate = true;
        out.eigenvalues = {0.5 * tr, 0.5 * tr};
        return out;
      }
      // c1 = (x - t2 e)/(t1 - t2) is idempotent by Cayley-Hamilton
      Element c1 = scale(cplx(1.0) / (t1 - t2), sub(x, scale(t2, alg.unit())));
      Element c2 = sub(alg.unit(), c1);
      out.eigenvalues = {t1, t2};
      out.idempotents = {std::move(c1), std::move(c2)};
      return out;
    }
  }
  throw std::logic_error("complex_spectral: unreachable");
}

// Principal-branch square root. Real cone-interior elements go through the
// real spectral path; complex elements use the closed-form decomposition and
// require every eigenvalue off (-inf, 0].
inline Element sqrt_principal(const Element& x) {
  if (x.is_real()) return spectral_fn(x, SpectralFn::Sqrt);
  ComplexSpectral cs = complex_spectral(x);
  const JordanAlgebra& alg = x.algebra();
  if (cs.degenerate) {
    // x = t e + N with N^2 = 0: sqrt(x) = sqrt(t)(e + N/(2t))
    const cplx t = cs.eigenvalues[0];
    if (std::abs(t) < 1e-150 ||
        (t.real() <= 0.0 && std::abs(t.imag()) < 1e-14 * std::abs(t)))
      throw std::domain_error("sqrt_principal: eigenvalue on the branch cut");
    const cplx rt = std::sqrt(t);
    Element nil = sub(x, scale(t, alg.unit()));
    return add(scale(rt, alg.unit()), scale(rt / (2.0 * t), nil));
  }
  Element out = alg.zero();
  for (std::size_t j = 0; j < cs.eigenvalues.size(); ++j) {
    const cplx lam = cs.eigenvalues[j];
    if (std::abs(lam) < 1e-150 ||
        (lam.real() <= 0.0 && std::abs(lam.imag()) < 1e-14 * std::abs(lam)))
      throw std::domain_error("sqrt_principal: eigenvalue on the branch cut");
    out = add(out, scale(std::sqrt(lam), cs.idempotents[j]));
  }
  const double scale_ref = std::max(1.0, x.norm());
  if (sub(square(out), x).norm() > 1e-9 * scale_ref)
    throw std::runtime_error("sqrt_principal: verification failed");
  return out;
}

// spectral norm |x|_inf: operator norm of (1/2) D(x, conj x), square-rooted
inline double spectral_norm(const Element& x) {
  LinearMap D = dmap_d(x, conj_element(x));
  auto ev = hermitian_eigenvalues(D.matrix * cplx(0.5));
  double m = 0.0;
  for (double v : ev) m = std::max(m, std::abs(v));
  return std::sqrt(m);
}

inline void JordanAlgebra::build_frame() {
  frame_.clear();
  switch (kind_) {
    case AlgebraKind::Rank1:
      frame_.push_back(unit());
      break;
    case AlgebraKind::SymReal:
      for (std::size_t i = 0; i < r_; ++i) {
        std::vector<cplx> c(n_, cplx(0.0));
        c[i] = 1.0;
        frame_.push_back(Element(this, std::move(c), ScalarKind::Real));
      }
      break;
    case AlgebraKind::Spin: {
      std::vector<cplx> c1(n_, cplx(0.0)), c2(n_, cplx(0.0));
      c1[0] = 0.5;
      c1[1] = 0.5;
      c2[0] = 0.5;
      c2[1] = -0.5;
      frame_.push_back(Element(this, std::move(c1), ScalarKind::Real));
      frame_.push_back(Element(this, std::move(c2), ScalarKind::Real));
      break;
    }
  }
  // frame axioms, checked once at construction
  Element sum = zero();
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (sub(mul(frame_[i], frame_[i]), frame_[i]).norm() > 1e-12)
      throw std::logic_error("frame: e_i o e_i != e_i");
    for (std::size_t j = i + 1; j < frame_.size(); ++j) {
      if (mul(frame_[i], frame_[j]).norm() > 1e-12)
        throw std::logic_error("frame: e_i o e_j != 0");
      if (dmap_d(frame_[i], frame_[j]).matrix.max_abs() > 1e-12)
        throw std::logic_error("frame: D(e_i,e_j) != 0");
    }
    sum = add(sum, frame_[i]);
  }
  if (sub(sum, unit()).norm() > 1e-12)
    throw std::logic_error("frame: sum of idempotents != unit");
}

// element with the given frame coefficients (generalizes diagonal matrices)
inline Element diag_element(const JordanAlgebra& alg,
                            const std::vector<cplx>& eigs) {
  if (eigs.size() != alg.rank())
    throw std::invalid_argument("diag_element: need one value per rank");
  Element out = alg.zero();
  for (std::size_t j = 0; j < eigs.size(); ++j)
    out = add(out, scale(eigs[j], alg.frame()[j]));
  return out;
}

inline Element diag_element(const JordanAlgebra& alg,
                            const std::vector<double>& eigs) {
  std::vector<cplx> c(eigs.begin(), eigs.end());
  return diag_element(alg, c);
}

// ---------------------------------------------------------------------------
// the explicit Jordan isomorphism Sym(2,R) <-> Spin(3)

inline Element sym2_to_spin3(const Element& x) {
  if (x.algebra().kind() != AlgebraKind::SymReal || x.algebra().rank() != 2)
    throw std::invalid_argument("sym2_to_spin3: expects Sym(2,R) element");
  const JordanAlgebra& spin3 = JordanAlgebra::spin(3);
  const cplx d1 = x.coord(0), d2 = x.coord(1), c = x.coord(2);
  return spin3.element(std::vector<cplx>{0.5 * (d1 + d2), 0.5 * (d1 - d2),
                                         c / std::sqrt(2.0)});
}

inline Element spin3_to_sym2(const Element& x) {
  if (x.algebra().kind() != AlgebraKind::Spin || x.algebra().dim() != 3)
    throw std::invalid_argument("spin3_to_sym2: expects Spin(3) element");
  const JordanAlgebra& sym2 = JordanAlgebra::sym_real(2);
  const cplx x1 = x.coord(0), b1 = x.coord(1), b2 = x.coord(2);
  return sym2.element(
      std::vector<cplx>{x1 + b1, x1 - b1, b2 * std::sqrt(2.0)});
}

}  // namespace symcone
