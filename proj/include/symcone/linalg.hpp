#pragma once

// Small dense complex linear algebra: enough for operators on Jordan algebras
// of dimension <= 8 and for Golub-Welsch quadrature construction. No external
// dependencies on purpose; everything here is O(n^3) with tiny n.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace symcone {

using cplx = std::complex<double>;

inline cplx cpow(cplx base, cplx expo) {
  if (base == cplx(0.0, 0.0)) {
    if (expo == cplx(0.0, 0.0)) return cplx(1.0, 0.0);
    return cplx(0.0, 0.0);
  }
  return std::exp(expo * std::log(base));
}

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : n_(rows), m_(cols), a_(rows * cols, cplx(0.0)) {}

  static Mat identity(std::size_t n) {
    Mat I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
  }

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * m_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return a_[i * m_ + j];
  }

  Mat operator+(const Mat& o) const {
    Mat r(n_, m_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r(n_, m_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Mat operator*(const Mat& o) const {
    Mat r(n_, o.m_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < m_; ++k) {
        const cplx aik = (*this)(i, k);
        if (aik == cplx(0.0)) continue;
        for (std::size_t j = 0; j < o.m_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }
  Mat operator*(cplx s) const {
    Mat r(n_, m_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
  }

  std::vector<cplx> apply(const std::vector<cplx>& v) const {
    std::vector<cplx> r(n_, cplx(0.0));
    for (std::size_t i = 0; i < n_; ++i) {
      cplx acc(0.0);
      for (std::size_t j = 0; j < m_; ++j) acc += (*this)(i, j) * v[j];
      r[i] = acc;
    }
    return r;
  }

  Mat transpose() const {
    Mat r(m_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < m_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Mat adjoint() const {
    Mat r(m_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < m_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  // LU with partial pivoting; returns factors in place plus pivot sign.
  // Throws on (numerically) singular input for solve/inverse.
  cplx determinant() const {
    Mat lu(*this);
    double sign = 1.0;
    const std::size_t n = n_;
    cplx det(1.0);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
        sign = -sign;
      }
      const cplx piv = lu(k, k);
      det *= piv;
      if (piv == cplx(0.0)) return cplx(0.0);
      for (std::size_t i = k + 1; i < n; ++i) {
        const cplx f = lu(i, k) / piv;
        lu(i, k) = f;
        for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      }
    }
    return det * sign;
  }

  std::vector<cplx> solve(std::vector<cplx> b) const {
    Mat lu(*this);
    const std::size_t n = n_;
    std::vector<std::size_t> piv(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
      piv[k] = p;
      if (p != k)
        for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      if (std::abs(lu(k, k)) < 1e-300)
        throw std::runtime_error("Mat::solve: singular matrix");
      for (std::size_t i = k + 1; i < n; ++i) {
        lu(i, k) /= lu(k, k);
        for (std::size_t j = k + 1; j < n; ++j)
          lu(i, j) -= lu(i, k) * lu(k, j);
      }
    }
    for (std::size_t k = 0; k < n; ++k) std::swap(b[k], b[piv[k]]);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) b[i] -= lu(i, j) * b[j];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) b[i] -= lu(i, j) * b[j];
      b[i] /= lu(i, i);
    }
    return b;
  }

  Mat inverse() const {
    const std::size_t n = n_;
    Mat inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<cplx> e(n, cplx(0.0));
      e[c] = 1.0;
      auto col = solve(std::move(e));
      for (std::size_t i = 0; i < n; ++i) inv(i, c) = col[i];
    }
    return inv;
  }

 private:
  std::size_t n_ = 0, m_ = 0;
  std::vector<cplx> a_;
};

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
// The input is symmetrized first, so inputs Hermitian up to roundoff are fine.
inline std::vector<double> hermitian_eigenvalues(Mat a) {
  const std::size_t n = a.rows();
  Mat h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  const double base = std::max(h.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(h(p, q));
    if (off < 1e-15 * base * static_cast<double>(n * n)) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = h(p, q);
        if (std::abs(apq) < 1e-18 * base) continue;
        const double app = h(p, p).real(), aqq = h(q, q).real();
        const cplx phase = apq / std::abs(apq);
        const double tau = (aqq - app) / (2.0 * std::abs(apq));
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx hkp = h(k, p), hkq = h(k, q);
          h(k, p) = c * hkp - std::conj(s) * hkq;
          h(k, q) = s * hkp + c * hkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx hpk = h(p, k), hqk = h(q, k);
          h(p, k) = c * hpk - s * hqk;
          h(q, k) = std::conj(s) * hpk + c * hqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Real symmetric eigen decomposition (Jacobi with accumulated rotations).
// Eigenvalues descending, eigenvectors as columns of `vecs` (row-major n*n).
inline void symmetric_eigen(std::vector<double> a, std::size_t n,
                            std::vector<double>& vals,
                            std::vector<double>& vecs) {
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };

  double base = 0.0;
  for (double x : a) base = std::max(base, std::abs(x));
  base = std::max(base, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(A(p, q));
    if (off < 1e-15 * base * static_cast<double>(n * n)) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(A(p, q)) < 1e-18 * base) continue;
        const double tau = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return A(i, i) > A(j, j); });
  vals.resize(n);
  vecs.assign(n * n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    vals[c] = A(order[c], order[c]);
    for (std::size_t i = 0; i < n; ++i) vecs[i * n + c] = V(i, order[c]);
  }
}

// Fixed-shape pairwise summation: the reduction tree depends only on the
// length, so a result is reproducible bit-for-bit for a given input vector.
inline cplx pairwise_sum(const std::vector<cplx>& v, std::size_t lo,
                         std::size_t hi) {
  const std::size_t len = hi - lo;
  if (len == 0) return cplx(0.0);
  if (len <= 8) {
    cplx acc(0.0);
    for (std::size_t i = lo; i < hi; ++i) acc += v[i];
    return acc;
  }
  const std::size_t mid = lo + len / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline cplx pairwise_sum(const std::vector<cplx>& v) {
  return pairwise_sum(v, 0, v.size());
}

struct GaussRule {
  std::vector<double> x, w;
};

// Golub-Welsch: nodes are eigenvalues of the Jacobi tridiagonal matrix,
// weights mu0 * (first eigenvector component)^2. The QL iteration below is
// the standard implicit-shift algorithm tracking only the first row of the
// accumulated rotation product.
inline GaussRule golub_welsch(std::vector<double> d, std::vector<double> e,
                              double mu0) {
  const std::size_t n = d.size();
  std::vector<double> z(n, 0.0);
  if (n == 0) return {};
  z[0] = 1.0;
  e.resize(n, 0.0);  // e[i] couples i and i+1; e[n-1] unused

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m == l) break;
      if (++iter > 60)
        throw std::runtime_error("golub_welsch: QL failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
      double s = 1.0, c = 1.0, p = 0.0;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i], b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        const double zi = z[i], zi1 = z[i + 1];
        z[i + 1] = s * zi + c * zi1;
        z[i] = c * zi - s * zi1;
      }
      if (r == 0.0 && m > l + 1) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rule.x[i] = d[order[i]];
    rule.w[i] = mu0 * z[order[i]] * z[order[i]];
  }
  return rule;
}

}  // namespace symcone
