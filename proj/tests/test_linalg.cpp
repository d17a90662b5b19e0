#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "symcone/linalg.hpp"
#include "symcone/quadrature.hpp"

using namespace symcone;

TEST_CASE("LU determinant, solve and inverse") {
  Mat a(3, 3);
  a(0, 0) = 2.0;
  a(0, 1) = cplx(1.0, 1.0);
  a(0, 2) = 0.0;
  a(1, 0) = cplx(1.0, -1.0);
  a(1, 1) = 3.0;
  a(1, 2) = 0.5;
  a(2, 0) = 0.0;
  a(2, 1) = 0.5;
  a(2, 2) = 1.0;

  Mat ainv = a.inverse();
  Mat prod = a * ainv;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(std::abs(prod(i, j) - (i == j ? cplx(1.0) : cplx(0.0))) < 1e-13);

  CHECK(std::abs(a.determinant() * ainv.determinant() - cplx(1.0)) < 1e-12);

  std::vector<cplx> b = {1.0, cplx(0.0, 2.0), -1.0};
  auto x = a.solve(b);
  auto back = a.apply(x);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(back[i] - b[i]) < 1e-12);
}

TEST_CASE("hermitian eigenvalues against characteristic roots") {
  Mat h(2, 2);
  h(0, 0) = 2.0;
  h(1, 1) = -1.0;
  h(0, 1) = cplx(0.5, 1.5);
  h(1, 0) = std::conj(h(0, 1));
  auto ev = hermitian_eigenvalues(h);
  // roots of t^2 - tr t + det
  const double tr = 1.0;
  const double det = (2.0 * -1.0) - std::norm(cplx(0.5, 1.5));
  const double disc = std::sqrt(tr * tr - 4.0 * det);
  CHECK(ev[0] == doctest::Approx(0.5 * (tr - disc)).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.5 * (tr + disc)).epsilon(1e-12));
}

TEST_CASE("real symmetric eigen reconstruction") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3;
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
    std::vector<double> vals, vecs;
    symmetric_eigen(a, n, vals, vecs);
    CHECK(vals[0] >= vals[1]);
    CHECK(vals[1] >= vals[2]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double rec = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          rec += vecs[i * n + k] * vals[k] * vecs[j * n + k];
        CHECK(rec == doctest::Approx(a[i * n + j]).epsilon(1e-11));
      }
  }
}

TEST_CASE("Gauss-Legendre small cases") {
  GaussRule g2 = gauss_legendre(2);
  CHECK(g2.x[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g2.x[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g2.w[0] == doctest::Approx(1.0).epsilon(1e-14));

  GaussRule g3 = gauss_legendre(3);
  CHECK(g3.x[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(g3.w[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-13));
  CHECK(g3.w[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("Gauss-Laguerre n=2 classical nodes") {
  GaussRule g = gauss_laguerre(2, 0.0);
  CHECK(g.x[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(g.x[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
  const double w0 = (2.0 + std::sqrt(2.0)) / 4.0;
  CHECK(g.w[0] == doctest::Approx(w0).epsilon(1e-13));
  CHECK(g.w[1] == doctest::Approx(1.0 - w0).epsilon(1e-13));
}

TEST_CASE("Gauss-Jacobi total mass and a beta moment") {
  GaussRule g = gauss_jacobi(12, 1.0, 1.0);
  double mass = 0.0;
  for (double w : g.w) mass += w;
  CHECK(mass == doctest::Approx(4.0 / 3.0).epsilon(1e-13));

  // int_{-1}^1 x^2 (1-x)(1+x) dx = 4/15
  double m2 = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) m2 += g.w[i] * g.x[i] * g.x[i];
  CHECK(m2 == doctest::Approx(4.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("generalized Laguerre integrates gamma exactly") {
  GaussRule g = gauss_laguerre(8, 1.5);
  double mass = 0.0;
  for (double w : g.w) mass += w;
  CHECK(mass == doctest::Approx(std::tgamma(2.5)).epsilon(1e-13));
}

TEST_CASE("pairwise sum is deterministic and accurate") {
  std::vector<cplx> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = cplx(1.0 / (1.0 + static_cast<double>(i)), 0.0);
  const cplx s1 = pairwise_sum(v);
  const cplx s2 = pairwise_sum(v);
  CHECK(s1 == s2);
  double ref = 0.0;
  for (std::size_t i = v.size(); i-- > 0;) ref += 1.0 / (1.0 + static_cast<double>(i));
  CHECK(s1.real() == doctest::Approx(ref).epsilon(1e-14));
}
