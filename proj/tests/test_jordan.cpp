#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "symcone/jordan.hpp"
#include "symcone/sampling.hpp"

using namespace symcone;

namespace {

const JordanAlgebra& rank1 = JordanAlgebra::rank1();
const JordanAlgebra& sym2 = JordanAlgebra::sym_real(2);
const JordanAlgebra& sym3 = JordanAlgebra::sym_real(3);
const JordanAlgebra& spin3 = JordanAlgebra::spin(3);
const JordanAlgebra& spin4 = JordanAlgebra::spin(4);

std::vector<const JordanAlgebra*> all_algebras() {
  return {&rank1, &sym2, &spin3, &spin4};
}

Element sym_from_entries(const JordanAlgebra& alg, double a, double b,
                         double c) {
  // [[a, b], [b, c]] in trace-orthonormal coordinates
  return alg.element(std::vector<double>{a, c, std::sqrt(2.0) * b});
}

}  // namespace

TEST_CASE("structure constants satisfy n = r + (d/2) r (r-1)") {
  for (const auto* alg : all_algebras()) {
    const double n = static_cast<double>(alg->dim());
    const double r = static_cast<double>(alg->rank());
    CHECK(n == doctest::Approx(r + 0.5 * alg->peirce_d() * r * (r - 1.0)));
    CHECK(alg->frame().size() == alg->rank());
  }
  CHECK(rank1.peirce_d() == 0.0);
  CHECK(sym2.peirce_d() == 1.0);
  CHECK(spin3.peirce_d() == 1.0);
  CHECK(spin4.peirce_d() == 2.0);
}

TEST_CASE("multiplication: scalars, unit, matrix oracle") {
  // rank 1: plain product
  Element two = rank1.element(std::vector<double>{2.0});
  Element three = rank1.element(std::vector<double>{3.0});
  CHECK(mul(two, three).coord(0).real() == doctest::Approx(6.0));

  std::mt19937_64 rng(11);
  for (const auto* alg : all_algebras()) {
    for (int t = 0; t < 10; ++t) {
      Element x = random_real_element(*alg, rng);
      Element y = random_real_element(*alg, rng);
      CHECK(sub(mul(x, alg->unit()), x).norm() < 1e-14);
      CHECK(sub(mul(x, y), mul(y, x)).norm() < 1e-14);  // commutative
    }
  }

  // Sym(2,R): x o y = (XY + YX)/2 entrywise
  for (int t = 0; t < 20; ++t) {
    Element x = random_real_element(sym2, rng);
    Element y = random_real_element(sym2, rng);
    Mat mx = sym2.to_matrix(x), my = sym2.to_matrix(y);
    Mat oracle = (mx * my + my * mx) * cplx(0.5);
    CHECK(sub(mul(x, y), sym2.from_matrix(oracle)).norm() < 1e-13);
  }
  // same oracle at rank 3
  for (int t = 0; t < 5; ++t) {
    Element x = random_real_element(sym3, rng);
    Element y = random_real_element(sym3, rng);
    Mat oracle = (sym3.to_matrix(x) * sym3.to_matrix(y) +
                  sym3.to_matrix(y) * sym3.to_matrix(x)) *
                 cplx(0.5);
    CHECK(sub(mul(x, y), sym3.from_matrix(oracle)).norm() < 1e-13);
  }
}

TEST_CASE("determinant, trace, trace form") {
  Element m = sym_from_entries(sym2, 2.0, 1.0, 2.0);
  CHECK(jordan_det(m).real() == doctest::Approx(3.0));
  CHECK(jordan_trace(m).real() == doctest::Approx(4.0));

  Element s = spin3.element(std::vector<double>{2.0, 1.0, 0.0});
  CHECK(jordan_det(s).real() == doctest::Approx(3.0));
  CHECK(jordan_trace(s).real() == doctest::Approx(4.0));

  for (const auto* alg : all_algebras()) {
    CHECK(jordan_det(alg->unit()).real() == doctest::Approx(1.0));
    CHECK(jordan_trace(alg->unit()).real() ==
          doctest::Approx(static_cast<double>(alg->rank())));
    CHECK(inner(alg->unit(), alg->unit()).real() ==
          doctest::Approx(static_cast<double>(alg->rank())));
  }

  // inner is tr(x o y)
  std::mt19937_64 rng(13);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 10; ++t) {
      Element x = random_real_element(*alg, rng);
      Element y = random_real_element(*alg, rng);
      CHECK(std::abs(inner(x, y) - jordan_trace(mul(x, y))) < 1e-13);
    }
}

TEST_CASE("quadratic representation and friends") {
  Element three = rank1.element(std::vector<double>{3.0});
  Element two = rank1.element(std::vector<double>{2.0});
  CHECK(quad_p(three).apply(two).coord(0).real() == doctest::Approx(18.0));

  std::mt19937_64 rng(17);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 10; ++t) {
      Element x = random_real_element(*alg, rng);
      // P(x)e = x o x
      CHECK(sub(quad_p(x).apply(alg->unit()), square(x)).norm() < 1e-12);
    }

  // Sym(2,R): P(x)z = x z x as matrices
  for (int t = 0; t < 25; ++t) {
    Element x = random_real_element(sym2, rng);
    Element z = random_real_element(sym2, rng);
    Mat oracle = sym2.to_matrix(x) * sym2.to_matrix(z) * sym2.to_matrix(x);
    CHECK(sub(quad_p(x).apply(z), sym2.from_matrix(oracle)).norm() < 1e-12);
  }

  // B(x, 0) = I
  for (const auto* alg : all_algebras()) {
    std::mt19937_64 r2(3);
    Element x = random_real_element(*alg, r2);
    LinearMap B = bmap_b(x, alg->zero());
    CHECK((B.matrix - Mat::identity(alg->dim())).max_abs() < 1e-14);
  }

  // linear maps: composition matches iterated application, apply is linear
  {
    std::mt19937_64 r3(5);
    Element x = random_real_element(sym2, r3);
    Element y = random_real_element(sym2, r3);
    Element z = random_real_element(sym2, r3);
    LinearMap Px = quad_p(x), Ly = lmap_l(y);
    Element via_compose = Px.compose(Ly).apply(z);
    Element via_apply = Px.apply(Ly.apply(z));
    CHECK(sub(via_compose, via_apply).norm() < 1e-13);
    Element lin_lhs = Px.apply(add(scale(cplx(2.0, 1.0), z), y));
    Element lin_rhs = add(scale(cplx(2.0, 1.0), Px.apply(z)), Px.apply(y));
    CHECK(sub(lin_lhs, lin_rhs).norm() < 1e-13);
  }
}

TEST_CASE("generic norm closed forms and h(x,0) = 1") {
  Element half = rank1.element(std::vector<double>{0.5});
  CHECK(generic_norm(half, half).real() == doctest::Approx(0.75));

  std::mt19937_64 rng(19);
  for (const auto* alg : all_algebras()) {
    Element x = random_in_disk_real(*alg, rng);
    CHECK(std::abs(generic_norm(x, alg->zero()) - cplx(1.0)) < 1e-14);
  }
}

TEST_CASE("spectral decomposition") {
  Element s = spin3.element(std::vector<double>{2.0, 1.0, 0.0});
  SpectralData sd = spectral(s);
  CHECK(sd.eigenvalues[0] == doctest::Approx(3.0));
  CHECK(sd.eigenvalues[1] == doctest::Approx(1.0));

  for (const auto* alg : all_algebras()) {
    SpectralData se = spectral(alg->unit());
    for (double lam : se.eigenvalues) CHECK(lam == doctest::Approx(1.0));
  }

  // Sym(2,R): eigenvalues match characteristic-polynomial roots
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    Element x = random_real_element(sym2, rng);
    const double tr = jordan_trace(x).real(), det = jordan_det(x).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    SpectralData sx = spectral(x);
    CHECK(sx.eigenvalues[0] ==
          doctest::Approx(0.5 * (tr + disc)).epsilon(1e-10));
    CHECK(sx.eigenvalues[1] ==
          doctest::Approx(0.5 * (tr - disc)).epsilon(1e-10));
    // idempotents form a Jordan frame
    CHECK(sub(mul(sx.idempotents[0], sx.idempotents[0]), sx.idempotents[0])
              .norm() < 1e-10);
    CHECK(mul(sx.idempotents[0], sx.idempotents[1]).norm() < 1e-10);
  }
}

TEST_CASE("spectral functions") {
  for (const auto* alg : all_algebras())
    CHECK(sub(spectral_fn(alg->unit(), SpectralFn::Inv), alg->unit()).norm() <
          1e-13);

  Element four = rank1.element(std::vector<double>{4.0});
  CHECK(spectral_fn(four, SpectralFn::Sqrt).coord(0).real() ==
        doctest::Approx(2.0));

  std::mt19937_64 rng(29);
  for (int t = 0; t < 25; ++t) {
    Element x = random_in_cone(sym2, rng);
    Element xi = spectral_fn(x, SpectralFn::Inv);
    Mat oracle = sym2.to_matrix(x).inverse();
    CHECK(sub(xi, sym2.from_matrix(oracle)).norm() < 1e-10);
    // P(x) x^{-1} = x
    CHECK(sub(quad_p(x).apply(xi), x).norm() < 1e-10);
    CHECK(sub(mul(x, xi), sym2.unit()).norm() < 1e-10);
    // tanh(artanh(y)) = y inside the disk
    Element y = random_in_disk_real(sym2, rng);
    CHECK(sub(spectral_fn(spectral_fn(y, SpectralFn::Artanh), SpectralFn::Tanh),
              y)
              .norm() < 1e-10);
  }

  CHECK_THROWS_AS(spectral_fn(rank1.element(std::vector<double>{-1.0}),
                              SpectralFn::Sqrt),
                  std::domain_error);
  CHECK_THROWS_AS(spectral_fn(rank1.element(std::vector<double>{1.5}),
                              SpectralFn::Artanh),
                  std::domain_error);
}

TEST_CASE("spectral norm") {
  for (const auto* alg : all_algebras())
    CHECK(spectral_norm(alg->unit()) == doctest::Approx(1.0).epsilon(1e-10));

  Element z = rank1.element(std::vector<cplx>{cplx(0.3, 0.4)});
  CHECK(spectral_norm(z) == doctest::Approx(0.5).epsilon(1e-10));

  // largest singular value oracle for complex symmetric 2x2
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    Element x = random_complex_element(sym2, rng);
    Mat m = sym2.to_matrix(x);
    // singular values^2 = eigenvalues of m^H m (2x2 hermitian, closed form)
    Mat h = m.adjoint() * m;
    const double tr = (h(0, 0) + h(1, 1)).real();
    const double det = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double smax = std::sqrt(0.5 * (tr + disc));
    CHECK(spectral_norm(x) == doctest::Approx(smax).epsilon(1e-9));
  }

  // real elements: spectral norm is the largest |eigenvalue|
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 10; ++t) {
      Element x = random_real_element(*alg, rng);
      SpectralData sd = spectral(x);
      double m = 0.0;
      for (double lam : sd.eigenvalues) m = std::max(m, std::abs(lam));
      CHECK(spectral_norm(x) == doctest::Approx(m).epsilon(1e-9));
    }
}

TEST_CASE("power associativity via spectral cube") {
  std::mt19937_64 rng(37);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 20; ++t) {
      Element x = random_in_cone(*alg, rng);
      Element cube = mul(x, mul(x, x));
      Element viafn = spectral_fn(x, SpectralFn::Pow, 3.0);
      CHECK(sub(cube, viafn).norm() <
            1e-10 * std::max(1.0, cube.norm()));
    }
}

TEST_CASE("Det P(x) = det(x)^{2n/r} on 100 random invertible elements") {
  std::mt19937_64 rng(41);
  for (const auto* alg : all_algebras()) {
    const int expo = static_cast<int>(2 * alg->dim() / alg->rank());
    for (int t = 0; t < 100; ++t) {
      Element x = random_invertible_real(*alg, rng);
      cplx lhs = quad_p(x).determinant();
      cplx rhs(1.0);
      const cplx det = jordan_det(x);
      for (int e = 0; e < expo; ++e) rhs *= det;
      CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(rhs));
    }
  }
}

TEST_CASE("Det B(x,y) = h(x,y)^{2n/r} on the bounded domain") {
  std::mt19937_64 rng(43);
  for (const auto* alg : all_algebras()) {
    const int expo = static_cast<int>(2 * alg->dim() / alg->rank());
    for (int t = 0; t < 100; ++t) {
      Element x = random_in_disk_complex(*alg, rng, 0.7);
      Element y = random_in_disk_complex(*alg, rng, 0.7);
      cplx lhs = bmap_b(x, y).determinant();
      cplx rhs(1.0);
      const cplx h = generic_norm(x, y);
      for (int e = 0; e < expo; ++e) rhs *= h;
      CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("P(x^{-1}) = P(x)^{-1}") {
  std::mt19937_64 rng(47);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 30; ++t) {
      Element x = random_in_cone(*alg, rng);
      Mat lhs = quad_p(spectral_fn(x, SpectralFn::Inv)).matrix;
      Mat rhs = quad_p(x).matrix.inverse();
      CHECK((lhs - rhs).max_abs() < 1e-9 * std::max(1.0, rhs.max_abs()));
    }
}

TEST_CASE("trace form from D: (x|y) = (r/2n) Tr D(x,y)") {
  std::mt19937_64 rng(53);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 20; ++t) {
      Element x = random_real_element(*alg, rng);
      Element y = random_real_element(*alg, rng);
      LinearMap D = dmap_d(x, y);
      cplx trace(0.0);
      for (std::size_t i = 0; i < alg->dim(); ++i) trace += D.matrix(i, i);
      const cplx rhs = trace * static_cast<double>(alg->rank()) /
                       (2.0 * static_cast<double>(alg->dim()));
      CHECK(std::abs(inner(x, y) - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("Sym(2,R) <-> Spin(3) isomorphism preserves everything") {
  std::mt19937_64 rng(59);
  CHECK(sub(sym2_to_spin3(sym2.unit()), spin3.unit()).norm() < 1e-15);
  for (int t = 0; t < 50; ++t) {
    Element x = random_real_element(sym2, rng);
    Element y = random_real_element(sym2, rng);
    Element xs = sym2_to_spin3(x), ys = sym2_to_spin3(y);
    CHECK(sub(sym2_to_spin3(mul(x, y)), mul(xs, ys)).norm() < 1e-10);
    CHECK(std::abs(jordan_det(x) - jordan_det(xs)) < 1e-10);
    CHECK(std::abs(jordan_trace(x) - jordan_trace(xs)) < 1e-12);
    CHECK(std::abs(inner(x, y) - inner(xs, ys)) < 1e-12);
    SpectralData a = spectral(x), b = spectral(xs);
    CHECK(a.eigenvalues[0] == doctest::Approx(b.eigenvalues[0]).epsilon(1e-10));
    CHECK(a.eigenvalues[1] == doctest::Approx(b.eigenvalues[1]).epsilon(1e-10));
    // round trip
    CHECK(sub(spin3_to_sym2(xs), x).norm() < 1e-13);
  }
}

TEST_CASE("mixed scalar kinds and errors") {
  Element x = sym2.unit();
  Element y = spin3.unit();
  CHECK_THROWS_AS(mul(x, y), std::invalid_argument);
  CHECK_THROWS_AS(sym2.element(std::vector<double>{1.0}), std::invalid_argument);

  Element zc = sym2.element(std::vector<cplx>{cplx(0, 1), 0.0, 0.0});
  CHECK(zc.scalar_kind() == ScalarKind::Complex);
  CHECK_THROWS_AS(spectral(zc), std::invalid_argument);
  CHECK(mul(x, x).scalar_kind() == ScalarKind::Real);
}
