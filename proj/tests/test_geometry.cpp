#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "symcone/geometry.hpp"
#include "symcone/quadrature.hpp"
#include "symcone/sampling.hpp"

using namespace symcone;

namespace {

const JordanAlgebra& rank1 = JordanAlgebra::rank1();
const JordanAlgebra& sym2 = JordanAlgebra::sym_real(2);
const JordanAlgebra& spin3 = JordanAlgebra::spin(3);
const JordanAlgebra& spin4 = JordanAlgebra::spin(4);

std::vector<const JordanAlgebra*> all_algebras() {
  return {&rank1, &sym2, &spin3, &spin4};
}

}  // namespace

TEST_CASE("domain membership") {
  for (const auto* alg : all_algebras()) {
    CHECK(in_cone(alg->unit()));
    CHECK_FALSE(in_disk(alg->unit()));  // |e|_inf = 1, boundary
    CHECK(in_disk(scale(0.5, alg->unit())));
    CHECK(in_tube(scale(cplx(0.0, 1.0), alg->unit())));
    CHECK_FALSE(in_cone(scale(-1.0, alg->unit())));
  }
}

TEST_CASE("quasi-inverse") {
  for (const auto* alg : all_algebras()) {
    std::mt19937_64 rng(5);
    Element x = random_real_element(*alg, rng);
    CHECK(sub(quasi_inverse(x, alg->zero()), x).norm() < 1e-13);
  }

  Element two = rank1.element(std::vector<double>{2.0});
  Element quarter = rank1.element(std::vector<double>{0.25});
  CHECK(quasi_inverse(two, quarter).coord(0).real() == doctest::Approx(4.0));

  // two formulas agree: B(x,v)^{-1}(x - P(x)v) vs (x^{-1} - v)^{-1}
  std::mt19937_64 rng(7);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 100; ++t) {
      Element x = random_in_cone(*alg, rng);
      Element v = scale(0.2, random_real_element(*alg, rng));
      Element lhs = quasi_inverse(x, v);
      Element rhs = spectral_fn(sub(spectral_fn(x, SpectralFn::Inv), v),
                                SpectralFn::Inv);
      CHECK(sub(lhs, rhs).norm() < 1e-10 * std::max(1.0, rhs.norm()));
    }
}

TEST_CASE("generator actions and cocycle scalars") {
  for (const auto* alg : all_algebras()) {
    const cplx i(0.0, 1.0);
    Element zero = alg->zero();
    Element ie = scale(i, alg->unit());
    CHECK(sub(act(GroupGenerator::cayley(), zero), ie).norm() < 1e-14);
    CHECK(act(GroupGenerator::inverse_cayley(), ie).norm() < 1e-14);

    Element me = act(GroupGenerator::invert(), alg->unit());
    CHECK(sub(me, scale(-1.0, alg->unit())).norm() < 1e-14);
    CHECK(std::abs(cocycle_chi(GroupGenerator::invert(), alg->unit()) -
                   cplx(1.0)) < 1e-14);

    std::mt19937_64 rng(3);
    Element a = random_in_cone(*alg, rng);
    Element x = random_real_element(*alg, rng);
    CHECK(sub(act(GroupGenerator::translate(a), x), add(x, a)).norm() < 1e-14);
    CHECK(std::abs(cocycle_chi(GroupGenerator::translate(a), x) - cplx(1.0)) <
          1e-14);
    CHECK(sub(act(GroupGenerator::dilate(a), x), quad_p(a).apply(x)).norm() <
          1e-14);
    CHECK(std::abs(cocycle_chi(GroupGenerator::dilate(a), x) - jordan_det(a)) <
          1e-13);
  }
  CHECK_THROWS_AS(GroupGenerator::dilate(scale(-1.0, sym2.unit())),
                  std::invalid_argument);
}

TEST_CASE("Cayley round-trip on 200 random disk points") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const JordanAlgebra& alg = *all_algebras()[t % 4];
    Element x = random_in_disk_complex(alg, rng, 0.85);
    Element back = act(GroupGenerator::inverse_cayley(),
                       act(GroupGenerator::cayley(), x));
    CHECK(sub(back, x).norm() < 1e-10 * std::max(1.0, x.norm()));
  }
}

TEST_CASE("contour chart basics") {
  // (x, y) = (e, 0): the chart is the identity on the reference domain
  for (const auto* alg : all_algebras()) {
    ContourChart c = contour_chart(alg->unit(), alg->zero());
    REQUIRE(c.valid);
    CHECK((c.sqrt_map.matrix - Mat::identity(alg->dim())).max_abs() < 1e-12);
  }

  // rank 1, x = 0.8, y = 0.2: z -> 0.2 + 0.6 z
  ContourChart c1 = contour_chart(rank1.element(std::vector<double>{0.8}),
                                  rank1.element(std::vector<double>{0.2}));
  REQUIRE(c1.valid);
  Element mid = c1.map(rank1.element(std::vector<double>{0.5}));
  CHECK(mid.coord(0).real() == doctest::Approx(0.5));
  Element lo = c1.map(rank1.element(std::vector<double>{0.01}));
  CHECK(lo.coord(0).real() == doctest::Approx(0.2 + 0.6 * 0.01));

  // sqrt_map o sqrt_map = P(u)
  std::mt19937_64 rng(13);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 20; ++t) {
      Element y = random_real_element(*alg, rng, 0.3);
      Element u = random_in_cone(*alg, rng);
      ContourChart c = contour_chart(add(y, u), y);
      REQUIRE(c.valid);
      Mat lhs = c.sqrt_map.matrix * c.sqrt_map.matrix;
      Mat rhs = quad_p(u).matrix;
      CHECK((lhs - rhs).max_abs() < 1e-10 * std::max(1.0, rhs.max_abs()));
    }

  // inadmissible: u with an eigenvalue on (-inf, 0]
  ContourChart bad = contour_chart(sym2.zero(), sym2.unit());
  CHECK_FALSE(bad.valid);
}

TEST_CASE("chart membership sampling and det relative-invariance") {
  std::mt19937_64 rng(17);
  QuadratureRule ref = reference_rule(sym2, Scheme::CartesianIndicator, 4);
  int configs = 0;
  while (configs < 10) {
    Element y = random_in_disk_real(sym2, rng, 0.35);
    Element u = random_in_cone(sym2, rng);
    u = scale(0.3 / std::max(spectral_norm(u), 1e-9), u);
    Element x = add(y, u);
    if (!in_disk(x) || !in_disk(y)) continue;
    ++configs;
    ContourChart c = contour_chart(x, y);
    REQUIRE(c.valid);
    const cplx det_u = jordan_det(u);
    int checked = 0;
    for (const auto& z : ref.nodes) {
      if (++checked > 50) break;
      Element w = c.map(z);
      CHECK(in_disk(w, 1e-12));
      // det(P(u^{1/2}) z) = det(u) det(z)
      Element uz = c.sqrt_map.apply(z);
      CHECK(std::abs(jordan_det(uz) - det_u * jordan_det(z)) <
            1e-11 * std::max(1.0, std::abs(det_u)));
    }
  }

  // tube pairs: chart images stay in the tube
  for (int t = 0; t < 10; ++t) {
    Element y = random_in_tube(sym2, rng);
    Element u = random_in_cone(sym2, rng);
    Element x = add(y, u);
    ContourChart c = contour_chart(x, y);
    REQUIRE(c.valid);
    int checked = 0;
    for (const auto& z : ref.nodes) {
      if (++checked > 20) break;
      CHECK(in_tube(c.map(z), 1e-12));
    }
  }
}

TEST_CASE("chart symmetry under z -> e - z for complex pairs") {
  // Needs every eigenvalue of u in the open upper half-plane, so that
  // (-u)^{1/2} = -i u^{1/2} holds branch-uniformly.
  std::mt19937_64 rng(19);
  QuadratureRule ref = reference_rule(sym2, Scheme::CartesianIndicator, 3);
  for (int t = 0; t < 10; ++t) {
    Element re = scale(0.2, random_in_cone(sym2, rng));
    Element im = random_in_cone(sym2, rng);
    Element u = add(re, scale(cplx(0.0, 1.0), im));  // eigenvalues in UHP
    Element y = scale(0.1, random_real_element(sym2, rng));
    Element x = add(y, u);
    ContourChart cxy = contour_chart(x, y);
    ContourChart cyx = contour_chart(y, x);
    REQUIRE(cxy.valid);
    REQUIRE(cyx.valid);
    int checked = 0;
    for (const auto& z : ref.nodes) {
      if (++checked > 20) break;
      Element lhs = cyx.map(z);
      Element rhs = cxy.map(sub(sym2.unit(), z));
      CHECK(sub(lhs, rhs).norm() < 1e-10 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST_CASE("midpoint resolvent") {
  Element w = rank1.element(std::vector<double>{0.5});
  Element y = rank1.element(std::vector<double>{0.0});
  Element x = rank1.element(std::vector<double>{1.0});
  CHECK(midpoint_resolvent(w, y, x).coord(0).real() == doctest::Approx(0.25));

  // symmetric midpoint: w = (x+y)/2 gives (x-y)/4
  std::mt19937_64 rng(23);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 10; ++t) {
      Element yy = random_real_element(*alg, rng);
      Element xx = add(yy, random_in_cone(*alg, rng));
      Element mid = scale(0.5, add(xx, yy));
      Element r = midpoint_resolvent(mid, yy, xx);
      CHECK(sub(r, scale(0.25, sub(xx, yy))).norm() < 1e-10);
    }

  // det identity: det R = det(w-y) det(x-y)^{-1} det(x-w)
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 100; ++t) {
      Element yy = random_real_element(*alg, rng);
      Element xx = random_real_element(*alg, rng);
      Element ww = random_real_element(*alg, rng);
      if (std::abs(jordan_det(sub(ww, yy))) < 1e-2 ||
          std::abs(jordan_det(sub(xx, ww))) < 1e-2 ||
          std::abs(jordan_det(sub(xx, yy))) < 1e-2)
        continue;
      cplx lhs = jordan_det(midpoint_resolvent(ww, yy, xx));
      cplx rhs = jordan_det(sub(ww, yy)) * jordan_det(sub(xx, ww)) /
                 jordan_det(sub(xx, yy));
      CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(rhs)));
    }

  // polynomial route agrees with the double-inverse route
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 20; ++t) {
      Element yy = random_real_element(*alg, rng);
      Element uu = random_in_cone(*alg, rng);
      Element xx = add(yy, uu);
      Element ww = add(yy, scale(0.3, uu));
      Element direct = midpoint_resolvent(ww, yy, xx);
      Element poly = resolvent_poly(sub(ww, yy), uu);
      CHECK(sub(direct, poly).norm() < 1e-10 * std::max(1.0, poly.norm()));
    }
}

TEST_CASE("inversion factorization: P(-x^{-1}+y^{-1}) = P(x)^{-1} P(x-y) P(y)^{-1}") {
  std::mt19937_64 rng(29);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 100; ++t) {
      Element x = random_in_cone(*alg, rng);
      Element y = random_in_cone(*alg, rng);
      if (std::abs(jordan_det(sub(x, y))) < 1e-3) continue;
      Element xi = spectral_fn(x, SpectralFn::Inv);
      Element yi = spectral_fn(y, SpectralFn::Inv);
      Mat lhs = quad_p(sub(yi, xi)).matrix;
      Mat rhs = quad_p(x).matrix.inverse() * quad_p(sub(x, y)).matrix *
                quad_p(y).matrix.inverse();
      CHECK((lhs - rhs).max_abs() < 1e-9 * std::max(1.0, rhs.max_abs()));
    }
}

TEST_CASE("resolvent equivariance under translations and dilations") {
  std::mt19937_64 rng(31);
  for (const auto* alg : all_algebras())
    for (int t = 0; t < 20; ++t) {
      Element y = random_real_element(*alg, rng);
      Element u = random_in_cone(*alg, rng);
      Element x = add(y, u);
      Element w = add(y, scale(0.4, u));
      Element base = midpoint_resolvent(w, y, x);

      Element a = random_real_element(*alg, rng);
      Element lhs_t =
          midpoint_resolvent(add(w, a), add(y, a), add(x, a));
      CHECK(sub(lhs_t, base).norm() < 1e-10 * std::max(1.0, base.norm()));

      Element d = random_in_cone(*alg, rng);
      LinearMap Pd = quad_p(d);
      Element lhs_d = midpoint_resolvent(Pd.apply(w), Pd.apply(y), Pd.apply(x));
      Element rhs_d = Pd.apply(base);
      CHECK(sub(lhs_d, rhs_d).norm() < 1e-10 * std::max(1.0, rhs_d.norm()));
    }
}
