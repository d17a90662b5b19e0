#pragma once

// Deterministic random element generators shared by the property suites.

#include <random>

#include "symcone/geometry.hpp"
#include "symcone/jordan.hpp"

namespace symcone {

inline Element random_real_element(const JordanAlgebra& alg,
                                   std::mt19937_64& rng, double span = 1.0) {
  std::uniform_real_distribution<double> u(-span, span);
  std::vector<double> c(alg.dim());
  for (auto& v : c) v = u(rng);
  return alg.element(c);
}

inline Element random_complex_element(const JordanAlgebra& alg,
                                      std::mt19937_64& rng, double span = 1.0) {
  std::uniform_real_distribution<double> u(-span, span);
  std::vector<cplx> c(alg.dim());
  for (auto& v : c) v = cplx(u(rng), u(rng));
  return alg.element(std::move(c));
}

// random element of the open cone: shift a real element past its lowest
// eigenvalue, with a margin
inline Element random_in_cone(const JordanAlgebra& alg, std::mt19937_64& rng,
                              double margin = 0.2) {
  Element z = random_real_element(alg, rng);
  SpectralData sd = spectral(z);
  const double lam_min = sd.eigenvalues.back();
  std::uniform_real_distribution<double> u(margin, 1.0 + margin);
  return add(z, scale(-lam_min + u(rng), alg.unit()));
}

// random real element of the bounded domain (spectral norm < rho)
inline Element random_in_disk_real(const JordanAlgebra& alg,
                                   std::mt19937_64& rng, double rho = 0.8) {
  Element z = random_real_element(alg, rng);
  const double s = spectral_norm(z);
  std::uniform_real_distribution<double> u(0.1, rho);
  return scale(u(rng) / std::max(s, 1e-12), z);
}

inline Element random_in_disk_complex(const JordanAlgebra& alg,
                                      std::mt19937_64& rng, double rho = 0.8) {
  Element z = random_complex_element(alg, rng);
  const double s = spectral_norm(z);
  std::uniform_real_distribution<double> u(0.1, rho);
  return scale(u(rng) / std::max(s, 1e-12), z);
}

// random tube point: real part free, imaginary part cone-interior
inline Element random_in_tube(const JordanAlgebra& alg, std::mt19937_64& rng) {
  Element re = random_real_element(alg, rng);
  Element im = random_in_cone(alg, rng);
  return add(re, scale(cplx(0.0, 1.0), im));
}

inline Element random_invertible_real(const JordanAlgebra& alg,
                                      std::mt19937_64& rng,
                                      double min_det = 1e-3) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Element z = random_real_element(alg, rng);
    if (std::abs(jordan_det(z)) > min_det) return z;
  }
  throw std::runtime_error("random_invertible_real: sampling failed");
}

}  // namespace symcone
