#pragma once

// Batch verification harness: named suites of identity and quadrature checks
// over configurable (lambda, mu, signature) grids, machine-readable JSON
// reports, and CSV convergence tables. The CLI entry point lives here so the
// exit-code contract is testable in-process.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "symcone/operators.hpp"
#include "symcone/sampling.hpp"

namespace symcone::verify {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadSizes {
  std::size_t rank1 = 64;
  std::size_t eigen = 28;
  std::size_t cartesian = 20;
  std::size_t cone = 32;
};

struct VerifyConfig {
  std::vector<std::string> suites;
  std::vector<std::string> algebras = {"rank1", "sym2", "spin3"};
  std::vector<cplx> lambdas = {cplx(3.0), cplx(2.5), cplx(4.0)};
  std::vector<cplx> mus = {cplx(3.0), cplx(4.0), cplx(3.5)};
  std::vector<Signature> signatures = {Signature({0, 0}), Signature({1, 1}),
                                       Signature({2, 1}), Signature({3, 1}),
                                       Signature({2, 2})};
  int l_min = 0;
  int l_max = 4;
  int draws = 100;
  QuadSizes sizes;
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 20260808;
  std::string output;
};

inline const JordanAlgebra& algebra_by_name(const std::string& name) {
  if (name == "rank1") return JordanAlgebra::rank1();
  if (name == "sym2") return JordanAlgebra::sym_real(2);
  if (name == "spin3") return JordanAlgebra::spin(3);
  if (name == "spin4") return JordanAlgebra::spin(4);
  throw ConfigError("unknown algebra name: " + name);
}

inline const std::set<std::string>& known_suites() {
  static const std::set<std::string> names = {
      "jordan-identities", "geometry-identities", "gamma-integral",
      "beta-minktype",     "rank1-kp",            "rankin-cohen",
      "equivariance",      "cross-algebra"};
  return names;
}

namespace detail {

inline cplx complex_from_json(const json& j, const char* what) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  throw ConfigError(std::string(what) + ": expected number or [re, im] pair");
}

inline Signature restrict_signature(const Signature& k, std::size_t rank) {
  std::vector<int> parts;
  for (std::size_t j = 0; j < rank; ++j)
    parts.push_back(j < k.size() ? k.part(j) : k.last());
  for (std::size_t j = 1; j < parts.size(); ++j)
    parts[j] = std::min(parts[j], parts[j - 1]);
  return Signature(parts);
}

}  // namespace detail

inline VerifyConfig config_from_json(const json& j) {
  VerifyConfig cfg;
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (j.contains("suites")) {
    cfg.suites.clear();
    for (const auto& s : j.at("suites")) {
      const std::string name = s.get<std::string>();
      if (!known_suites().count(name))
        throw ConfigError("unknown suite: " + name);
      cfg.suites.push_back(name);
    }
  }
  if (j.contains("algebras")) {
    cfg.algebras.clear();
    for (const auto& a : j.at("algebras")) {
      cfg.algebras.push_back(a.get<std::string>());
      algebra_by_name(cfg.algebras.back());  // validates
    }
  }
  if (j.contains("lambdas")) {
    cfg.lambdas.clear();
    for (const auto& v : j.at("lambdas"))
      cfg.lambdas.push_back(detail::complex_from_json(v, "lambdas"));
  }
  if (j.contains("mus")) {
    cfg.mus.clear();
    for (const auto& v : j.at("mus"))
      cfg.mus.push_back(detail::complex_from_json(v, "mus"));
  }
  if (cfg.lambdas.size() != cfg.mus.size())
    throw ConfigError("lambdas and mus must pair up (equal lengths)");
  if (j.contains("signatures")) {
    cfg.signatures.clear();
    for (const auto& s : j.at("signatures")) {
      std::vector<int> parts;
      for (const auto& p : s) parts.push_back(p.get<int>());
      try {
        cfg.signatures.push_back(Signature(parts));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad signature in config: ") + e.what());
      }
    }
  }
  if (j.contains("l_range")) {
    cfg.l_min = j.at("l_range").at(0).get<int>();
    cfg.l_max = j.at("l_range").at(1).get<int>();
    if (cfg.l_min < 0 || cfg.l_max < cfg.l_min)
      throw ConfigError("l_range must be a non-negative increasing pair");
  }
  if (j.contains("draws")) cfg.draws = j.at("draws").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
  if (j.contains("quad_sizes")) {
    const auto& q = j.at("quad_sizes");
    if (q.contains("rank1")) cfg.sizes.rank1 = q.at("rank1").get<std::size_t>();
    if (q.contains("eigen")) cfg.sizes.eigen = q.at("eigen").get<std::size_t>();
    if (q.contains("cartesian"))
      cfg.sizes.cartesian = q.at("cartesian").get<std::size_t>();
    if (q.contains("cone")) cfg.sizes.cone = q.at("cone").get<std::size_t>();
  }
  if (j.contains("tolerances"))
    for (const auto& [key, val] : j.at("tolerances").items())
      cfg.tolerances[key] = val.get<double>();

  // every grid entry must satisfy the convergence condition for every
  // selected algebra; rejected here, at load time, with a diagnostic
  for (const auto& name : cfg.algebras) {
    const JordanAlgebra& alg = algebra_by_name(name);
    for (std::size_t i = 0; i < cfg.lambdas.size(); ++i)
      for (const auto& k : cfg.signatures) {
        Signature kr = detail::restrict_signature(k, alg.rank());
        const double bound = -static_cast<double>(kr.last()) +
                             static_cast<double>(alg.dim()) /
                                 static_cast<double>(alg.rank()) -
                             1.0;
        if (!(cfg.lambdas[i].real() > bound) || !(cfg.mus[i].real() > bound)) {
          std::ostringstream msg;
          msg << "grid entry rejected: algebra " << name << ", lambda "
              << cfg.lambdas[i].real() << ", mu " << cfg.mus[i].real()
              << ", k_r " << kr.last() << " violates Re > " << bound;
          throw ConfigError(msg.str());
        }
      }
  }
  return cfg;
}

// ---------------------------------------------------------------------------

struct CheckRecord {
  std::string suite;
  std::string check;
  std::string anchor;
  std::string algebra;
  json inputs = json::object();
  cplx expected{0.0};
  cplx computed{0.0};
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  bool all_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  json to_json() const {
    json j;
    j["environment"] = {{"version", version}, {"seed", seed}};
    std::size_t passed = 0;
    for (const auto& r : records) passed += r.pass ? 1 : 0;
    j["summary"] = {{"total", records.size()},
                    {"passed", passed},
                    {"failed", records.size() - passed}};
    auto arr = json::array();
    for (const auto& r : records) {
      json rec;
      rec["suite"] = r.suite;
      rec["check"] = r.check;
      rec["anchor"] = r.anchor;
      rec["algebra"] = r.algebra;
      rec["inputs"] = r.inputs;
      rec["expected"] = {r.expected.real(), r.expected.imag()};
      rec["computed"] = {r.computed.real(), r.computed.imag()};
      rec["abs_error"] = r.abs_error;
      rec["rel_error"] = r.rel_error;
      rec["tolerance"] = r.tolerance;
      rec["pass"] = r.pass;
      arr.push_back(std::move(rec));
    }
    j["records"] = std::move(arr);
    return j;
  }

  static Report from_json(const json& j) {
    Report rep;
    rep.version = j.at("environment").at("version").get<std::string>();
    rep.seed = j.at("environment").at("seed").get<std::uint64_t>();
    for (const auto& rec : j.at("records")) {
      CheckRecord r;
      r.suite = rec.at("suite").get<std::string>();
      r.check = rec.at("check").get<std::string>();
      r.anchor = rec.at("anchor").get<std::string>();
      r.algebra = rec.at("algebra").get<std::string>();
      r.inputs = rec.at("inputs");
      r.expected = cplx(rec.at("expected")[0].get<double>(),
                        rec.at("expected")[1].get<double>());
      r.computed = cplx(rec.at("computed")[0].get<double>(),
                        rec.at("computed")[1].get<double>());
      r.abs_error = rec.at("abs_error").get<double>();
      r.rel_error = rec.at("rel_error").get<double>();
      r.tolerance = rec.at("tolerance").get<double>();
      r.pass = rec.at("pass").get<bool>();
      rep.records.push_back(std::move(r));
    }
    return rep;
  }
};

// ---------------------------------------------------------------------------
// suite implementations

namespace detail {

inline std::uint64_t suite_seed(std::uint64_t base, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return base ^ h;
}

inline double tol_or(const VerifyConfig& cfg, const std::string& key,
                     double fallback) {
  auto it = cfg.tolerances.find(key);
  return it == cfg.tolerances.end() ? fallback : it->second;
}

inline CheckRecord make_error_record(const std::string& suite,
                                     const std::string& check,
                                     const std::string& anchor,
                                     const std::string& algebra, cplx expected,
                                     cplx computed, double tol) {
  CheckRecord r;
  r.suite = suite;
  r.check = check;
  r.anchor = anchor;
  r.algebra = algebra;
  r.expected = expected;
  r.computed = computed;
  r.abs_error = std::abs(computed - expected);
  r.rel_error = r.abs_error / std::max(1e-300, std::abs(expected));
  r.tolerance = tol;
  r.pass = r.rel_error <= tol;
  return r;
}

// record for a "max observed residual" style check: pass if computed <= tol
inline CheckRecord make_residual_record(const std::string& suite,
                                        const std::string& check,
                                        const std::string& anchor,
                                        const std::string& algebra,
                                        double residual, double tol) {
  CheckRecord r;
  r.suite = suite;
  r.check = check;
  r.anchor = anchor;
  r.algebra = algebra;
  r.expected = cplx(0.0);
  r.computed = cplx(residual, 0.0);
  r.abs_error = residual;
  r.rel_error = residual;
  r.tolerance = tol;
  r.pass = residual <= tol;
  return r;
}

inline std::vector<Element> minktype_u_grid(const JordanAlgebra& alg) {
  if (alg.rank() == 1)
    return {alg.unit(), alg.element(std::vector<double>{2.0}),
            alg.element(std::vector<double>{0.5})};
  return {alg.unit(), diag_element(alg, std::vector<double>{2.0, 1.0}),
          diag_element(alg, std::vector<double>{3.0, 0.5})};
}

inline std::vector<CheckRecord> suite_jordan(const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string suite = "jordan-identities";
  for (const auto& name : cfg.algebras) {
    const JordanAlgebra& alg = algebra_by_name(name);
    std::mt19937_64 rng(suite_seed(cfg.seed, suite + name));
    const int N = cfg.draws;
    const int expo = static_cast<int>(2 * alg.dim() / alg.rank());

    double err_detp = 0.0, err_detb = 0.0, err_pow = 0.0, err_pinv = 0.0,
           err_trace = 0.0, err_dual = 0.0;
    for (int t = 0; t < N; ++t) {
      Element x = random_invertible_real(alg, rng);
      cplx rhs(1.0);
      const cplx det = jordan_det(x);
      for (int e = 0; e < expo; ++e) rhs *= det;
      err_detp = std::max(err_detp, std::abs(quad_p(x).determinant() - rhs) /
                                        std::abs(rhs));

      Element xd = random_in_disk_complex(alg, rng, 0.7);
      Element yd = random_in_disk_complex(alg, rng, 0.7);
      cplx hb(1.0);
      const cplx h = generic_norm(xd, yd);
      for (int e = 0; e < expo; ++e) hb *= h;
      err_detb =
          std::max(err_detb, std::abs(bmap_b(xd, yd).determinant() - hb) /
                                 std::max(1.0, std::abs(hb)));

      Element xc = random_in_cone(alg, rng);
      Element cube = mul(xc, mul(xc, xc));
      err_pow = std::max(err_pow,
                         sub(cube, spectral_fn(xc, SpectralFn::Pow, 3.0)).norm() /
                             std::max(1.0, cube.norm()));

      Mat pinv_lhs = quad_p(spectral_fn(xc, SpectralFn::Inv)).matrix;
      Mat pinv_rhs = quad_p(xc).matrix.inverse();
      err_pinv = std::max(err_pinv, (pinv_lhs - pinv_rhs).max_abs() /
                                        std::max(1.0, pinv_rhs.max_abs()));

      Element a = random_real_element(alg, rng);
      Element b = random_real_element(alg, rng);
      LinearMap D = dmap_d(a, b);
      cplx tr(0.0);
      for (std::size_t i = 0; i < alg.dim(); ++i) tr += D.matrix(i, i);
      const cplx want = tr * static_cast<double>(alg.rank()) /
                        (2.0 * static_cast<double>(alg.dim()));
      err_trace = std::max(err_trace, std::abs(inner(a, b) - want) /
                                          std::max(1.0, std::abs(want)));

      Signature k = restrict_signature(Signature({2, 1}), alg.rank());
      auto pr = check_dual_power(random_in_cone(alg, rng), k, 3);
      err_dual = std::max(err_dual, std::abs(pr.first - pr.second) /
                                        std::max(1.0, std::abs(pr.second)));
    }
    auto push = [&](const std::string& check, const std::string& anchor,
                    double err, double tol) {
      CheckRecord r = make_residual_record(suite, check, anchor, name, err, tol);
      r.inputs = {{"draws", N}};
      out.push_back(std::move(r));
    };
    push("det-quadratic-rep", "det(x)^{2n/r} = Det P(x)", err_detp,
         tol_or(cfg, "det-p", 1e-9));
    push("det-bergman-op", "h(x,y)^{2n/r} = Det B(x,y)", err_detb,
         tol_or(cfg, "det-b", 1e-9));
    push("power-associativity", "x^3 via product vs spectral power", err_pow,
         tol_or(cfg, "power-assoc", 1e-10));
    push("p-of-inverse", "P(x^{-1}) = P(x)^{-1}", err_pinv,
         tol_or(cfg, "p-inverse", 1e-9));
    push("trace-form-from-d", "(x|y) = (r/2n) Tr D(x,y)", err_trace,
         tol_or(cfg, "trace-form", 1e-10));
    push("dual-power-identity", "det^{k0} Delta_k(x^{-1}) = dual Delta(x)",
         err_dual, tol_or(cfg, "dual-power", 1e-11));
  }
  return out;
}

inline std::vector<CheckRecord> suite_geometry(const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string suite = "geometry-identities";
  for (const auto& name : cfg.algebras) {
    const JordanAlgebra& alg = algebra_by_name(name);
    std::mt19937_64 rng(suite_seed(cfg.seed, suite + name));
    const int N = cfg.draws;

    double err_qi = 0.0, err_hua = 0.0, err_fact = 0.0, err_cayley = 0.0,
           err_chart = 0.0;
    for (int t = 0; t < N; ++t) {
      Element x = random_in_cone(alg, rng);
      Element v = scale(0.2, random_real_element(alg, rng));
      Element lhs = quasi_inverse(x, v);
      Element rhs =
          spectral_fn(sub(spectral_fn(x, SpectralFn::Inv), v), SpectralFn::Inv);
      err_qi = std::max(err_qi,
                        sub(lhs, rhs).norm() / std::max(1.0, rhs.norm()));

      Element w = random_real_element(alg, rng);
      Element yy = random_real_element(alg, rng);
      Element xx = random_real_element(alg, rng);
      if (std::abs(jordan_det(sub(w, yy))) > 1e-2 &&
          std::abs(jordan_det(sub(xx, w))) > 1e-2 &&
          std::abs(jordan_det(sub(xx, yy))) > 1e-2) {
        cplx dl = jordan_det(midpoint_resolvent(w, yy, xx));
        cplx dr = jordan_det(sub(w, yy)) * jordan_det(sub(xx, w)) /
                  jordan_det(sub(xx, yy));
        err_hua = std::max(err_hua,
                           std::abs(dl - dr) / std::max(1.0, std::abs(dr)));
      }

      Element cx = random_in_cone(alg, rng);
      Element cy = random_in_cone(alg, rng);
      if (std::abs(jordan_det(sub(cx, cy))) > 1e-3) {
        Mat L = quad_p(sub(spectral_fn(cy, SpectralFn::Inv),
                           spectral_fn(cx, SpectralFn::Inv)))
                    .matrix;
        Mat R = quad_p(cx).matrix.inverse() * quad_p(sub(cx, cy)).matrix *
                quad_p(cy).matrix.inverse();
        err_fact =
            std::max(err_fact, (L - R).max_abs() / std::max(1.0, R.max_abs()));
      }

      Element dpt = random_in_disk_complex(alg, rng, 0.85);
      Element back = act(GroupGenerator::inverse_cayley(),
                         act(GroupGenerator::cayley(), dpt));
      err_cayley = std::max(err_cayley,
                            sub(back, dpt).norm() / std::max(1.0, dpt.norm()));

      Element base = random_real_element(alg, rng, 0.3);
      Element u = random_in_cone(alg, rng);
      ContourChart c = contour_chart(add(base, u), base);
      if (c.valid) {
        Mat sq = c.sqrt_map.matrix * c.sqrt_map.matrix;
        Mat pu = quad_p(u).matrix;
        err_chart = std::max(err_chart,
                             (sq - pu).max_abs() / std::max(1.0, pu.max_abs()));
      }
    }
    auto push = [&](const std::string& check, const std::string& anchor,
                    double err, double tol) {
      CheckRecord r = make_residual_record(suite, check, anchor, name, err, tol);
      r.inputs = {{"draws", N}};
      out.push_back(std::move(r));
    };
    push("quasi-inverse-two-routes", "B-route vs double-inverse route", err_qi,
         tol_or(cfg, "quasi-inverse", 1e-10));
    push("resolvent-det-identity",
         "det of interval resolvent factors through endpoints", err_hua,
         tol_or(cfg, "hua-det", 1e-11));
    push("inversion-factorization",
         "P(y^{-1}-x^{-1}) = P(x)^{-1} P(x-y) P(y)^{-1}", err_fact,
         tol_or(cfg, "inversion-factorization", 1e-9));
    push("cayley-roundtrip", "inverse Cayley after Cayley is the identity",
         err_cayley, tol_or(cfg, "cayley-roundtrip", 1e-10));
    push("chart-square-root", "chart square composes to P(u)", err_chart,
         tol_or(cfg, "chart-squares", 1e-10));
  }
  return out;
}

inline std::vector<CheckRecord> suite_gamma(const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string suite = "gamma-integral";
  const double tol = tol_or(cfg, "gamma", 1e-4);
  for (const auto& name : cfg.algebras) {
    const JordanAlgebra& alg = algebra_by_name(name);
    const double nr =
        static_cast<double>(alg.dim()) / static_cast<double>(alg.rank());
    std::vector<Signature> ks;
    if (alg.rank() == 1)
      ks = {Signature({0}), Signature({1}), Signature({2})};
    else
      ks = {Signature::zero(2), Signature({1, 0}), Signature({2, 1})};
    int idx = 0;
    for (const auto& lam : cfg.lambdas) {
      if (lam.imag() != 0.0) continue;  // cone weight rules are real
      QuadratureRule rule = cone_rule(alg, cfg.sizes.cone, lam.real() - nr);
      for (const auto& k : ks) {
        auto f = [&k](const Element& z) { return delta_k(z, k); };
        IntegrationResult r = integrate(rule, f);
        const cplx target = gamma_r(alg, lam, k);
        CheckRecord rec = make_error_record(
            suite, "gamma-cone-" + std::to_string(idx++),
            "exponential-weight cone integral of a power function", name,
            target, r.value, tol);
        rec.inputs = {{"lambda", lam.real()},
                      {"signature", k.parts()},
                      {"size", cfg.sizes.cone},
                      {"quad_error", r.error_estimate}};
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

inline std::vector<CheckRecord> suite_beta_minktype(const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string suite = "beta-minktype";
  for (const auto& name : cfg.algebras) {
    const JordanAlgebra& alg = algebra_by_name(name);
    const bool rank1 = alg.rank() == 1;

    // collapse identity on a (lambda, mu, l) grid: closed forms only
    {
      std::mt19937_64 rng(suite_seed(cfg.seed, suite + name));
      std::uniform_real_distribution<double> u(1.2, 5.0);
      double worst = 0.0;
      for (int t = 0; t < 50; ++t) {
        auto pr = collapse_check(alg, cplx(u(rng), 0.3 * u(rng)),
                                 cplx(u(rng), -0.2 * u(rng)), t % 4);
        worst = std::max(worst, std::abs(pr.first - pr.second) /
                                    std::max(1e-300, std::abs(pr.second)));
      }
      CheckRecord rec = make_residual_record(
          suite, "collapse-identity", "constant signatures shift the weights",
          name, worst, tol_or(cfg, "collapse", 1e-12));
      rec.inputs = {{"grid_points", 50}};
      out.push_back(std::move(rec));
    }

    struct Engine {
      const char* label;
      Scheme scheme;
      std::size_t size;
      double tol;
    };
    std::vector<Engine> engines;
    if (rank1)
      engines = {{"gauss", Scheme::GaussJacobi1D, cfg.sizes.rank1,
                  tol_or(cfg, "minktype-rank1", 1e-6)}};
    else
      engines = {{"eigen", Scheme::EigenAngle, cfg.sizes.eigen,
                  tol_or(cfg, "minktype-eigen", 1e-5)},
                 {"cartesian", Scheme::CartesianIndicator, cfg.sizes.cartesian,
                  tol_or(cfg, "minktype-cartesian", 1e-3)}};

    for (const auto& eng : engines) {
      QuadratureRule rule = reference_rule(alg, eng.scheme, eng.size);
      int idx = 0;
      for (std::size_t i = 0; i < cfg.lambdas.size(); ++i)
        for (const auto& ksig : cfg.signatures) {
          Signature k = restrict_signature(ksig, alg.rank());
          WeightParams params(alg, cfg.lambdas[i], cfg.mus[i], k);
          for (const auto& u : minktype_u_grid(alg)) {
            auto [lhs, rhs] = min_ktype_image(params, u, rule);
            CheckRecord rec = make_error_record(
                suite,
                std::string("minktype-") + eng.label + "-" +
                    std::to_string(idx++),
                "normalization constant on the lowest component", name, rhs,
                lhs, eng.tol);
            rec.inputs = {{"lambda", {cfg.lambdas[i].real(), cfg.lambdas[i].imag()}},
                          {"mu", {cfg.mus[i].real(), cfg.mus[i].imag()}},
                          {"signature", k.parts()},
                          {"engine", eng.label},
                          {"size", eng.size}};
            out.push_back(std::move(rec));
          }
        }
    }
  }
  return out;
}

inline std::vector<CheckRecord> suite_rank1_kp(const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string suite = "rank1-kp";
  const JordanAlgebra& alg = JordanAlgebra::rank1();
  const double tol = tol_or(cfg, "kp", 1e-8);
  const double tol_bridge = tol_or(cfg, "bridge", 1e-8);
  QuadratureRule rule = reference_rule(alg, Scheme::GaussJacobi1D, cfg.sizes.rank1);
  auto one = [](cplx) { return cplx(1.0); };
  const cplx x(0.4, 1.1), y(-0.1, 0.6);
  int idx = 0;
  for (std::size_t i = 0; i < cfg.lambdas.size(); ++i) {
    const cplx lam = cfg.lambdas[i], mu = cfg.mus[i];
    for (int l = cfg.l_min; l <= cfg.l_max; ++l) {
      cplx got = kp_holo_1d(lam, mu, l, one, x, y, cfg.sizes.rank1);
      cplx dp(1.0);
      for (int t = 0; t < l; ++t) dp *= (x - y);
      cplx want =
          dp * std::exp(log_gamma(lam + static_cast<double>(l)) +
                        log_gamma(mu + static_cast<double>(l)) -
                        log_gamma(lam + mu + 2.0 * static_cast<double>(l)));
      for (int t = 1; t <= l; ++t) want /= static_cast<double>(t);
      CheckRecord rec = make_error_record(
          suite, "kp-closed-form-" + std::to_string(idx),
          "segment integral of a constant against the two-sided weight",
          "rank1", want, got, tol);
      rec.inputs = {{"lambda", {lam.real(), lam.imag()}},
                    {"mu", {mu.real(), mu.imag()}},
                    {"l", l}};
      out.push_back(std::move(rec));

      // bridge: classical over reference-domain operator = 1/l!
      WeightParams p(alg, lam, mu, Signature({l}));
      cplx ho = holo_up_scalar(p, ScalarFunction::constant(1.0),
                               alg.element(std::vector<cplx>{x}),
                               alg.element(std::vector<cplx>{y}), rule)
                    .value;
      double fact = 1.0;
      for (int t = 1; t <= l; ++t) fact *= t;
      CheckRecord bridge = make_error_record(
          suite, "kp-normalization-bridge-" + std::to_string(idx),
          "classical segment form vs reference-domain form", "rank1",
          cplx(1.0 / fact), got / ho, tol_bridge);
      bridge.inputs = {{"lambda", {lam.real(), lam.imag()}},
                       {"mu", {mu.real(), mu.imag()}},
                       {"l", l}};
      out.push_back(std::move(bridge));
      ++idx;
    }
  }
  return out;
}

inline std::vector<CheckRecord> suite_rankin_cohen(const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string suite = "rankin-cohen";
  {
    const cplx lam(1.7, 0.4), mu(2.3, -0.2);
    double worst = 0.0;
    for (int l = 0; l <= 3; ++l) {
      const cplx nu = lam + mu + 2.0 * l;
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
          Poly2<cplx> f = Poly2<cplx>::monomial(a, b);
          for (Sl2Gen g : {Sl2Gen::Raising, Sl2Gen::Euler, Sl2Gen::Lowering}) {
            Poly1<cplx> lhs = rankin_cohen<cplx>(
                lam, mu, l, sl2_tensor_action(g, lam, mu, f));
            Poly1<cplx> rhs =
                sl2_target_action(g, nu, rankin_cohen<cplx>(lam, mu, l, f));
            Poly1<cplx> diff = lhs - rhs;
            double m = 0.0, scale_ref = 1.0;
            for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
              m = std::max(m, std::abs(diff.coeff(i)));
              scale_ref = std::max(scale_ref, std::abs(rhs.coeff(i)));
            }
            worst = std::max(worst, m / scale_ref);
          }
        }
    }
    CheckRecord rec = make_residual_record(
        suite, "sl2-intertwining", "bracket commutes with the derived actions",
        "rank1", worst, tol_or(cfg, "rc-float", 1e-12));
    rec.inputs = {{"monomial_degree_cap", 5}, {"l_cap", 3}};
    out.push_back(std::move(rec));
  }
  {
    double worst = 0.0;
    for (cplx lam : {cplx(2.0, 0.0), cplx(2.5, 0.3)})
      for (int l = 0; l <= 3; ++l) {
        auto ratios = rc_kp_composition(lam, lam + 0.5, l, 5);
        for (std::size_t j = 1; j < ratios.size(); ++j)
          worst = std::max(worst, std::abs(ratios[j] - ratios[0]) /
                                      std::max(1.0, std::abs(ratios[0])));
      }
    CheckRecord rec = make_residual_record(
        suite, "bracket-integral-composition",
        "composite is scalar across monomial degrees", "rank1", worst,
        tol_or(cfg, "rc-composition", 1e-8));
    rec.inputs = {{"degree_cap", 5}};
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<CheckRecord> suite_equivariance(const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string suite = "equivariance";
  const double tol = tol_or(cfg, "equivariance", 1.0);
  const int configs = std::min(cfg.draws, 20);

  for (const auto& name : cfg.algebras) {
    const JordanAlgebra& alg = algebra_by_name(name);
    std::mt19937_64 rng(suite_seed(cfg.seed, suite + name));
    QuadratureRule rule =
        alg.rank() == 1
            ? reference_rule(alg, Scheme::GaussJacobi1D, cfg.sizes.rank1)
            : reference_rule(alg, Scheme::EigenAngle, cfg.sizes.eigen);
    Element probe_dir = diag_element(
        alg, std::vector<double>(alg.rank(), 0.7));
    ScalarFunction f = ScalarFunction::callback(
        "probe", [probe_dir](const Element& w) {
          return jordan_det(w) + 2.0 * inner(w, probe_dir) + 1.0;
        });
    Signature k_general =
        restrict_signature(Signature({1, 0}), alg.rank());
    Signature k_scalar = Signature::constant(alg.rank(), 1);

    auto run_generator = [&](const std::string& label, auto make_case) {
      double worst_ratio = 0.0, worst_res = 0.0;
      for (int t = 0; t < configs; ++t) {
        auto [gen, params, x, y] = make_case(t);
        EquivarianceCheck c = equivariance_residual(params, f, gen, x, y, rule);
        worst_res = std::max(worst_res, c.residual);
        worst_ratio = std::max(
            worst_ratio, c.residual / (10.0 * std::max(c.error_budget, 1e-13)));
      }
      CheckRecord rec = make_residual_record(
          suite, label, "residual within ten quadrature error estimates", name,
          worst_ratio, tol);
      rec.inputs = {{"configs", configs}, {"max_residual", worst_res}};
      out.push_back(std::move(rec));
    };

    run_generator("translate", [&](int) {
      Element y = random_in_tube(alg, rng);
      Element x = add(y, random_in_cone(alg, rng));
      Element a = random_real_element(alg, rng);
      return std::make_tuple(GroupGenerator::translate(a),
                             WeightParams(alg, 3.0, 2.5, k_general), x, y);
    });
    run_generator("dilate", [&](int t) {
      Element y = random_in_tube(alg, rng);
      Element x = add(y, random_in_cone(alg, rng));
      std::vector<double> evals(alg.rank());
      for (std::size_t j = 0; j < alg.rank(); ++j)
        evals[j] = 0.6 + 0.3 * static_cast<double>((t + static_cast<int>(j)) % 3);
      Element a = diag_element(alg, evals);
      return std::make_tuple(GroupGenerator::dilate(a),
                             WeightParams(alg, 3.0, 2.5, k_general), x, y);
    });
    run_generator("invert", [&](int t) {
      // tube points with a real cone offset keep all det factors off the cut
      std::uniform_real_distribution<double> u(0.8, 1.4);
      Element b = scale(u(rng), alg.unit());
      Element y = add(scale(0.25, alg.unit()), scale(cplx(0.0, 1.0), b));
      Element x = add(y, scale(0.4 + 0.1 * (t % 3), alg.unit()));
      return std::make_tuple(GroupGenerator::invert(),
                             WeightParams(alg, 3.0, 2.5,
                                          (t % 2) ? k_scalar
                                                  : Signature::zero(alg.rank())),
                             x, y);
    });
  }
  return out;
}

inline std::vector<CheckRecord> suite_cross_algebra(const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string suite = "cross-algebra";
  const JordanAlgebra& sym2 = JordanAlgebra::sym_real(2);
  const JordanAlgebra& spin3 = JordanAlgebra::spin(3);

  // structural transport
  {
    std::mt19937_64 rng(suite_seed(cfg.seed, suite));
    double worst = 0.0;
    for (int t = 0; t < cfg.draws; ++t) {
      Element x = random_real_element(sym2, rng);
      Element y = random_real_element(sym2, rng);
      Element xs = sym2_to_spin3(x), ys = sym2_to_spin3(y);
      worst = std::max(worst, sub(sym2_to_spin3(mul(x, y)), mul(xs, ys)).norm());
      worst = std::max(worst, std::abs(jordan_det(x) - jordan_det(xs)));
      worst = std::max(worst, std::abs(jordan_trace(x) - jordan_trace(xs)));
      SpectralData a = spectral(x), b = spectral(xs);
      worst = std::max(worst, std::abs(a.eigenvalues[0] - b.eigenvalues[0]));
      worst = std::max(worst, std::abs(a.eigenvalues[1] - b.eigenvalues[1]));
    }
    CheckRecord rec = make_residual_record(
        suite, "isomorphism-transport",
        "the explicit bijection preserves product, det, trace, spectra",
        "sym2/spin3", worst, tol_or(cfg, "cross-iso", 1e-10));
    rec.inputs = {{"draws", cfg.draws}};
    out.push_back(std::move(rec));
  }

  // identical closed-form constants
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < cfg.lambdas.size(); ++i)
      for (const auto& ksig : cfg.signatures) {
        Signature k = detail::restrict_signature(ksig, 2);
        cplx bs = beta_constant(WeightParams(sym2, cfg.lambdas[i], cfg.mus[i], k));
        cplx bp = beta_constant(WeightParams(spin3, cfg.lambdas[i], cfg.mus[i], k));
        worst = std::max(worst, std::abs(bs - bp) / std::abs(bs));
      }
    CheckRecord rec = make_residual_record(
        suite, "beta-constant-equality",
        "both rank-2 models share (r,d) and hence the constant", "sym2/spin3",
        worst, tol_or(cfg, "cross-beta", 1e-14));
    out.push_back(std::move(rec));
  }

  // quadrature values agree within combined error estimates
  {
    QuadratureRule rs = reference_rule(sym2, Scheme::EigenAngle, cfg.sizes.eigen);
    QuadratureRule rp = reference_rule(spin3, Scheme::EigenAngle, cfg.sizes.eigen);
    double worst = 0.0;
    int idx = 0;
    for (std::size_t i = 0; i < std::min<std::size_t>(cfg.lambdas.size(), 2); ++i)
      for (const auto& ksig : {Signature({1, 0}), Signature({2, 1})}) {
        WeightParams ps(sym2, cfg.lambdas[i], cfg.mus[i], ksig);
        WeightParams pp(spin3, cfg.lambdas[i], cfg.mus[i], ksig);
        Element us = diag_element(sym2, std::vector<double>{2.0, 1.0});
        Element up = sym2_to_spin3(us);
        HoloResult hs = holo_up_scalar(ps, ScalarFunction::constant(1.0), us,
                                       sym2.zero(), rs);
        HoloResult hp = holo_up_scalar(pp, ScalarFunction::constant(1.0), up,
                                       spin3.zero(), rp);
        const double budget =
            10.0 * std::max(hs.quad_error + hp.quad_error, 1e-12);
        worst = std::max(worst, std::abs(hs.value - hp.value) / budget);
        ++idx;
      }
    CheckRecord rec = make_residual_record(
        suite, "minktype-transport",
        "quadrature values agree across the isomorphism", "sym2/spin3", worst,
        tol_or(cfg, "cross-minktype", 1.0));
    rec.inputs = {{"cases", idx}};
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace detail

inline Report run(const VerifyConfig& cfg) {
  using SuiteFn = std::vector<CheckRecord> (*)(const VerifyConfig&);
  static const std::map<std::string, SuiteFn> dispatch = {
      {"jordan-identities", &detail::suite_jordan},
      {"geometry-identities", &detail::suite_geometry},
      {"gamma-integral", &detail::suite_gamma},
      {"beta-minktype", &detail::suite_beta_minktype},
      {"rank1-kp", &detail::suite_rank1_kp},
      {"rankin-cohen", &detail::suite_rankin_cohen},
      {"equivariance", &detail::suite_equivariance},
      {"cross-algebra", &detail::suite_cross_algebra}};

  std::vector<std::future<std::vector<CheckRecord>>> futures;
  for (const auto& name : cfg.suites) {
    auto it = dispatch.find(name);
    if (it == dispatch.end()) throw ConfigError("unknown suite: " + name);
    SuiteFn fn = it->second;
    futures.push_back(std::async(std::launch::async,
                                 [fn, &cfg]() { return fn(cfg); }));
  }
  Report report;
  report.seed = cfg.seed;
  for (auto& f : futures) {
    auto records = f.get();
    report.records.insert(report.records.end(),
                          std::make_move_iterator(records.begin()),
                          std::make_move_iterator(records.end()));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.suite != b.suite) return a.suite < b.suite;
                     if (a.algebra != b.algebra) return a.algebra < b.algebra;
                     return a.check < b.check;
                   });
  return report;
}

// ---------------------------------------------------------------------------
// convergence tables

struct TableRow {
  std::size_t size;
  double value;
  double err_est;
  double err_true;
};

inline std::vector<TableRow> convergence_table(const std::string& check_id,
                                               const std::vector<std::size_t>& sizes) {
  std::vector<TableRow> rows;
  auto one = ScalarFunction::constant(1.0);

  if (check_id == "rank1-beta") {
    const JordanAlgebra& alg = JordanAlgebra::rank1();
    // non-integer weights give a visible convergence curve before the floor
    const double lam = 2.6;
    WeightParams p(alg, lam, lam, Signature({0}));
    const double target =
        std::exp(2.0 * std::lgamma(lam) - std::lgamma(2.0 * lam));
    for (std::size_t n : sizes) {
      QuadratureRule rule = reference_rule(alg, Scheme::GaussJacobi1D, n);
      HoloResult r = holo_up_scalar(p, one, alg.unit(), alg.zero(), rule);
      rows.push_back({n, r.value.real(), r.quad_error,
                      std::abs(r.value.real() - target)});
    }
    return rows;
  }

  auto minktype_rows = [&](const JordanAlgebra& alg, Scheme scheme) {
    WeightParams p(alg, 3.0, 2.5, Signature({2, 1}));
    Element u = alg.kind() == AlgebraKind::Spin
                    ? sym2_to_spin3(diag_element(JordanAlgebra::sym_real(2),
                                                 std::vector<double>{2.0, 1.0}))
                    : diag_element(alg, std::vector<double>{2.0, 1.0});
    const double target = (beta_constant(p) * delta_k(u, p.k)).real();
    for (std::size_t n : sizes) {
      QuadratureRule rule = reference_rule(alg, scheme, n);
      HoloResult r = holo_up_scalar(p, one, u, alg.zero(), rule);
      rows.push_back({n, r.value.real(), r.quad_error,
                      std::abs(r.value.real() - target)});
    }
    return rows;
  };

  if (check_id == "sym2-minktype-eigen")
    return minktype_rows(JordanAlgebra::sym_real(2), Scheme::EigenAngle);
  if (check_id == "sym2-minktype-cartesian")
    return minktype_rows(JordanAlgebra::sym_real(2), Scheme::CartesianIndicator);
  if (check_id == "spin3-minktype-eigen")
    return minktype_rows(JordanAlgebra::spin(3), Scheme::EigenAngle);

  if (check_id == "sym2-gamma") {
    const JordanAlgebra& alg = JordanAlgebra::sym_real(2);
    const double lam = 3.0;
    Signature k({1, 0});
    const double target = gamma_r(alg, lam, k).real();
    for (std::size_t n : sizes) {
      QuadratureRule rule = cone_rule(alg, n, lam - 1.5);
      IntegrationResult r =
          integrate(rule, [&k](const Element& z) { return delta_k(z, k); });
      rows.push_back({n, r.value.real(), r.error_estimate,
                      std::abs(r.value.real() - target)});
    }
    return rows;
  }

  throw ConfigError("unknown check id: " + check_id);
}

inline std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "size,value,err_est,err_true\n";
  os.precision(15);
  for (const auto& r : rows)
    os << r.size << "," << r.value << "," << r.err_est << "," << r.err_true
       << "\n";
  return os.str();
}

}  // namespace symcone::verify
