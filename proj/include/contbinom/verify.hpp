#ifndef CONTBINOM_VERIFY_HPP
#define CONTBINOM_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contbinom/catalan.hpp"
#include "contbinom/cbinom.hpp"
#include "contbinom/discrete.hpp"
#include "contbinom/distribution.hpp"
#include "contbinom/quadrature.hpp"
#include "contbinom/special.hpp"
#include "contbinom/telegraph.hpp"

namespace contbinom {

struct IdentityReport {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
};

struct IdentityCheck {
  std::string name;
  double tolerance;
  std::function<double()> residual;
};

namespace detail {

inline double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

// Laplace tail for w -> {s+w s}: the coefficient grows like e^{2 sqrt(sw)}
// <= e^{(p/2) w + 2s/p}, so e^{-pw} times it decays like e^{-pw/2} and a cut
// at 60/p leaves a bias far below 1e-9.
inline double cbinom_laplace_tail(double p) { return 60.0 / p + 10.0; }

inline double telegraph_total_mass_residual(const TelegraphConfig& cfg) {
  QuadratureSpec spec;
  spec.singular_left = spec.singular_right = true;
  const double ct = cfg.c * cfg.t;
  const double cont = integrate([&](double s) { return density(cfg, s); }, -ct, ct, spec).value;
  return std::exp(-cfg.lambda * cfg.t) + cont - 1.0;
}

inline std::vector<IdentityCheck> build_checks() {
  std::vector<IdentityCheck> checks;
  auto add = [&](std::string name, double tol, std::function<double()> fn) {
    checks.push_back({std::move(name), tol, std::move(fn)});
  };

  // --- special functions -------------------------------------------------
  add("bessel_recurrence", 1e-10, [] {
    double worst = 0.0;
    for (int twice_nu : {1, 2, 3}) {
      for (double z = 0.1; z <= 100.0; z *= 1.7) {
        const double nu = 0.5 * twice_nu;
        const double lo = bessel_i(twice_nu - 2, z).to_double();
        const double hi = bessel_i(twice_nu + 2, z).to_double();
        const double mid = bessel_i(twice_nu, z).to_double();
        worst = std::max(worst, std::fabs(lo - hi - 2.0 * nu / z * mid) / lo);
      }
    }
    return worst;
  });
  add("bessel_i0_i2_identity", 1e-12, [] {
    double worst = 0.0;
    for (double z = 1e-2; z <= 200.0; z *= 1.9) {
      const ScaledValue diff = bessel_i(0, z) - bessel_i(4, z);
      const ScaledValue rhs = bessel_i(2, z) * (2.0 / z);
      worst = std::max(worst, std::fabs((diff - rhs).to_double() / rhs.to_double()));
    }
    return worst;
  });
  add("bessel_monotonicity", 0.0, [] {
    double worst = 0.0;
    for (int twice_nu : {0, 1, 2, 4}) {
      double prev = -1e308;
      for (double z = 0.25; z <= 800.0; z *= 1.31) {
        const double cur = bessel_i(twice_nu, z).log_abs();
        worst = std::max(worst, prev - cur);
        prev = cur;
      }
    }
    return std::max(worst, 0.0);
  });
  add("bessel_asymptotic", 1e-3, [] {
    const double z = 1e4;
    double worst = 0.0;
    for (int twice_nu : {0, 2, 4}) {
      const double ratio =
          bessel_i(twice_nu, z).scaled_by_exp(-z).to_double() * std::sqrt(2.0 * M_PI * z);
      worst = std::max(worst, std::fabs(ratio - 1.0));
    }
    return worst;
  });

  // --- quadrature plumbing -------------------------------------------------
  add("quad_linearity", 1e-9, [] {
    auto f = [](double x) { return std::sin(x); };
    auto g = [](double x) { return std::exp(-x); };
    const double alpha = 2.5, beta = -1.3;
    const double combined =
        integrate([&](double x) { return alpha * f(x) + beta * g(x); }, 0.0, 3.0).value;
    return combined - alpha * integrate(f, 0.0, 3.0).value - beta * integrate(g, 0.0, 3.0).value;
  });
  add("quad_convolution_symmetry", 1e-9, [] {
    auto f = [](double x) { return std::exp(x); };
    auto g = [](double x) { return std::cos(x); };
    return convolve_at(f, g, 2.0) - convolve_at(g, f, 2.0);
  });
  add("quad_interval_additivity", 1e-9, [] {
    auto f = [](double x) { return std::sin(x); };
    return integrate(f, 0.0, M_PI).value -
           (integrate(f, 0.0, 1.0).value + integrate(f, 1.0, M_PI).value);
  });

  // --- continuous binomial coefficients ------------------------------------
  add("cbinom_total_integral", 1e-9, [] {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-12;
    double worst = 0.0;
    for (double x : {0.5, 1.0, 5.0, 20.0}) {
      const double integral = integrate([x](double s) { return cbinom(x, s); }, 0.0, x, spec).value;
      worst = std::max(worst, rel_diff(integral, 2.0 * std::expm1(x)));
    }
    return worst;
  });
  add("cbinom_laplace_identity", 1e-6, [] {
    double worst = 0.0;
    for (double s : {0.5, 1.0, 2.0}) {
      for (double p : {1.5, 2.0, 3.0}) {
        const double numeric = laplace_numeric([s](double w) { return cbinom(s + w, s); }, p,
                                               cbinom_laplace_tail(p));
        const double closed = std::exp(s / p) * std::pow((p + 1.0) / p, 2.0) - 1.0;
        worst = std::max(worst, std::fabs(numeric - closed));
      }
    }
    return worst;
  });
  add("cbinom_symmetry", 0.0, [] { return cbinom(2.4, 0.7) - cbinom(2.4, 2.4 - 0.7); });
  add("cbinom_pde_mixed", 1e-4, [] {
    const double h = 1e-3;
    auto f = [](double u, double sbar) { return cbinom(u + sbar, u); };
    double worst = 0.0;
    for (double u : {0.5, 1.0, 2.0}) {
      for (double sbar : {0.5, 1.0, 2.0}) {
        const double mixed = (f(u + h, sbar + h) - f(u + h, sbar - h) - f(u - h, sbar + h) +
                              f(u - h, sbar - h)) /
                             (4.0 * h * h);
        worst = std::max(worst, std::fabs(mixed - f(u, sbar)));
      }
    }
    return worst;
  });
  add("chu_vandermonde_identity", 1e-5, [] {
    const double h = 1e-3;
    double worst = 0.0;
    worst = std::max(worst, std::fabs(chu_vandermonde_residual(1.0, 0.5, 0.5, h)));
    worst = std::max(worst, std::fabs(chu_vandermonde_residual(0.5, 0.2, 0.8, h)));
    worst = std::max(worst, std::fabs(chu_vandermonde_residual(1.5, 0.4, 0.6, h)));
    return worst;
  });
  add("chu_vandermonde_rebalancing", 1e-4, [] {
    // Thm: (delta + f_{s1}) * (delta + f_{s2}) depends on s1+s2 only.
    const double s1 = 0.4, s2 = 1.2, mid = 0.5 * (s1 + s2);
    const double support = 4.0, step = 1e-3;
    auto grid = [&](double s) {
      AtomDensity d;
      d.atom = 1.0;
      d.grid_step = step;
      const auto n = static_cast<std::size_t>(std::llround(support / step));
      d.samples.resize(n + 1);
      for (std::size_t k = 0; k <= n; ++k) d.samples[k] = cbinom(k * step + s, s);
      return d;
    };
    const AtomDensity lhs = convolve_atom_density(grid(s1), grid(s2));
    const AtomDensity rhs = convolve_atom_density(grid(mid), grid(mid));
    double worst = 0.0;
    for (std::size_t k = 0; k < lhs.samples.size() / 2; ++k)
      worst = std::max(worst, std::fabs(lhs.samples[k] - rhs.samples[k]) /
                                  std::max(1.0, std::fabs(rhs.samples[k])));
    return worst;
  });
  add("central_binomial_convolution", 1e-3,
      [] { return laguerre_convolution_check(1, 8.0, 1e-3); });
  add("laguerre_convolution_n2", 5e-3, [] { return laguerre_convolution_check(2, 8.0, 1e-3); });
  add("central_binomial_laplace", 1e-6, [] {
    double worst = 0.0;
    for (double p : {3.0, 4.0, 6.0}) {
      const double numeric =
          laplace_numeric([](double s) { return central_binomial(s); }, p, 40.0 / (p - 2.0)) + 1.0;
      worst = std::max(worst, std::fabs(numeric - std::sqrt((p + 2.0) / (p - 2.0))));
    }
    return worst;
  });
  add("cbinom_asymptotic", 0.005,
      [] { return central_binomial_asymptotic_ratio(100.0) - 0.995; });
  add("cbinom_exp_integral_quadrature", 1e-9, [] {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-12;
    double worst = std::fabs(cbinom_exp_integral(1.0, 1.0, 0.0) - 2.0 * std::expm1(1.0));
    const double quad = integrate(
        [](double s) { return cbinom(1.0, s) * std::pow(2.0, s) * std::exp(0.3 * s); }, 0.0, 1.0,
        spec).value;
    return std::max(worst, std::fabs(cbinom_exp_integral(1.0, 2.0, 0.3) - quad));
  });

  // --- continuous Catalan numbers -------------------------------------------
  add("catalan_bessel_reduction", 1e-12, [] {
    double worst = 0.0;
    for (double x = 0.05; x <= 50.0; x *= 1.8) {
      const double rhs = (bessel_i(2, x) * (2.0 / x)).to_double();
      worst = std::max(worst, rel_diff(catalan(x, 0.0), rhs));
    }
    return worst;
  });
  add("catalan_volume_series", 1e-10, [] {
    const CatalanPoint pts[] = {{0.5, 0.2}, {1.0, 0.0}, {2.0, 1.0}, {3.5, 1.5}, {5.0, 0.0}};
    double worst = 0.0;
    for (const auto& pt : pts) {
      double series = 0.0;
      for (int n = 40; n >= 0; --n) series += polytope_volume(n, pt);
      worst = std::max(worst, std::fabs(catalan(pt) - series));
    }
    return worst;
  });
  add("catalan_monotonicity", 0.0, [] {
    double worst = 0.0;
    for (double y : {0.0, 0.5}) {
      double prev = 0.0;
      for (double x = y; x <= 12.0; x += 0.5) {
        const double cur = catalan(std::max(x, y), y);
        worst = std::max(worst, prev - cur);
        prev = cur;
      }
    }
    return std::max(worst, 0.0);
  });
  add("catalan_schlafli_representation", 1e-9, [] {
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 3.0, 5.0}) {
      for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const CatalanPoint pt(x, frac * x);
        worst = std::max(worst, std::fabs(schlafli_catalan(pt) - catalan(pt)));
      }
    }
    return worst;
  });
  add("catalan_laplace_quadrature", 1e-6, [] {
    double worst = 0.0;
    for (double p : {1.5, 2.0, 3.0}) {
      const double numeric =
          laplace_numeric([](double x) { return catalan(x, 0.0); }, p, 40.0 / (p - 1.0));
      worst = std::max(worst, std::fabs(numeric - catalan_laplace(p)));
    }
    return worst;
  });
  add("volume_recurrence", 1e-9, [] {
    double worst = std::fabs(volume_recurrence_residual(0, CatalanPoint(2.0, 0.5)));
    worst = std::max(worst, std::fabs(volume_recurrence_residual(1, CatalanPoint(1.0, 0.0))));
    worst = std::max(worst, std::fabs(volume_recurrence_residual(0, CatalanPoint(1.0, 1.0))));
    return worst;
  });
  add("catalan_recursion", 1e-8, [] {
    double worst = std::fabs(catalan_recursion_residual(CatalanPoint(1.0, 0.0)));
    worst = std::max(worst, std::fabs(catalan_recursion_residual(CatalanPoint(2.0, 1.0))));
    worst = std::max(worst, std::fabs(catalan_recursion_residual(CatalanPoint(1.5, 1.5))));
    return worst;
  });
  add("catalan_convolution", 1e-8, [] {
    double worst = 0.0;
    for (double z : {0.5, 1.0, 4.0})
      worst = std::max(worst, std::fabs(catalan_convolution_residual(z)));
    return worst;
  });
  add("semicircle_mgf", 1e-9, [] {
    double worst = 0.0;
    for (double x : {0.0, 2.0, 5.0})
      worst = std::max(worst, std::fabs(semicircle_mgf(x) - catalan(x, 0.0)));
    return worst;
  });
  add("catalan_gf_bridge_closed_form", 1e-6, [] {
    double worst = 0.0;
    for (double x : {0.05, 0.1, 0.2}) {
      const double closed = 2.0 / (1.0 + std::sqrt(1.0 - 4.0 * x));
      worst = std::max(worst, std::fabs(catalan_gf_bridge(x) - closed));
    }
    return worst;
  });
  add("iphi_laplace_transform", 1e-5, [] {
    const double a = std::fabs(iphi_laplace_check(IphiKernel::ExponentialUnit, 2.0));
    const double b = std::fabs(iphi_laplace_check(IphiKernel::Indicator, 3.0));
    return std::max(a, b);
  });

  // --- continuous binomial distribution -------------------------------------
  add("dist_normalization_quadrature", 1e-9, [] {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-12;
    double worst = 0.0;
    for (double x : {0.5, 2.0, 10.0}) {
      for (double p : {0.1, 0.5, 0.9}) {
        const double quad = integrate(
            [&](double s) {
              return cbinom(x, s) * std::pow(p, s) * std::pow(1.0 - p, x - s);
            }, 0.0, x, spec).value;
        worst = std::max(worst, rel_diff(normalization(x, p), quad));
      }
    }
    return worst;
  });
  add("dist_pdf_normalized", 1e-9, [] {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-12;
    double worst = 0.0;
    for (double x : {0.5, 2.0, 10.0}) {
      for (double p : {0.1, 0.5, 0.9}) {
        const ContinuousBinomial dist(x, p);
        const double total = integrate([&](double s) { return dist.pdf(s); }, 0.0, x, spec).value;
        worst = std::max(worst, std::fabs(total - 1.0));
      }
    }
    return worst;
  });
  add("dist_normalization_symmetry", 1e-12,
      [] { return rel_diff(normalization(1.7, 0.25), normalization(1.7, 0.75)); });
  add("dist_mgf_quadrature", 1e-8, [] {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-12;
    const ContinuousBinomial dist(2.0, 0.3);
    const double quad =
        integrate([&](double s) { return std::exp(0.5 * s) * dist.pdf(s); }, 0.0, 2.0, spec).value;
    return dist.mgf(0.5) - quad;
  });
  add("dist_mgf_shift", 1e-12, [] {
    const double x = 1.5, z = 0.2, l = std::log(0.3 / 0.7);
    const double lhs = detail::binomial_phi(x, z + l).to_double();
    const double rhs = detail::binomial_phi(x, (z + l) + std::log(0.5 / 0.5)).to_double();
    return rel_diff(lhs, rhs);
  });
  add("dist_moments_symmetric", 1e-8, [] {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-12;
    const double x = 2.0;
    const ContinuousBinomial dist(x, 0.5);
    double worst = 0.0;
    for (int k : {0, 2, 4}) {
      const double quad = integrate(
          [&](double s) { return std::pow(s - 0.5 * x, k) * dist.pdf(s); }, 0.0, x, spec).value;
      worst = std::max(worst, std::fabs(moment_symmetric(x, k) - quad));
    }
    return worst;
  });
  add("dist_odd_moments_vanish", 1e-9, [] {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-12;
    const double x = 2.0;
    const ContinuousBinomial dist(x, 0.5);
    double worst = 0.0;
    for (int k : {1, 3}) {
      const double quad = integrate(
          [&](double s) { return std::pow(s - 0.5 * x, k) * dist.pdf(s); }, 0.0, x, spec).value;
      worst = std::max(worst, std::fabs(quad));
      if (moment_symmetric(x, k) != 0.0) worst = std::max(worst, 1.0);
    }
    return worst;
  });
  add("dist_quantile_inverts_cdf", 1e-9, [] {
    const ContinuousBinomial dist(2.0, 0.3);
    double worst = 0.0;
    for (double q : {0.01, 0.5, 0.99})
      worst = std::max(worst, std::fabs(dist.cdf(dist.quantile(q)) - q));
    return worst;
  });
  add("dist_mgf_moment_consistency", 1e-5, [] {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-12;
    const ContinuousBinomial dist(2.0, 0.3);
    const double h = 1e-3;
    auto m = [&](double u) { return dist.mgf(u); };
    const double m1 = central_diff(m, 0.0, 1, h);
    const double m2 = central_diff(m, 0.0, 2, h);
    const double mean =
        integrate([&](double s) { return s * dist.pdf(s); }, 0.0, 2.0, spec).value;
    const double second =
        integrate([&](double s) { return s * s * dist.pdf(s); }, 0.0, 2.0, spec).value;
    return (m2 - m1 * m1) - (second - mean * mean);
  });

  // --- telegraph process -----------------------------------------------------
  add("telegraph_conservation", 1e-8, [] {
    double worst = std::fabs(telegraph_total_mass_residual({1.0, 1.0, 1.0, 0}));
    worst = std::max(worst, std::fabs(telegraph_total_mass_residual({1.0, 2.0, 1.0, 0})));
    worst = std::max(worst, std::fabs(telegraph_total_mass_residual({2.0, 1.3, 3.0, 0})));
    return worst;
  });
  add("telegraph_bridge_identity", 1e-12, [] {
    // ct = x/2, lambda = 2c: p(s,t) = (e^{-x}/2) {x, x/2 + s}.
    const double x = 2.0;
    const TelegraphConfig cfg{1.0, 2.0, 1.0, 0};
    double worst = 0.0;
    for (int i = -5; i <= 4; ++i) {
      const double s = 0.19 * i + 0.05;
      const double lhs = density(cfg, s);
      const double rhs =
          cbinom_scaled(BinomParams(x, 0.5 * x + s)).scaled_by_exp(-x).to_double() * 0.5;
      worst = std::max(worst, rel_diff(lhs, rhs));
    }
    return worst;
  });
  add("telegraph_pde_residual", 1e-4, [] {
    const TelegraphConfig cfg{1.0, 2.0, 1.0, 0};
    const double h = 1e-3;
    return std::max(std::fabs(pde_residual(cfg, 0.2, 1.0, h)),
                    std::fabs(pde_residual(cfg, 0.0, 1.0, h)));
  });
  add("telegraph_pde_order", 0.5, [] {
    const TelegraphConfig cfg{1.0, 2.0, 1.0, 0};
    const double r1 = pde_residual(cfg, 0.2, 1.0, 2e-3);
    const double r2 = pde_residual(cfg, 0.2, 1.0, 1e-3);
    return r1 / r2 - 4.0;
  });
  add("telegraph_atom_fraction", 3.0, [] {
    const TelegraphConfig cfg{1.0, 2.0, 2.0, 12345};
    const std::size_t n = 1000000;
    const auto samples = simulate(cfg, n);
    std::size_t atoms = 0;
    for (const auto& s : samples)
      if (s.kind != TelegraphKind::Continuous) ++atoms;
    const double expected = std::exp(-cfg.lambda * cfg.t);
    const double se = std::sqrt(expected * (1.0 - expected) / n);
    return (static_cast<double>(atoms) / n - expected) / se;
  });
  add("telegraph_atom_split", 3.0, [] {
    const TelegraphConfig cfg{1.0, 1.0, 1.0, 777};
    const std::size_t n = 200000;
    const auto samples = simulate(cfg, n);
    std::size_t plus = 0, total = 0;
    for (const auto& s : samples) {
      if (s.kind == TelegraphKind::Continuous) continue;
      ++total;
      if (s.kind == TelegraphKind::AtomPlus) ++plus;
    }
    const double se = std::sqrt(0.25 / total);
    return (static_cast<double>(plus) / total - 0.5) / se;
  });
  add("telegraph_mean_position", 3.0, [] {
    const TelegraphConfig cfg{1.0, 2.0, 1.0, 99};
    const std::size_t n = 500000;
    const auto samples = simulate(cfg, n);
    double sum = 0.0, sumsq = 0.0;
    for (const auto& s : samples) {
      sum += s.position;
      sumsq += s.position * s.position;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sumsq / n - mean * mean);
    return mean / (sd / std::sqrt(static_cast<double>(n)));
  });
  add("telegraph_gof_chi2", 72.0546629519878, [] {
    // tolerance = 0.999 quantile of chi^2(39)
    const TelegraphConfig cfg{1.0, 2.0, 1.0, 2024};
    return histogram_gof(cfg, 1000000, 40);
  });
  add("telegraph_determinism", 0.0, [] {
    const TelegraphConfig cfg{1.0, 1.3, 2.0, 4242};
    const auto a = simulate(cfg, 2000);
    const auto b = simulate(cfg, 2000);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, std::fabs(a[i].position - b[i].position));
      if (a[i].kind != b[i].kind || a[i].switch_count != b[i].switch_count) worst = 1.0;
    }
    return worst;
  });

  // --- discrete bridge -------------------------------------------------------
  add("discrete_chu_vandermonde", 0.0, [] {
    for (int k1 = 0; k1 <= 6; ++k1)
      for (int k2 = 0; k2 <= 6; ++k2)
        for (int n = 1; n <= 12; ++n) {
          const std::int64_t lhs =
              star_convolve(k1, k2, n) + binomial(n + k1, k1) + binomial(n + k2, k2);
          if (lhs != binomial(n + k1 + k2 + 1, k1 + k2 + 1)) return 1.0;
        }
    return 0.0;
  });
  add("discrete_catalan_convolution", 0.0, [] {
    for (int n = 1; n <= 15; ++n) {
      std::int64_t conv = 0;
      for (int k = 0; k <= n - 1; ++k) conv += discrete_catalan(k) * discrete_catalan(n - k);
      if (conv != discrete_catalan(n + 1) - discrete_catalan(n)) return 1.0;
    }
    return 0.0;
  });
  add("discrete_central_convolution", 0.0, [] {
    std::int64_t pow4 = 1;
    for (int n = 0; n <= 10; ++n) {
      if (central_convolution(n) != pow4) return 1.0;
      pow4 *= 4;
    }
    return 0.0;
  });
  add("catalan_moment_quadrature", 1e-7, [] {
    double worst = 0.0;
    for (int n : {0, 2, 5}) worst = std::max(worst, std::fabs(catalan_moment_check(n)));
    return worst;
  });
  add("catalan_gf_bridge_series", 1e-6, [] {
    double worst = 0.0;
    // 26 terms leave a < 1e-12 tail for 4x <= 0.4
    for (double x : {0.02, 0.05, 0.1}) {
      double series = 0.0, xn = 1.0;
      for (int n = 0; n <= 25; ++n, xn *= x) series += discrete_catalan(n) * xn;
      worst = std::max(worst, std::fabs(catalan_gf_bridge(x) - series));
    }
    return worst;
  });

  return checks;
}

}  // namespace detail

inline const std::vector<IdentityCheck>& all_checks() {
  static const std::vector<IdentityCheck> checks = detail::build_checks();
  return checks;
}

/// Runs the named checks ("all" or an empty selection runs everything).
/// Unknown names raise std::invalid_argument. Reports come back sorted by
/// name.
inline std::vector<IdentityReport> run_verification_suite(std::vector<std::string> selection) {
  const auto& registry = all_checks();
  std::vector<const IdentityCheck*> todo;
  if (selection.empty() || (selection.size() == 1 && selection[0] == "all")) {
    for (const auto& c : registry) todo.push_back(&c);
  } else {
    for (const auto& name : selection) {
      const IdentityCheck* found = nullptr;
      for (const auto& c : registry)
        if (c.name == name) found = &c;
      if (!found) throw std::invalid_argument("unknown verification check: " + name);
      todo.push_back(found);
    }
  }

  std::vector<IdentityReport> reports;
  reports.reserve(todo.size());
  for (const IdentityCheck* check : todo) {
    const auto start = std::chrono::steady_clock::now();
    const double residual = check->residual();
    const auto stop = std::chrono::steady_clock::now();
    IdentityReport r;
    r.name = check->name;
    r.residual = residual;
    r.tolerance = check->tolerance;
    r.passed = std::fabs(residual) <= check->tolerance;
    r.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    reports.push_back(std::move(r));
  }
  std::sort(reports.begin(), reports.end(),
            [](const IdentityReport& a, const IdentityReport& b) { return a.name < b.name; });
  return reports;
}

inline void write_reports_text(std::ostream& os, const std::vector<IdentityReport>& reports) {
  std::size_t width = 4;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  char line[256];
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-*s  %s  residual=%-12.4g tol=%-10.4g %8.1f ms\n",
                  static_cast<int>(width), r.name.c_str(), r.passed ? "PASS" : "FAIL", r.residual,
                  r.tolerance, r.runtime_ms);
    os << line;
  }
}

inline void write_reports_jsonl(std::ostream& os, const std::vector<IdentityReport>& reports) {
  char line[512];
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line,
                  "{\"name\":\"%s\",\"residual\":%.17g,\"tolerance\":%.17g,"
                  "\"passed\":%s,\"runtime_ms\":%.3f}\n",
                  r.name.c_str(), r.residual, r.tolerance, r.passed ? "true" : "false",
                  r.runtime_ms);
    os << line;
  }
}

}  // namespace contbinom

#endif  // CONTBINOM_VERIFY_HPP
