#ifndef CONTBINOM_TELEGRAPH_HPP
#define CONTBINOM_TELEGRAPH_HPP

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "contbinom/distribution.hpp"
#include "contbinom/quadrature.hpp"
#include "contbinom/special.hpp"

namespace contbinom {

struct TelegraphConfig {
  double c;       // speed
  double lambda;  // Poisson switching rate
  double t;       // time horizon
  std::int64_t seed = 0;

  void validate() const {
    if (!(c > 0.0) || !(lambda > 0.0) || !(t > 0.0))
      throw std::domain_error("TelegraphConfig: c, lambda, t must be positive");
  }
};

enum class TelegraphKind { AtomPlus, AtomMinus, Continuous };

struct TelegraphSample {
  TelegraphKind kind;
  double position;
  std::uint32_t switch_count;
};

/// Simulates `count` independent telegraph paths. Sample i draws from a
/// substream keyed on (seed, i), so results are reproducible regardless of
/// iteration order. If switch_times is non-null, the Poisson event times of
/// each path are recorded (one row per path).
inline std::vector<TelegraphSample> simulate(const TelegraphConfig& config, std::size_t count,
                                             std::vector<std::vector<double>>* switch_times = nullptr) {
  config.validate();
  if (count == 0) throw std::domain_error("simulate: count must be >= 1");
  std::vector<TelegraphSample> out;
  out.reserve(count);
  if (switch_times) switch_times->assign(count, {});

  for (std::size_t i = 0; i < count; ++i) {
    // Substream: decorrelate (seed, i) before use; splitmix64 then advances it.
    std::uint64_t state = static_cast<std::uint64_t>(config.seed) + 0x632be59bd9b4e019ull * (i + 1);
    double sign = (detail::splitmix64_next(state) & 1u) ? 1.0 : -1.0;

    double elapsed = 0.0;
    double position = 0.0;
    std::uint32_t switches = 0;
    while (true) {
      const double wait = -std::log(detail::uniform_open01(state)) / config.lambda;
      if (elapsed + wait >= config.t) {
        position += sign * config.c * (config.t - elapsed);
        break;
      }
      elapsed += wait;
      position += sign * config.c * wait;
      sign = -sign;
      ++switches;
      if (switch_times) (*switch_times)[i].push_back(elapsed);
    }

    TelegraphKind kind = TelegraphKind::Continuous;
    if (switches == 0) kind = sign > 0.0 ? TelegraphKind::AtomPlus : TelegraphKind::AtomMinus;
    out.push_back({kind, position, switches});
  }
  return out;
}

/// Continuous part of the telegraph law at position s, |s| < ct. The atoms at
/// +-ct each carry mass e^{-lambda t}/2 and are handled separately.
inline double density(const TelegraphConfig& config, double s) {
  config.validate();
  const double ct = config.c * config.t;
  if (!(std::fabs(s) < ct)) throw std::domain_error("density: requires |s| < c*t");
  const double w = std::sqrt(ct * ct - s * s);
  const double xi = config.lambda / config.c * w;
  const double damp = -config.lambda * config.t;
  const double i0 = bessel_i(0, xi).scaled_by_exp(damp).to_double();
  const double i1 = bessel_i(2, xi).scaled_by_exp(damp).to_double();
  return (config.lambda * i0 +
          (config.lambda / config.c) * (config.t * config.c * config.c / w) * i1) /
         (2.0 * config.c);
}

/// Residual of c^2 p_ss = p_tt + 2 lambda p_t at (s, t_probe), all derivatives
/// by O(h^2) central differences.
inline double pde_residual(const TelegraphConfig& config, double s, double t_probe, double h) {
  config.validate();
  if (!(t_probe > 0.0) || !(h > 0.0)) throw std::domain_error("pde_residual: invalid probe");
  if (!(std::fabs(s) < config.c * t_probe - 4.0 * h * config.c))
    throw std::domain_error("pde_residual: probe too close to the light cone");

  auto p = [&](double pos, double time) {
    TelegraphConfig probe = config;
    probe.t = time;
    return density(probe, pos);
  };
  const double p_ss = central_diff([&](double v) { return p(v, t_probe); }, s, 2, h);
  const double p_tt = central_diff([&](double v) { return p(s, v); }, t_probe, 2, h);
  const double p_t = central_diff([&](double v) { return p(s, v); }, t_probe, 1, h);
  return config.c * config.c * p_ss - p_tt - 2.0 * config.lambda * p_t;
}

/// Chi-squared statistic of the continuous-part sample histogram against the
/// exact bin masses, conditioned on switch_count > 0. Bins whose expected
/// count falls below 5 are folded into their inner neighbor.
inline double histogram_gof(const TelegraphConfig& config, std::size_t count, std::size_t bins) {
  config.validate();
  if (count < 100000) throw std::domain_error("histogram_gof: count must be >= 1e5");
  if (bins < 2) throw std::domain_error("histogram_gof: need at least 2 bins");

  const double ct = config.c * config.t;
  const auto samples = simulate(config, count);

  std::vector<double> observed(bins, 0.0);
  std::size_t n_cont = 0;
  for (const auto& sm : samples) {
    if (sm.kind != TelegraphKind::Continuous) continue;
    ++n_cont;
    auto bin = static_cast<std::size_t>((sm.position + ct) / (2.0 * ct) * bins);
    if (bin >= bins) bin = bins - 1;
    observed[bin] += 1.0;
  }

  const double cont_mass = -std::expm1(-config.lambda * config.t);
  std::vector<double> expected(bins, 0.0);
  const double h = 2.0 * ct / bins;
  for (std::size_t j = 0; j < bins; ++j) {
    QuadratureSpec spec;
    spec.abs_tol = spec.rel_tol = 1e-10;
    // The 1/sqrt(c^2 t^2 - s^2) factor makes the outermost bins singular.
    spec.singular_left = (j == 0);
    spec.singular_right = (j == bins - 1);
    const double mass =
        integrate([&](double s) { return density(config, s); }, -ct + j * h, -ct + (j + 1) * h, spec)
            .value;
    expected[j] = n_cont * mass / cont_mass;
  }

  // Fold sparse bins inward, then accumulate the statistic.
  double chi2 = 0.0;
  double obs_acc = 0.0, exp_acc = 0.0;
  for (std::size_t j = 0; j < bins; ++j) {
    obs_acc += observed[j];
    exp_acc += expected[j];
    if (exp_acc >= 5.0 || j == bins - 1) {
      if (exp_acc > 0.0) chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
      obs_acc = exp_acc = 0.0;
    }
  }
  return chi2;
}

inline const char* to_string(TelegraphKind kind) {
  switch (kind) {
    case TelegraphKind::AtomPlus: return "atom_plus";
    case TelegraphKind::AtomMinus: return "atom_minus";
    default: return "continuous";
  }
}

}  // namespace contbinom

#endif  // CONTBINOM_TELEGRAPH_HPP
