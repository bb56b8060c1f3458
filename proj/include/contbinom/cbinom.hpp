#ifndef CONTBINOM_CBINOM_HPP
#define CONTBINOM_CBINOM_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "contbinom/quadrature.hpp"
#include "contbinom/scaled_value.hpp"
#include "contbinom/special.hpp"

namespace contbinom {

/// Validated argument pair for the continuous binomial coefficient.
struct BinomParams {
  double x;
  double s;

  BinomParams(double x_, double s_) : x(x_), s(s_) {
    if (!(x >= 0.0) || !(s >= 0.0) || !(s <= x))
      throw std::domain_error("BinomParams: requires 0 <= s <= x");
  }
};

/// Continuous binomial coefficient {x s} = 2 I0(2u) + x I1(2u)/u with
/// u = sqrt(s(x-s)), in scaled form. At the boundary s in {0, x} the limit is
/// x + 2.
inline ScaledValue cbinom_scaled(BinomParams params) {
  const double u2 = params.s * (params.x - params.s);
  if (u2 < 1e-24) {
    // I1(2u)/u = 1 + u^2/2 + O(u^4); two terms cover the boundary branch.
    return ScaledValue::from_double(2.0 * (1.0 + u2) + params.x * (1.0 + 0.5 * u2));
  }
  const double u = std::sqrt(u2);
  const ScaledValue i0 = bessel_i(0, 2.0 * u);
  const ScaledValue i1 = bessel_i(2, 2.0 * u);
  return i0 * 2.0 + i1 * (params.x / u);
}

inline double cbinom(BinomParams params) { return cbinom_scaled(params).to_double(); }
inline double cbinom(double x, double s) { return cbinom(BinomParams(x, s)); }

/// Closed form of int_0^x {x s} alpha^s e^{u s} ds.
inline double cbinom_exp_integral(double x, double alpha, double u) {
  if (!(x >= 0.0)) throw std::domain_error("cbinom_exp_integral: x must be >= 0");
  if (!(alpha > 0.0)) throw std::domain_error("cbinom_exp_integral: alpha must be > 0");
  if (x == 0.0) return 0.0;
  const double theta = u + std::log(alpha);
  const double r = std::sqrt(4.0 + theta * theta);
  const double pref = 2.0 * std::pow(alpha, 0.5 * x) * std::exp(0.5 * u * x);
  return pref * (std::cosh(0.5 * x * r) - std::cosh(0.5 * x * theta) +
                 (2.0 / r) * std::sinh(0.5 * x * r));
}

/// Central coefficient {2s s} = 2 I0(2s) + 2 I1(2s).
inline ScaledValue central_binomial_scaled(double s) {
  if (!(s >= 0.0)) throw std::domain_error("central_binomial: s must be >= 0");
  return (bessel_i(0, 2.0 * s) + bessel_i(2, 2.0 * s)) * 2.0;
}

inline double central_binomial(double s) { return central_binomial_scaled(s).to_double(); }

/// Normalized asymptotic ratio (1/2) e^{-2s} {2s s} sqrt(pi s); tends to 1
/// from below as s grows.
inline double central_binomial_asymptotic_ratio(double s) {
  const ScaledValue cb = central_binomial_scaled(s);
  return 0.5 * cb.scaled_by_exp(-2.0 * s).to_double() * std::sqrt(M_PI * s);
}

/// Point mass at 0 plus a continuous part sampled on a uniform grid; the
/// computable stand-in for "delta + f" objects.
struct AtomDensity {
  double atom = 0.0;
  double grid_step = 1e-3;
  std::vector<double> samples;  // f(k * grid_step), k = 0..N

  double support_length() const { return grid_step * (samples.size() - 1); }
};

/// Builds delta + {2s s} sampled on [0, support].
inline AtomDensity central_binomial_atom_density(double support, double step) {
  AtomDensity d;
  d.atom = 1.0;
  d.grid_step = step;
  const auto n = static_cast<std::size_t>(std::llround(support / step));
  d.samples.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) d.samples[k] = central_binomial(k * step);
  return d;
}

/// Convolution over the atom+density algebra: atoms multiply, the atom of one
/// side copies the other side's continuous part, and the continuous parts are
/// convolved by the trapezoid rule on the common grid.
inline AtomDensity convolve_atom_density(const AtomDensity& f, const AtomDensity& g) {
  if (f.grid_step != g.grid_step || f.samples.size() != g.samples.size())
    throw std::invalid_argument("convolve_atom_density: mismatched grids");
  const std::size_t n = f.samples.size();
  const double h = f.grid_step;

  AtomDensity out;
  out.atom = f.atom * g.atom;
  out.grid_step = h;
  out.samples.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double conv = 0.0;
    if (k >= 1) {
      conv = 0.5 * (f.samples[0] * g.samples[k] + f.samples[k] * g.samples[0]);
      for (std::size_t j = 1; j < k; ++j) conv += f.samples[j] * g.samples[k - j];
      conv *= h;
    }
    out.samples[k] = f.atom * g.samples[k] + g.atom * f.samples[k] + conv;
  }
  return out;
}

/// Residual of the differential Chu-Vandermonde identity:
///   f_{s1} * f_{s2} + f_{s1} + f_{s2} = (1 + d/ds)^2 {x+s s} at s = s1+s2,
/// with f_s(w) = {w+s s}. The s-derivatives use O(h^2) central differences
/// (one-sided near the s = 0 boundary, where {x+s s} has no left extension).
inline double chu_vandermonde_residual(double x, double s1, double s2, double h) {
  if (!(x > 0.0) || !(s1 >= 0.0) || !(s2 >= 0.0) || !(h > 0.0))
    throw std::domain_error("chu_vandermonde_residual: invalid arguments");
  const double sbar = s1 + s2;

  auto f = [](double s) { return [s](double w) { return cbinom(w + s, s); }; };
  QuadratureSpec spec;
  const double lhs = convolve_at(f(s1), f(s2), x, spec) + cbinom(x + s1, s1) + cbinom(x + s2, s2);

  auto g = [x](double s) { return cbinom(x + s, s); };
  double d1, d2;
  if (sbar >= 2.0 * h) {
    d1 = central_diff(g, sbar, 1, h);
    d2 = central_diff(g, sbar, 2, h);
  } else {
    d1 = (g(sbar + h) - g(sbar)) / h;
    d2 = (g(sbar + 2.0 * h) - 2.0 * g(sbar + h) + g(sbar)) / (h * h);
  }
  const double rhs = g(sbar) + 2.0 * d1 + d2;
  return lhs - rhs;
}

/// Max pointwise relative deviation of ({2s s} + delta)^{*2n} from
/// 4 e^{2s} L_{n-1}^{(1)}(-4s) + delta, measured on the inner half of the
/// grid support (the outer half carries truncation error).
inline double laguerre_convolution_check(int n, double support, double step) {
  if (n < 1 || n > 3) throw std::domain_error("laguerre_convolution_check: n must be in {1,2,3}");
  const AtomDensity base = central_binomial_atom_density(support, step);
  AtomDensity acc = base;
  for (int i = 0; i < 2 * n - 1; ++i) acc = convolve_atom_density(acc, base);

  double worst = 0.0;
  const auto limit = static_cast<std::size_t>(std::llround(0.5 * support / step));
  for (std::size_t k = 0; k <= limit && k < acc.samples.size(); ++k) {
    const double s = k * step;
    const double target = 4.0 * std::exp(2.0 * s) * laguerre_assoc(n - 1, 1, -4.0 * s);
    worst = std::max(worst, std::fabs(acc.samples[k] - target) / std::fabs(target));
  }
  return worst;
}

}  // namespace contbinom

#endif  // CONTBINOM_CBINOM_HPP
