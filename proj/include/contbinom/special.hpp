#ifndef CONTBINOM_SPECIAL_HPP
#define CONTBINOM_SPECIAL_HPP

#include <cmath>
#include <stdexcept>

#include "contbinom/scaled_value.hpp"

namespace contbinom {

/// Bessel order nu = twice_nu / 2. Integer and half-integer orders only;
/// nu = -1/2 is the smallest order needed (moments of the symmetric
/// distribution).
struct BesselOrder {
  int twice_nu;

  explicit BesselOrder(int twice_nu_) : twice_nu(twice_nu_) {
    if (twice_nu < -1 || twice_nu > kMaxTwiceNu)
      throw std::domain_error("BesselOrder: twice_nu out of range");
  }

  static constexpr int kMaxTwiceNu = 120;

  double nu() const { return 0.5 * twice_nu; }
  bool is_integer() const { return twice_nu % 2 == 0; }
};

/// Gamma(a) for a = twice_a / 2 > 0. Integer a by factorial, half-integer a
/// by the sqrt(pi) reduction.
inline double gamma_half(int twice_a) {
  if (twice_a <= 0) throw std::domain_error("gamma_half: argument must be positive");
  if (twice_a % 2 == 0) {
    double g = 1.0;
    for (int i = 2; i < twice_a / 2; ++i) g *= i;
    return g;
  }
  // a = m + 1/2: Gamma(1/2) = sqrt(pi), then Gamma(a+1) = a Gamma(a).
  double g = std::sqrt(M_PI);
  for (int m = 0; m < (twice_a - 1) / 2; ++m) g *= m + 0.5;
  return g;
}

namespace detail {

// Ascending power series, valid for any order nu >= -1/2 and converging for
// all z; used below the series/asymptotic switch. Compensated summation keeps
// the long (up to ~90 term) z ~ 35 sums at full precision.
inline double bessel_i_series(double nu, double z) {
  const double q = 0.25 * z * z;
  // t_0 = (z/2)^nu / Gamma(nu+1)
  double term = std::exp(nu * std::log(0.5 * z)) /
                gamma_half(static_cast<int>(std::lround(2.0 * (nu + 1.0))));
  double sum = 0.0, comp = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    term *= q / ((k + 1.0) * (nu + k + 1.0));
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

// Large-argument expansion of e^{-z} I_nu(z) sqrt(2 pi z); the e^{-2z}
// reflection term is below 1e-30 for z > 35.
inline double bessel_i_asymptotic_factor(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0;
  double prev = std::fabs(term);
  for (int k = 0; k < 60; ++k) {
    const double odd = 2.0 * k + 1.0;
    term *= -(mu - odd * odd) / (8.0 * (k + 1.0) * z);
    if (std::fabs(term) > prev) break;  // divergent tail reached
    prev = std::fabs(term);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

}  // namespace detail

/// Modified Bessel function of the first kind, I_nu(z), as a ScaledValue so
/// that z up to a few thousand stays representable. The series/asymptotic
/// switch sits at z = 35, where both branches agree to <= 1e-12 relative.
inline ScaledValue bessel_i(BesselOrder order, double z) {
  if (z < 0.0 || std::isnan(z)) throw std::domain_error("bessel_i: z must be >= 0");
  constexpr double kZSwitch = 35.0;
  const double nu = order.nu();

  if (z == 0.0) {
    if (order.twice_nu == 0) return ScaledValue::from_double(1.0);
    if (order.twice_nu > 0) return ScaledValue::zero();
    throw std::domain_error("bessel_i: z = 0 is a pole for negative order");
  }

  if (z <= kZSwitch) return ScaledValue::from_double(detail::bessel_i_series(nu, z));

  if (order.is_integer()) {
    const double m = detail::bessel_i_asymptotic_factor(nu, z) / std::sqrt(2.0 * M_PI * z);
    return ScaledValue::from_parts(m, z);
  }

  // Half-integer orders reduce to elementary functions; build them in scaled
  // form (e^{-z} sinh z etc.) and walk the recurrence I_{nu+1} = I_{nu-1} -
  // (2 nu / z) I_nu upward from nu = -1/2, 1/2. For z > 35 the recurrence is
  // well conditioned at the orders we support.
  const double em2z = std::exp(-2.0 * z);
  const double pref = std::sqrt(2.0 / (M_PI * z));
  ScaledValue lower = ScaledValue::from_parts(pref * 0.5 * (1.0 + em2z), z);  // I_{-1/2}
  ScaledValue upper = ScaledValue::from_parts(pref * 0.5 * (1.0 - em2z), z);  // I_{+1/2}
  if (order.twice_nu == -1) return lower;
  double cur_nu = 0.5;
  while (2.0 * cur_nu < order.twice_nu) {
    ScaledValue next = lower - upper * (2.0 * cur_nu / z);
    lower = upper;
    upper = next;
    cur_nu += 1.0;
  }
  return upper;
}

inline ScaledValue bessel_i(int twice_nu, double z) { return bessel_i(BesselOrder(twice_nu), z); }

/// Associated Laguerre polynomial L_n^{(k)}(x) by the three-term recurrence.
inline double laguerre_assoc(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::domain_error("laguerre_assoc: n, k must be >= 0");
  if (n > 60) throw std::domain_error("laguerre_assoc: n > 60 not supported");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + k - x;
  for (int m = 1; m < n; ++m) {
    const double lp1 = ((2.0 * m + 1.0 + k - x) * l - (m + k) * lm1) / (m + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

}  // namespace contbinom

#endif  // CONTBINOM_SPECIAL_HPP
