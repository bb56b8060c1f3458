#ifndef CONTBINOM_SCALED_VALUE_HPP
#define CONTBINOM_SCALED_VALUE_HPP

#include <cmath>
#include <limits>

namespace contbinom {

/// A real number stored as mantissa * exp(log_scale), with |mantissa| kept in
/// [1, e) so that quantities like e^z I_nu(z) never overflow a double.
struct ScaledValue {
  double mantissa = 0.0;
  double log_scale = 0.0;

  ScaledValue() = default;

  static ScaledValue from_parts(double mantissa, double log_scale) {
    ScaledValue v;
    v.mantissa = mantissa;
    v.log_scale = log_scale;
    v.normalize();
    return v;
  }

  static ScaledValue from_double(double x) { return from_parts(x, 0.0); }

  static ScaledValue zero() { return ScaledValue{}; }

  bool is_zero() const { return mantissa == 0.0; }

  double to_double() const {
    if (mantissa == 0.0) return 0.0;
    return mantissa * std::exp(log_scale);
  }

  /// Natural log of the absolute value; -inf for zero.
  double log_abs() const {
    if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(mantissa)) + log_scale;
  }

  double sign() const { return mantissa < 0.0 ? -1.0 : (mantissa > 0.0 ? 1.0 : 0.0); }

  void normalize() {
    if (mantissa == 0.0) {
      log_scale = 0.0;
      return;
    }
    const double l = std::log(std::fabs(mantissa));
    const double shift = std::floor(l);
    mantissa *= std::exp(-shift);
    log_scale += shift;
  }

  friend ScaledValue operator*(ScaledValue a, ScaledValue b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_parts(a.mantissa * b.mantissa, a.log_scale + b.log_scale);
  }

  friend ScaledValue operator*(ScaledValue a, double b) {
    return from_parts(a.mantissa * b, a.log_scale);
  }

  friend ScaledValue operator/(ScaledValue a, ScaledValue b) {
    return from_parts(a.mantissa / b.mantissa, a.log_scale - b.log_scale);
  }

  friend ScaledValue operator+(ScaledValue a, ScaledValue b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Add on the larger scale; the smaller term is rescaled (may underflow to 0,
    // which is the correct rounding).
    if (a.log_scale < b.log_scale) std::swap(a, b);
    const double m = a.mantissa + b.mantissa * std::exp(b.log_scale - a.log_scale);
    return from_parts(m, a.log_scale);
  }

  friend ScaledValue operator-(ScaledValue a, ScaledValue b) {
    return a + from_parts(-b.mantissa, b.log_scale);
  }

  /// Multiply by exp(t) without touching the mantissa.
  ScaledValue scaled_by_exp(double t) const {
    if (is_zero()) return zero();
    return from_parts(mantissa, log_scale + t);
  }
};

}  // namespace contbinom

#endif  // CONTBINOM_SCALED_VALUE_HPP
