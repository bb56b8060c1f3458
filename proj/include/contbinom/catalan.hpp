#ifndef CONTBINOM_CATALAN_HPP
#define CONTBINOM_CATALAN_HPP

#include <cmath>
#include <stdexcept>

#include "contbinom/quadrature.hpp"
#include "contbinom/special.hpp"

namespace contbinom {

struct CatalanPoint {
  double x;
  double y;

  CatalanPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(x >= 0.0) || !(y >= 0.0) || !(y <= x))
      throw std::domain_error("CatalanPoint: requires 0 <= y <= x");
  }
};

/// Continuous Catalan number C(x,y) = I0(u) - ((x-y)/(x+y)) I2(u) with
/// u = sqrt(x^2 - y^2); C(x,x) = 1 (the ratio multiplies I2(0) = 0).
inline double catalan(CatalanPoint pt) {
  const double diff = pt.x - pt.y;
  const double sum = pt.x + pt.y;
  if (sum == 0.0) return 1.0;
  const double u = std::sqrt(std::max(diff * sum, 0.0));
  return bessel_i(0, u).to_double() - (diff / sum) * bessel_i(4, u).to_double();
}

inline double catalan(double x, double y) { return catalan(CatalanPoint(x, y)); }

/// Lebesgue volume of the staircase-path polytope Lambda^n(x,y).
inline double polytope_volume(int n, CatalanPoint pt) {
  if (n < 0) throw std::domain_error("polytope_volume: n must be >= 0");
  if (n == 0) return 1.0;
  const double diff = pt.x - pt.y;
  const double sum = pt.x + pt.y;
  if (diff == 0.0 || sum == 0.0) return 0.0;
  const double log_v = n * std::log(diff) + (n - 1) * std::log(sum) +
                       std::log(pt.x + (2.0 * n + 1.0) * pt.y) - 2.0 * n * std::log(2.0) -
                       std::lgamma(n + 1.0) - std::lgamma(n + 2.0);
  return std::exp(log_v);
}

namespace detail {

// Iterated 1-D integral over the simplex 0 <= b <= (x-y)/2,
// 0 <= a <= (x+y)/2 - b of fn(a+2b, a).
template <typename Fn>
double simplex_integral(const Fn& fn, CatalanPoint pt, const QuadratureSpec& spec) {
  QuadratureSpec inner = spec;
  inner.abs_tol *= 0.1;
  inner.rel_tol *= 0.1;
  auto outer = [&](double b) {
    const double a_max = 0.5 * (pt.x + pt.y) - b;
    if (a_max <= 0.0) return 0.0;
    return integrate([&](double a) { return fn(a + 2.0 * b, a); }, 0.0, a_max, inner).value;
  };
  const double b_max = 0.5 * (pt.x - pt.y);
  if (b_max <= 0.0) return 0.0;
  return integrate(outer, 0.0, b_max, spec).value;
}

}  // namespace detail

/// vol(Lambda^{n+1}(x,y)) minus the integral recurrence over vol(Lambda^n).
inline double volume_recurrence_residual(int n, CatalanPoint pt, const QuadratureSpec& spec = {}) {
  if (n < 0 || n > 5) throw std::domain_error("volume_recurrence_residual: n must be in [0,5]");
  const double lhs = polytope_volume(n + 1, pt);
  const double rhs = detail::simplex_integral(
      [n](double x, double y) { return polytope_volume(n, CatalanPoint(x, y)); }, pt, spec);
  return lhs - rhs;
}

/// C(x,y) minus 1 + the same simplex integral of C.
inline double catalan_recursion_residual(CatalanPoint pt, const QuadratureSpec& spec = {}) {
  const double rhs = detail::simplex_integral(
      [](double x, double y) { return catalan(x, y); }, pt, spec);
  return catalan(pt) - 1.0 - rhs;
}

/// Residual of int_0^z C(x) C(z-x) dx = 4 C'(z), with C'(z) = 2 I2(z)/z.
inline double catalan_convolution_residual(double z, const QuadratureSpec& spec = {}) {
  if (!(z > 0.0)) throw std::domain_error("catalan_convolution_residual: z must be > 0");
  auto c = [](double x) { return catalan(x, 0.0); };
  const double lhs = convolve_at(c, c, z, spec);
  const double rhs = 8.0 * bessel_i(4, z).to_double() / z;
  return lhs - rhs;
}

/// Closed-form Laplace transform of C(., 0): L_C(s) = 2/(s + sqrt(s^2 - 1)).
inline double catalan_laplace(double s) {
  if (!(s > 1.0)) throw std::domain_error("catalan_laplace: transform diverges for s <= 1");
  return 2.0 / (s + std::sqrt(s * s - 1.0));
}

/// Schlaefli-type integral representation of C(x,y); must agree with the
/// closed form wherever x + y > 0.
inline double schlafli_catalan(CatalanPoint pt, const QuadratureSpec& spec = {}) {
  const double sum = pt.x + pt.y;
  if (sum == 0.0) throw std::domain_error("schlafli_catalan: x + y must be > 0");
  const double ratio2 = (pt.x - pt.y) / sum * ((pt.x - pt.y) / sum);
  auto integrand = [&](double t) {
    return std::exp(pt.x * std::cos(t)) *
           (std::cos(pt.y * std::sin(t)) - ratio2 * std::cos(pt.y * std::sin(t) - 2.0 * t));
  };
  return integrate(integrand, 0.0, M_PI, spec).value / M_PI;
}

/// Semicircle moment generating function (2/pi) int_{-1}^{1} e^{xz}
/// sqrt(1-z^2) dz; equals C(x, 0).
inline double semicircle_mgf(double x, QuadratureSpec spec = {}) {
  if (!(x >= 0.0)) throw std::domain_error("semicircle_mgf: x must be >= 0");
  spec.singular_left = spec.singular_right = true;
  auto integrand = [x](double z) { return std::exp(x * z) * std::sqrt(1.0 - z * z); };
  return (2.0 / M_PI) * integrate(integrand, -1.0, 1.0, spec).value;
}

/// int_0^inf e^{-u} C(2 sqrt(x) u, 0) du, the bridge to the discrete Catalan
/// generating function 2/(1 + sqrt(1-4x)); converges only for x < 1/4.
inline double catalan_gf_bridge(double x, const QuadratureSpec& spec = {}) {
  if (!(x > 0.0)) throw std::domain_error("catalan_gf_bridge: x must be > 0");
  if (x >= 0.25) throw std::domain_error("catalan_gf_bridge: diverges for x >= 1/4");
  const double rate = 1.0 - 2.0 * std::sqrt(x);  // integrand decays like e^{-rate u} / u^{3/2}
  const double tail_cut = 32.0 / rate;
  const double scale = 2.0 * std::sqrt(x);
  return laplace_numeric([scale](double u) { return catalan(scale * u, 0.0); }, 1.0, tail_cut,
                         spec);
}

enum class IphiKernel { Zero, Indicator, ExponentialUnit };

/// Residual of the Laplace-domain identity
///   L[x -> int_0^x C(x,y) Phi(y) dy](p) = 2 PhiTilde(sqrt(p^2-1)) / (p + sqrt(p^2-1))
/// for kernels Phi with known untruncated Laplace transform PhiTilde. It
/// follows from the classical pair
///   L[((x-y)/(x+y))^{nu/2} I_nu(sqrt(x^2-y^2))](p) = e^{-y q} (p+q)^{-nu} / q,
/// q = sqrt(p^2-1), applied to the two Bessel terms of C.
inline double iphi_laplace_check(IphiKernel kernel, double p) {
  if (!(p > 1.0)) throw std::domain_error("iphi_laplace_check: requires p > 1");
  if (kernel == IphiKernel::Zero) return 0.0;

  auto phi = [kernel](double y) {
    return kernel == IphiKernel::Indicator ? 1.0 : std::exp(-y);
  };
  const double q = std::sqrt(p * p - 1.0);
  const double phi_tilde = kernel == IphiKernel::Indicator ? 1.0 / q : 1.0 / (q + 1.0);
  const double rhs = 2.0 * phi_tilde / (p + q);

  QuadratureSpec inner;
  inner.abs_tol = inner.rel_tol = 1e-9;
  auto iphi = [&](double x) {
    if (x <= 0.0) return 0.0;
    return integrate([&](double y) { return catalan(x, y) * phi(y); }, 0.0, x, inner).value;
  };
  // I_Phi grows no faster than x * C(x,0) ~ e^x, so p > 1 admits a finite tail.
  QuadratureSpec outer;
  outer.abs_tol = outer.rel_tol = 1e-8;
  const double tail_cut = 32.0 / (p - 1.0);
  const double lhs = laplace_numeric(iphi, p, tail_cut, outer);
  return lhs - rhs;
}

}  // namespace contbinom

#endif  // CONTBINOM_CATALAN_HPP
