#ifndef CONTBINOM_DISCRETE_HPP
#define CONTBINOM_DISCRETE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "contbinom/quadrature.hpp"

namespace contbinom {

namespace detail {

inline std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::domain_error(what);
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact binomial coefficient; overflow raises a domain error.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > INT64_MAX) throw std::domain_error("binomial: overflow");
  }
  return detail::checked_narrow(acc, "binomial: overflow");
}

/// C_n by the multiplicative recurrence C_{n+1} = C_n 2(2n+1)/(n+2); exact for
/// n <= 30.
inline std::int64_t discrete_catalan(int n) {
  if (n < 0) throw std::domain_error("discrete_catalan: n must be >= 0");
  if (n > 30) throw std::domain_error("discrete_catalan: n > 30 exceeds exact integer range");
  __int128 c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return detail::checked_narrow(c, "discrete_catalan: overflow");
}

/// The star operator: sum_{m=1}^{n-1} binom(m+k1,k1) binom(n-m+k2,k2).
inline std::int64_t star_convolve(int k1, int k2, int n) {
  if (n < 1) throw std::domain_error("star_convolve: n must be >= 1");
  __int128 acc = 0;
  for (int m = 1; m <= n - 1; ++m) {
    acc += static_cast<__int128>(binomial(m + k1, k1)) * binomial(n - m + k2, k2);
    if (acc > INT64_MAX) throw std::domain_error("star_convolve: overflow");
  }
  return detail::checked_narrow(acc, "star_convolve: overflow");
}

/// sum_k binom(2k,k) binom(2n-2k,n-k); equals 4^n.
inline std::int64_t central_convolution(int n) {
  if (n < 0) throw std::domain_error("central_convolution: n must be >= 0");
  __int128 acc = 0;
  for (int k = 0; k <= n; ++k)
    acc += static_cast<__int128>(binomial(2 * k, k)) * binomial(2 * (n - k), n - k);
  return detail::checked_narrow(acc, "central_convolution: overflow");
}

/// Residual between C_n and its semicircle moment representation
/// (2/pi) int_{-1}^{1} (2z)^{2n} sqrt(1-z^2) dz.
inline double catalan_moment_check(int n, QuadratureSpec spec = {}) {
  if (n < 0 || n > 12) throw std::domain_error("catalan_moment_check: n must be in [0,12]");
  spec.singular_left = spec.singular_right = true;
  auto integrand = [n](double z) {
    return std::pow(2.0 * z, 2 * n) * std::sqrt(1.0 - z * z);
  };
  const double moment = (2.0 / M_PI) * integrate(integrand, -1.0, 1.0, spec).value;
  return static_cast<double>(discrete_catalan(n)) - moment;
}

}  // namespace contbinom

#endif  // CONTBINOM_DISCRETE_HPP
