#ifndef CONTBINOM_DISTRIBUTION_HPP
#define CONTBINOM_DISTRIBUTION_HPP

#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "contbinom/cbinom.hpp"
#include "contbinom/scaled_value.hpp"
#include "contbinom/special.hpp"

namespace contbinom {

namespace detail {

// phi(u) = cosh(xR/2) - cosh(x theta/2) + (2/R) sinh(xR/2), R = sqrt(4+theta^2),
// theta = u + log(p/(1-p)). Returned scaled by e^{xR/2} so x up to ~500 works.
// The MGF, the normalization constant, and the alpha^s e^{us} integral are all
// instances of this kernel.
inline ScaledValue binomial_phi(double x, double theta) {
  const double r = std::sqrt(4.0 + theta * theta);
  const double at = std::fabs(theta);
  const double emr = std::exp(-x * r);
  // cosh(xR/2) = e^{xR/2}(1+e^{-xR})/2, etc.; R > |theta| keeps every factor <= 1.
  const double m = 0.5 * (1.0 + emr) - 0.5 * std::exp(-0.5 * x * (r - at)) * (1.0 + std::exp(-x * at)) +
                   (1.0 - emr) / r;
  return ScaledValue::from_parts(m, 0.5 * x * r);
}

inline double logit(double p) { return std::log(p / (1.0 - p)); }

// splitmix64; used as the deterministic uniform stream behind sampling.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline double uniform_open01(std::uint64_t& state) {
  // (0, 1]: the +1 rules out exactly 0, keeping -log(u) finite.
  return ((splitmix64_next(state) >> 11) + 1) * 0x1.0p-53;
}

}  // namespace detail

/// Scaled normalization constant A_{x,p} of the continuous binomial
/// distribution.
inline ScaledValue normalization_scaled(double x, double p) {
  if (!(x > 0.0)) throw std::domain_error("normalization: x must be > 0");
  if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("normalization: p must be in (0,1)");
  const ScaledValue phi0 = detail::binomial_phi(x, detail::logit(p));
  return (phi0 * 2.0).scaled_by_exp(0.5 * x * std::log(p * (1.0 - p)));
}

inline double normalization(double x, double p) { return normalization_scaled(x, p).to_double(); }

/// Centered even moments of the symmetric (p = 1/2) case:
/// E Y^k with Y = X - x/2.
inline double moment_symmetric(double x, int k) {
  if (!(x > 0.0)) throw std::domain_error("moment_symmetric: x must be > 0");
  if (k < 0) throw std::domain_error("moment_symmetric: k must be >= 0");
  if (k % 2 == 1) return 0.0;
  const ScaledValue bessel_sum = bessel_i(k + 1, x) + bessel_i(k - 1, x);
  const double log_lead = 0.5 * (k + 1.0) * std::log(0.5 * x) +
                          std::log(gamma_half(k + 1)) + bessel_sum.log_abs();
  const double lead = std::exp(log_lead);
  return (lead - std::pow(0.5 * x, k)) / std::expm1(x);
}

/// The continuous binomial distribution CB(x, p): density
/// f(s) = {x s} p^s (1-p)^{x-s} / A_{x,p} on [0, x]. The CDF panel table is
/// built once on first use (single writer, then read-only).
class ContinuousBinomial {
 public:
  ContinuousBinomial(double x, double p)
      : x_(x), p_(p), norm_(normalization_scaled(x, p)) {}

  double x() const { return x_; }
  double p() const { return p_; }
  double norm() const { return norm_.to_double(); }

  double pdf(double s) const {
    if (s < 0.0 || s > x_) return 0.0;
    const ScaledValue cb = cbinom_scaled(BinomParams(x_, s));
    const double log_f = cb.log_abs() + s * std::log(p_) + (x_ - s) * std::log1p(-p_) -
                         norm_.log_abs();
    return std::exp(log_f);
  }

  /// E e^{uX} = e^{ux/2} phi(u) / phi(0) with the shifted argument
  /// theta = u + log(p/(1-p)).
  double mgf(double u) const {
    const double l = detail::logit(p_);
    const ScaledValue num = detail::binomial_phi(x_, u + l);
    const ScaledValue den = detail::binomial_phi(x_, l);
    return std::exp(0.5 * u * x_ + num.log_abs() - den.log_abs());
  }

  double cdf(double s) const {
    if (s <= 0.0) return 0.0;
    if (s >= x_) return 1.0;
    const Table& tab = table();
    const double h = x_ / kPanels;
    auto idx = static_cast<std::size_t>(s / h);
    if (idx >= kPanels) idx = kPanels - 1;
    const double partial = panel_integral(idx * h, s);
    return (tab.cumulative[idx] + partial) / tab.total;
  }

  /// Inverse CDF by bisection to 1e-10 in s.
  double quantile(double q) const {
    if (!(q >= 0.0) || !(q <= 1.0)) throw std::domain_error("quantile: q must be in [0,1]");
    if (q == 0.0) return 0.0;
    if (q == 1.0) return x_;
    double lo = 0.0, hi = x_;
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      (cdf(mid) < q ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  /// Deterministic inverse-CDF sampling from a seeded uniform stream.
  std::vector<double> sample(std::int64_t seed, std::size_t count) const {
    if (count == 0) throw std::domain_error("sample: count must be >= 1");
    std::vector<double> out;
    out.reserve(count);
    auto state = static_cast<std::uint64_t>(seed);
    for (std::size_t i = 0; i < count; ++i) out.push_back(quantile(detail::uniform_open01(state)));
    return out;
  }

 private:
  static constexpr std::size_t kPanels = 4096;

  struct Table {
    std::vector<double> cumulative;  // cumulative[i] = integral of pdf over [0, i*h]
    double total = 0.0;
  };

  // 5-point Gauss-Legendre; per-panel error is far below the 1e-9 cdf budget.
  double panel_integral(double a, double b) const {
    static constexpr double nodes[5] = {-0.906179845938663992797626878299,
                                        -0.538469310105683091036314420700, 0.0,
                                        0.538469310105683091036314420700,
                                        0.906179845938663992797626878299};
    static constexpr double weights[5] = {0.236926885056189087514264040720,
                                          0.478628670499366468041291514836,
                                          0.568888888888888888888888888889,
                                          0.478628670499366468041291514836,
                                          0.236926885056189087514264040720};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) acc += weights[i] * pdf(c + h * nodes[i]);
    return acc * h;
  }

  const Table& table() const {
    std::call_once(table_once_, [this] {
      auto tab = std::make_unique<Table>();
      tab->cumulative.resize(kPanels + 1, 0.0);
      const double h = x_ / kPanels;
      for (std::size_t i = 0; i < kPanels; ++i)
        tab->cumulative[i + 1] = tab->cumulative[i] + panel_integral(i * h, (i + 1) * h);
      tab->total = tab->cumulative[kPanels];
      table_ = std::move(tab);
    });
    return *table_;
  }

  double x_;
  double p_;
  ScaledValue norm_;
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<Table> table_;
};

inline double pdf(double x, double p, double s) { return ContinuousBinomial(x, p).pdf(s); }
inline double mgf(double x, double p, double u) { return ContinuousBinomial(x, p).mgf(u); }

}  // namespace contbinom

#endif  // CONTBINOM_DISTRIBUTION_HPP
