#ifndef CONTBINOM_QUADRATURE_HPP
#define CONTBINOM_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace contbinom {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 30;
  bool singular_left = false;   // integrand ~ 1/sqrt(u - a)
  bool singular_right = false;  // integrand ~ 1/sqrt(b - u)
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

class convergence_error : public std::runtime_error {
 public:
  convergence_error(const char* what, IntegralResult best)
      : std::runtime_error(what), best_estimate(best) {}
  IntegralResult best_estimate;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1].
inline constexpr std::array<double, 8> kGK15Nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
std::pair<double, double> gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kKronrodWeights[7] * fc;
  double resg = kGaussWeights[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double x = h * kGK15Nodes[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) resg += kGaussWeights[j / 2] * fsum;
  }
  const double value = resk * h;
  const double err = std::fabs((resk - resg) * h);
  return {value, err};
}

struct Segment {
  double a, b, value, error;
  int depth;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename F>
IntegralResult integrate_adaptive(const F& f, double a, double b, const QuadratureSpec& spec) {
  IntegralResult res;
  if (a == b) return res;

  std::priority_queue<Segment> heap;
  auto [v0, e0] = gk15(f, a, b);
  heap.push({a, b, v0, e0, 0});
  double total = v0, total_err = e0;
  int subdivisions = 0;

  auto tol = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)); };

  while (total_err > tol()) {
    Segment s = heap.top();
    if (s.depth >= spec.max_depth) {
      res.value = total;
      res.error_estimate = total_err;
      res.subdivisions = subdivisions;
      throw convergence_error("integrate: tolerance not reached at max_depth", res);
    }
    heap.pop();
    const double m = 0.5 * (s.a + s.b);
    auto [vl, el] = gk15(f, s.a, m);
    auto [vr, er] = gk15(f, m, s.b);
    total += vl + vr - s.value;
    total_err += el + er - s.error;
    heap.push({s.a, m, vl, el, s.depth + 1});
    heap.push({m, s.b, vr, er, s.depth + 1});
    ++subdivisions;
  }
  res.value = total;
  res.error_estimate = total_err;
  res.subdivisions = subdivisions;
  return res;
}

}  // namespace detail

/// Adaptive integration of f over [a, b]. Inverse-square-root endpoint
/// behavior is removed up front by the substitution u = endpoint -+ v^2;
/// subdivision alone converges too slowly for those integrands.
template <typename F>
IntegralResult integrate(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(a <= b)) throw std::domain_error("integrate: requires a <= b");
  if (a == b) return {};

  if (spec.singular_left && spec.singular_right) {
    const double m = 0.5 * (a + b);
    QuadratureSpec left = spec, right = spec;
    left.singular_right = false;
    right.singular_left = false;
    left.abs_tol = right.abs_tol = 0.5 * spec.abs_tol;
    IntegralResult rl = integrate(f, a, m, left);
    IntegralResult rr = integrate(f, m, b, right);
    return {rl.value + rr.value, rl.error_estimate + rr.error_estimate,
            rl.subdivisions + rr.subdivisions};
  }
  if (spec.singular_left) {
    QuadratureSpec inner = spec;
    inner.singular_left = false;
    auto g = [&f, a](double v) { return 2.0 * v * f(a + v * v); };
    return detail::integrate_adaptive(g, 0.0, std::sqrt(b - a), inner);
  }
  if (spec.singular_right) {
    QuadratureSpec inner = spec;
    inner.singular_right = false;
    auto g = [&f, b](double v) { return 2.0 * v * f(b - v * v); };
    return detail::integrate_adaptive(g, 0.0, std::sqrt(b - a), inner);
  }
  return detail::integrate_adaptive(f, a, b, spec);
}

/// Finite-interval convolution value (f * g)(z) = int_0^z f(u) g(z-u) du.
template <typename F, typename G>
double convolve_at(const F& f, const G& g, double z, const QuadratureSpec& spec = {}) {
  return integrate([&](double u) { return f(u) * g(z - u); }, 0.0, z, spec).value;
}

/// Truncated Laplace transform int_0^tail_cut e^{-p w} f(w) dw. The caller
/// picks tail_cut from the growth rate sigma of f so that the truncation bias
/// K e^{(sigma - p) tail_cut} / (p - sigma) is below abs_tol.
template <typename F>
double laplace_numeric(const F& f, double p, double tail_cut, const QuadratureSpec& spec = {}) {
  if (!(p > 0.0) || !(tail_cut > 0.0))
    throw std::domain_error("laplace_numeric: p and tail_cut must be positive");
  return integrate([&](double w) { return std::exp(-p * w) * f(w); }, 0.0, tail_cut, spec).value;
}

/// O(h^2) central finite difference of the first or second derivative.
template <typename F>
double central_diff(const F& f, double x, int order, double h) {
  switch (order) {
    case 1:
      return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2:
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    default:
      throw std::domain_error("central_diff: order must be 1 or 2");
  }
}

}  // namespace contbinom

#endif  // CONTBINOM_QUADRATURE_HPP
