#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "contbinom/quadrature.hpp"

using namespace contbinom;

TEST_CASE("polynomials up to degree 10 are integrated near machine precision") {
  auto f = [](double u) { return ((u - 2.0) * u + 1.0) * std::pow(u, 8); };
  const double exact = 1.0 / 11.0 - 2.0 / 10.0 + 1.0 / 9.0;  // int_0^1
  CHECK(integrate(f, 0.0, 1.0).value == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("oscillatory Bessel-type integral") {
  // int_0^pi e^{2 cos t} sin^2 t dt = (pi/2) I1(2)
  auto f = [](double t) { return std::exp(2.0 * std::cos(t)) * std::sin(t) * std::sin(t); };
  CHECK(integrate(f, 0.0, M_PI).value ==
        doctest::Approx(2.498566528528904).epsilon(1e-13));
}

TEST_CASE("inverse square-root endpoint singularities") {
  QuadratureSpec spec;
  spec.singular_left = spec.singular_right = true;
  // int_{-1}^{1} 1/sqrt(1-z^2) dz = pi
  auto f = [](double z) { return 1.0 / std::sqrt(1.0 - z * z); };
  CHECK(integrate(f, -1.0, 1.0, spec).value == doctest::Approx(M_PI).epsilon(1e-12));

  // semicircle normalization: (2/pi) int sqrt(1-z^2) dz = 1
  auto g = [](double z) { return std::sqrt(1.0 - z * z); };
  CHECK((2.0 / M_PI) * integrate(g, -1.0, 1.0, spec).value ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("interval additivity and reversal conventions") {
  auto f = [](double u) { return std::exp(-u) * std::cos(3.0 * u); };
  const double whole = integrate(f, 0.0, 5.0).value;
  const double split = integrate(f, 0.0, 1.7).value + integrate(f, 1.7, 5.0).value;
  CHECK(whole == doctest::Approx(split).epsilon(1e-12));
  CHECK(integrate(f, 2.0, 2.0).value == 0.0);
}

TEST_CASE("convolve_at of exponentials") {
  // (e^u * e^u)(z) = z e^z; at z = 1 this is e
  auto e = [](double u) { return std::exp(u); };
  CHECK(convolve_at(e, e, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(convolve_at(e, e, 3.0) == doctest::Approx(3.0 * std::exp(3.0)).epsilon(1e-12));
}

TEST_CASE("laplace_numeric of a decaying exponential") {
  // L[e^{-w}](p) = 1/(p+1); truncation negligible by tail_cut = 40
  auto f = [](double w) { return std::exp(-w); };
  CHECK(laplace_numeric(f, 2.0, 40.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(laplace_numeric(f, -1.0, 40.0), std::domain_error);
}

TEST_CASE("central differences have the advertised accuracy") {
  auto f = [](double u) { return std::sin(u); };
  CHECK(central_diff(f, 0.7, 1, 1e-5) == doctest::Approx(std::cos(0.7)).epsilon(1e-9));
  CHECK(central_diff(f, 0.7, 2, 1e-4) == doctest::Approx(-std::sin(0.7)).epsilon(1e-6));
  CHECK_THROWS_AS(central_diff(f, 0.0, 3, 1e-4), std::domain_error);
}

TEST_CASE("non-integrable blow-up raises convergence_error with a best estimate") {
  QuadratureSpec spec;
  spec.max_depth = 12;
  auto f = [](double u) { return 1.0 / u; };
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, spec), convergence_error);
  try {
    integrate(f, 0.0, 1.0, spec);
  } catch (const convergence_error& e) {
    CHECK(e.best_estimate.value > 1.0);  // partial sums of a divergent integral
    CHECK(e.best_estimate.subdivisions > 0);
  }
}
