#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "contbinom/catalan.hpp"

using namespace contbinom;

TEST_CASE("diagonal and axis values") {
  CHECK(catalan(3.0, 3.0) == 1.0);
  CHECK(catalan(0.0, 0.0) == 1.0);
  // C(x, 0) = 2 I1(x) / x; at x = 2 this is I1(2)
  CHECK(catalan(2.0, 0.0) == doctest::Approx(1.590636854637329).epsilon(1e-13));
  CHECK(catalan(2.0, 1.0) == doctest::Approx(1.743579045383244).epsilon(1e-13));
  CHECK_THROWS_AS(catalan(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(catalan(-1.0, 0.0), std::domain_error);
}

TEST_CASE("polytope volumes") {
  CHECK(polytope_volume(0, CatalanPoint(2.0, 1.0)) == 1.0);
  // n = 1: (x-y)(x+3y)/8; at (2,0) this is 4/8
  CHECK(polytope_volume(1, CatalanPoint(2.0, 0.0)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(polytope_volume(1, CatalanPoint(3.0, 1.0)) ==
        doctest::Approx(2.0 * 6.0 / 8.0).epsilon(1e-14));
  CHECK(polytope_volume(4, CatalanPoint(1.0, 1.0)) == 0.0);
  CHECK_THROWS_AS(polytope_volume(-1, CatalanPoint(1.0, 0.0)), std::domain_error);
}

TEST_CASE("volume recurrence ties consecutive orders together") {
  CHECK(std::fabs(volume_recurrence_residual(0, CatalanPoint(2.0, 1.0))) < 1e-10);
  CHECK(std::fabs(volume_recurrence_residual(2, CatalanPoint(3.0, 0.5))) < 1e-10);
  CHECK_THROWS_AS(volume_recurrence_residual(7, CatalanPoint(1.0, 0.0)), std::domain_error);
}

TEST_CASE("integral recursion for C itself") {
  CHECK(std::fabs(catalan_recursion_residual(CatalanPoint(2.0, 1.0))) < 1e-8);
  CHECK(std::fabs(catalan_recursion_residual(CatalanPoint(1.5, 0.0))) < 1e-8);
}

TEST_CASE("convolution identity against the derivative") {
  CHECK(std::fabs(catalan_convolution_residual(1.0)) < 1e-9);
  CHECK(std::fabs(catalan_convolution_residual(3.0)) < 1e-8);
  CHECK_THROWS_AS(catalan_convolution_residual(0.0), std::domain_error);
}

TEST_CASE("Laplace transform closed form") {
  CHECK(catalan_laplace(2.0) == doctest::Approx(0.535898384862245).epsilon(1e-14));
  // s -> inf behaves like 1/s
  CHECK(catalan_laplace(1e6) == doctest::Approx(1e-6).epsilon(1e-6));
  CHECK_THROWS_AS(catalan_laplace(1.0), std::domain_error);
}

TEST_CASE("contour-free integral representation matches the closed form") {
  CHECK(schlafli_catalan(CatalanPoint(3.0, 3.0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(schlafli_catalan(CatalanPoint(2.0, 1.0)) ==
        doctest::Approx(catalan(2.0, 1.0)).epsilon(1e-10));
  CHECK_THROWS_AS(schlafli_catalan(CatalanPoint(0.0, 0.0)), std::domain_error);
}

TEST_CASE("semicircle moment generating function equals C(x, 0)") {
  CHECK(semicircle_mgf(0.0) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(semicircle_mgf(2.0) == doctest::Approx(catalan(2.0, 0.0)).epsilon(1e-11));
  CHECK_THROWS_AS(semicircle_mgf(-1.0), std::domain_error);
}

TEST_CASE("generating-function bridge reproduces 2/(1 + sqrt(1-4x))") {
  auto closed = [](double x) { return 2.0 / (1.0 + std::sqrt(1.0 - 4.0 * x)); };
  CHECK(catalan_gf_bridge(0.1) == doctest::Approx(closed(0.1)).epsilon(1e-8));
  CHECK(catalan_gf_bridge(0.01) == doctest::Approx(closed(0.01)).epsilon(1e-8));
  CHECK_THROWS_AS(catalan_gf_bridge(0.3), std::domain_error);
  CHECK_THROWS_AS(catalan_gf_bridge(0.0), std::domain_error);
}

TEST_CASE("Laplace-domain kernel identity") {
  CHECK(iphi_laplace_check(IphiKernel::Zero, 2.0) == 0.0);
  CHECK(std::fabs(iphi_laplace_check(IphiKernel::Indicator, 2.0)) < 1e-5);
  CHECK(std::fabs(iphi_laplace_check(IphiKernel::ExponentialUnit, 1.5)) < 1e-5);
  CHECK_THROWS_AS(iphi_laplace_check(IphiKernel::Indicator, 0.5), std::domain_error);
}
