#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "contbinom/discrete.hpp"

using namespace contbinom;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
}

TEST_CASE("Catalan numbers and their finite difference identity") {
  const std::int64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) CHECK(discrete_catalan(n) == expected[n]);
  CHECK(discrete_catalan(30) == 3814986502092304LL);
  CHECK_THROWS_AS(discrete_catalan(31), std::domain_error);
  CHECK_THROWS_AS(discrete_catalan(-1), std::domain_error);
  // Delta C_n = C_{n+1} - C_n reproduces the ballot-count difference
  CHECK(discrete_catalan(3) - discrete_catalan(2) == 3);
}

TEST_CASE("Vandermonde convolution of binomial rows") {
  CHECK(star_convolve(1, 1, 3) == 12);  // interior terms 6 + 6
  // interior sum plus the two boundary terms closes the identity
  auto full = [](int k1, int k2, int n) {
    return star_convolve(k1, k2, n) + binomial(n + k1, k1) + binomial(n + k2, k2);
  };
  CHECK(full(1, 1, 3) == binomial(6, 3));
  CHECK(full(2, 3, 4) == binomial(2 + 3 + 4 + 1, 4));
  CHECK(full(0, 0, 5) == binomial(6, 5));
  CHECK_THROWS_AS(star_convolve(1, 1, 0), std::domain_error);
}

TEST_CASE("central binomial self-convolution gives powers of four") {
  CHECK(central_convolution(0) == 1);
  CHECK(central_convolution(1) == 4);
  CHECK(central_convolution(3) == 64);
  CHECK(central_convolution(10) == 1048576);
}

TEST_CASE("semicircle even moments match Catalan numbers") {
  for (int n : {0, 1, 2, 5, 12}) {
    const double scale = std::max<double>(1.0, static_cast<double>(discrete_catalan(n)));
    CHECK(std::fabs(catalan_moment_check(n)) < 1e-7 * scale);
  }
  CHECK_THROWS_AS(catalan_moment_check(13), std::domain_error);
}
