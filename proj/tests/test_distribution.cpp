#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "contbinom/distribution.hpp"
#include "contbinom/quadrature.hpp"

using namespace contbinom;

TEST_CASE("normalization constant closed form") {
  // A(1, 1/2) = e - 1
  CHECK(normalization(1.0, 0.5) == doctest::Approx(1.718281828459045).epsilon(1e-13));
  // symmetry in p <-> 1-p
  CHECK(normalization(2.5, 0.3) == doctest::Approx(normalization(2.5, 0.7)).epsilon(1e-13));
  // stays finite where naive evaluation would overflow
  CHECK(std::isfinite(normalization_scaled(800.0, 0.5).log_abs()));
}

TEST_CASE("pdf support, positivity, and normalization") {
  const ContinuousBinomial dist(2.0, 0.5);
  CHECK(dist.pdf(-0.1) == 0.0);
  CHECK(dist.pdf(2.1) == 0.0);
  CHECK(dist.pdf(1.0) > 0.0);
  const double mass = integrate([&](double s) { return dist.pdf(s); }, 0.0, 2.0).value;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("mgf basics and quadrature cross-check") {
  const ContinuousBinomial dist(1.5, 0.4);
  CHECK(dist.mgf(0.0) == doctest::Approx(1.0).epsilon(1e-13));
  const double direct =
      integrate([&](double s) { return std::exp(0.7 * s) * dist.pdf(s); }, 0.0, 1.5).value;
  CHECK(dist.mgf(0.7) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("symmetric centered moments") {
  CHECK(moment_symmetric(2.0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(moment_symmetric(2.0, 1) == 0.0);
  CHECK(moment_symmetric(2.0, 3) == 0.0);
  CHECK(moment_symmetric(2.0, 2) == doctest::Approx(0.279824268220591).epsilon(1e-12));
  // quadrature oracle for the same quantity
  const ContinuousBinomial dist(2.0, 0.5);
  const double direct =
      integrate([&](double s) { return (s - 1.0) * (s - 1.0) * dist.pdf(s); }, 0.0, 2.0).value;
  CHECK(moment_symmetric(2.0, 2) == doctest::Approx(direct).epsilon(1e-9));
  CHECK_THROWS_AS(moment_symmetric(-1.0, 2), std::domain_error);
}

TEST_CASE("cdf endpoints and monotonicity") {
  const ContinuousBinomial dist(2.0, 0.5);
  CHECK(dist.cdf(0.0) == 0.0);
  CHECK(dist.cdf(2.0) == 1.0);
  CHECK(dist.cdf(1.0) == doctest::Approx(0.5).epsilon(1e-9));  // p = 1/2 symmetry
  double prev = 0.0;
  for (double s = 0.1; s < 2.0; s += 0.1) {
    const double cur = dist.cdf(s);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("quantile inverts the cdf") {
  const ContinuousBinomial dist(2.0, 0.35);
  for (double q : {0.05, 0.25, 0.5, 0.9}) {
    CHECK(dist.cdf(dist.quantile(q)) == doctest::Approx(q).epsilon(1e-8));
  }
  CHECK(dist.quantile(0.0) == 0.0);
  CHECK(dist.quantile(1.0) == 2.0);
  CHECK_THROWS_AS(dist.quantile(1.5), std::domain_error);
}

TEST_CASE("sampling is deterministic and matches the mean") {
  const ContinuousBinomial dist(2.0, 0.5);
  const auto a = dist.sample(42, 2000);
  const auto b = dist.sample(42, 2000);
  CHECK(a == b);
  const auto c = dist.sample(43, 2000);
  CHECK(a != c);

  const auto big = dist.sample(7, 100000);
  const double mean = std::accumulate(big.begin(), big.end(), 0.0) / big.size();
  const double sigma = std::sqrt(moment_symmetric(2.0, 2) / big.size());
  CHECK(std::fabs(mean - 1.0) < 4.0 * sigma);
  CHECK_THROWS_AS(dist.sample(1, 0), std::domain_error);
}
