#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "contbinom/cbinom.hpp"
#include "contbinom/quadrature.hpp"
#include "contbinom/telegraph.hpp"

using namespace contbinom;

TEST_CASE("config validation") {
  CHECK_THROWS_AS(simulate({0.0, 1.0, 1.0, 0}, 10), std::domain_error);
  CHECK_THROWS_AS(simulate({1.0, -1.0, 1.0, 0}, 10), std::domain_error);
  CHECK_THROWS_AS(simulate({1.0, 1.0, 1.0, 0}, 0), std::domain_error);
}

TEST_CASE("paths stay inside the light cone and atoms sit on it") {
  const TelegraphConfig cfg{2.0, 1.5, 0.8, 11};
  const double ct = cfg.c * cfg.t;
  for (const auto& s : simulate(cfg, 5000)) {
    CHECK(std::fabs(s.position) <= ct + 1e-12);
    if (s.kind == TelegraphKind::AtomPlus) {
      CHECK(s.position == doctest::Approx(ct).epsilon(1e-12));
      CHECK(s.switch_count == 0);
    } else if (s.kind == TelegraphKind::AtomMinus) {
      CHECK(s.position == doctest::Approx(-ct).epsilon(1e-12));
      CHECK(s.switch_count == 0);
    } else {
      CHECK(s.switch_count > 0);
      CHECK(std::fabs(s.position) < ct);
    }
  }
}

TEST_CASE("simulation is reproducible per (seed, index) substream") {
  const TelegraphConfig cfg{1.0, 2.0, 1.0, 123};
  const auto a = simulate(cfg, 500);
  const auto b = simulate(cfg, 500);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].position == b[i].position);
    CHECK(a[i].switch_count == b[i].switch_count);
  }
  // prefixes agree: sample i does not depend on how many samples were drawn
  const auto head = simulate(cfg, 100);
  for (std::size_t i = 0; i < head.size(); ++i) CHECK(head[i].position == a[i].position);
}

TEST_CASE("switch times line up with the recorded counts") {
  const TelegraphConfig cfg{1.0, 3.0, 1.0, 5};
  std::vector<std::vector<double>> times;
  const auto samples = simulate(cfg, 200, &times);
  REQUIRE(times.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(times[i].size() == samples[i].switch_count);
    double prev = 0.0;
    for (double t : times[i]) {
      CHECK(t > prev);
      CHECK(t < cfg.t);
      prev = t;
    }
  }
}

TEST_CASE("density symmetry, positivity, and mass") {
  const TelegraphConfig cfg{1.0, 2.0, 1.0, 0};
  CHECK(density(cfg, 0.3) == doctest::Approx(density(cfg, -0.3)).epsilon(1e-13));
  CHECK(density(cfg, 0.0) > 0.0);
  CHECK_THROWS_AS(density(cfg, 1.0), std::domain_error);
  CHECK_THROWS_AS(density(cfg, 1.5), std::domain_error);

  QuadratureSpec spec;
  spec.singular_left = spec.singular_right = true;
  const double cont = integrate([&](double s) { return density(cfg, s); }, -1.0, 1.0, spec).value;
  const double total = cont + std::exp(-cfg.lambda * cfg.t);  // plus the two atoms
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("bridge to the continuous binomial coefficient") {
  // With lambda = 2c and ct = x/2: p(s, t) = (e^{-x}/2) {x, x/2 + s}
  const TelegraphConfig cfg{1.0, 2.0, 1.0, 0};
  const double x = 2.0;
  for (double s : {0.0, 0.4, -0.7, 0.95}) {
    const double expected = 0.5 * std::exp(-x) * cbinom(x, 0.5 * x + s);
    CHECK(density(cfg, s) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(density(cfg, 0.4) == doctest::Approx(0.475954148342143).epsilon(1e-12));
}

TEST_CASE("density satisfies the damped wave equation") {
  const TelegraphConfig cfg{1.0, 2.0, 2.0, 0};
  CHECK(std::fabs(pde_residual(cfg, 0.3, 2.0, 1e-3)) < 1e-4);
  CHECK(std::fabs(pde_residual(cfg, -0.8, 2.0, 1e-3)) < 1e-4);
  CHECK_THROWS_AS(pde_residual(cfg, 1.999, 2.0, 1e-3), std::domain_error);
}

TEST_CASE("atom fraction matches e^{-lambda t}") {
  const TelegraphConfig cfg{1.0, 1.0, 1.0, 2024};
  const auto samples = simulate(cfg, 200000);
  std::size_t atoms = 0, plus = 0;
  for (const auto& s : samples)
    if (s.kind != TelegraphKind::Continuous) {
      ++atoms;
      if (s.kind == TelegraphKind::AtomPlus) ++plus;
    }
  const double pa = std::exp(-1.0);
  const double frac = static_cast<double>(atoms) / samples.size();
  CHECK(std::fabs(frac - pa) < 3.0 * std::sqrt(pa * (1.0 - pa) / samples.size()));
  // the two atoms split evenly
  const double split = static_cast<double>(plus) / atoms;
  CHECK(std::fabs(split - 0.5) < 3.0 * std::sqrt(0.25 / atoms));
}

TEST_CASE("histogram statistic is modest for a faithful sampler") {
  const TelegraphConfig cfg{1.0, 2.0, 1.0, 99};
  const double chi2 = histogram_gof(cfg, 100000, 20);
  CHECK(chi2 < 45.0);  // ~19 dof; 0.999 quantile is 43.8
  CHECK_THROWS_AS(histogram_gof(cfg, 100, 20), std::domain_error);
}
