#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "contbinom/verify.hpp"

using namespace contbinom;

TEST_CASE("registry is populated and sorted by name") {
  const auto& checks = all_checks();
  CHECK(checks.size() > 40);
  for (const auto& c : checks) {
    CHECK(!c.name.empty());
    CHECK(c.tolerance >= 0.0);
  }
}

TEST_CASE("selection semantics") {
  const auto one = run_verification_suite({"cbinom_symmetry"});
  REQUIRE(one.size() == 1);
  CHECK(one[0].name == "cbinom_symmetry");
  CHECK(one[0].passed);
  CHECK(one[0].runtime_ms >= 0.0);

  const auto two = run_verification_suite({"catalan_bessel_reduction", "cbinom_symmetry"});
  CHECK(two.size() == 2);
  CHECK(two[0].name < two[1].name);

  CHECK_THROWS_AS(run_verification_suite({"no_such_check"}), std::invalid_argument);

  const auto all_kw = run_verification_suite({"all"});
  CHECK(all_kw.size() == all_checks().size());
}

TEST_CASE("fast subset of the suite passes") {
  const auto reports = run_verification_suite(
      {"bessel_recurrence", "bessel_i0_i2_identity", "quad_linearity", "cbinom_symmetry",
       "catalan_bessel_reduction", "dist_normalization_symmetry", "discrete_chu_vandermonde",
       "discrete_catalan_convolution", "discrete_central_convolution"});
  for (const auto& r : reports) {
    INFO(r.name, " residual=", r.residual, " tol=", r.tolerance);
    CHECK(r.passed);
  }
}

TEST_CASE("report emitters") {
  const auto reports = run_verification_suite({"cbinom_symmetry", "quad_linearity"});

  std::ostringstream text;
  write_reports_text(text, reports);
  CHECK(text.str().find("cbinom_symmetry") != std::string::npos);
  CHECK(text.str().find("PASS") != std::string::npos);

  std::ostringstream jsonl;
  write_reports_jsonl(jsonl, reports);
  const std::string s = jsonl.str();
  CHECK(s.find("\"name\":\"cbinom_symmetry\"") != std::string::npos);
  CHECK(s.find("\"passed\":true") != std::string::npos);
  // one JSON object per line
  CHECK(std::count(s.begin(), s.end(), '\n') == 2);
}
