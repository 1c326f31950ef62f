#include <doctest.h>

#include "liesurf/config.hpp"
#include "property_suite.hpp"

TEST_CASE("randomized property suites") {
  const liesurf::Config cfg = liesurf::default_config();
  REQUIRE(cfg.random_cases >= 100);
  for (const auto& s : props::all_suites(cfg.seed, cfg.random_cases)) {
    INFO(s.name << ": " << s.failures << " failures, first " << s.first_failure << ", worst " << s.worst);
    CHECK(s.cases >= 100);
    CHECK(s.ok());
  }
}

TEST_CASE("property suites are reproducible") {
  auto a = props::mu_inverse(7, 12);
  auto b = props::mu_inverse(7, 12);
  CHECK(a.worst == b.worst);
  CHECK(a.cases == 12);
}
