#include <doctest.h>

#include "porism/selftest.hpp"

using namespace porism;

// Every randomized suite, on a few fixed seeds.
TEST_CASE("property suites") {
  for (std::uint64_t seed : {1ull, 2ull, 2024ull}) {
    for (const SuiteResult& r : run_selftest(60, seed)) {
      CAPTURE(seed);
      INFO(r.name << ": " << r.detail);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("suite streams are independent of the filter") {
  const auto all = run_selftest(5, 9);
  const auto some = run_selftest(5, 9, "porism.");
  REQUIRE_FALSE(some.empty());
  for (const auto& r : some) {
    const auto it = std::find_if(all.begin(), all.end(), [&](const SuiteResult& a) { return a.name == r.name; });
    REQUIRE(it != all.end());
    CHECK(it->passed == r.passed);
    CHECK(it->cases == r.cases);
  }
}
