#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "porism/random.hpp"

namespace porism {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure
};

struct Suite {
  std::string name;
  /// Runs one randomized case; throws SuiteFailure (or any exception) on failure.
  std::function<void(gen::Rng&)> run_case;
};

class SuiteFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every invariant and property suite of the library.
const std::vector<Suite>& property_suites();

/// Runs `cases` cases of one suite from its own stream seeded by
/// (seed, suite name), so results do not depend on which suites run.
SuiteResult run_suite(const Suite& suite, std::size_t cases, std::uint64_t seed);

/// Suites whose name starts with `filter` (all when empty).
std::vector<SuiteResult> run_selftest(std::size_t cases, std::uint64_t seed,
                                      const std::string& filter = {});

}  // namespace porism
