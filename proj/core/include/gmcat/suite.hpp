#ifndef GMCAT_SUITE_HPP
#define GMCAT_SUITE_HPP

#include "gmcat/json_io.hpp"

namespace gmcat {

struct ResourceVerdict {
  std::string resource;
  std::string kind;
  std::string check;
  CheckReport report;
};

struct SuiteResult {
  std::string suite;
  std::vector<ResourceVerdict> verdicts;

  bool pass() const;
};

// Valid suite names: all, category, monoidal, graded, commutative, morphism,
// algebra, localisable.
bool is_valid_suite(const std::string& suite);

// Runs every check the suite implies over the bundle's resources, in bundle
// order. `jobs` > 1 evaluates resources concurrently; output order does not
// depend on it. Structural errors (dangling refs, boundary mismatches)
// propagate as exceptions.
SuiteResult run_suite(const Bundle& bundle, const std::string& suite, std::size_t jobs = 1);

nlohmann::json suite_result_to_json(const SuiteResult& result, const Bundle& bundle,
                                    bool canonical, double elapsed_ms);

}  // namespace gmcat

#endif
