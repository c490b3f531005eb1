#pragma once
// Seeded self-check suites: each one exercises a theorem or a cross-check
// (primal vs dual degree, degree-1 classification, decomposition bounds,
// depth vs Tverberg order, Lawrence extremality, pyramid bound, section and
// quotient degrees, recorded conjectures) on generated instances and reports
// any violation together with the serialized offending instance. Identical
// options give byte-identical results.

#include <cstdint>
#include <string>
#include <vector>

namespace galedeg {

struct CheckOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 0;       // 0 keeps the per-suite default
    std::size_t max_n = 0;        // 0 keeps the per-suite default
    std::size_t max_dim = 0;      // 0 keeps the per-suite default
    bool corrupt_oracle = false;  // deliberately mis-set one oracle value (self-test)
};

struct CheckFailure {
    std::string what;      // the violated property
    std::string instance;  // serialized offending configuration (when one exists)
};

struct CheckResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t instances = 0;  // instances examined
    std::size_t checks = 0;     // individual properties verified
    bool ok = false;
    std::vector<CheckFailure> failures;
    std::vector<std::string> findings;  // conjecture observations, never failures
};

// primal-dual, deg1, cayley-bound, core-tverberg, lawrence, pyramid-bound,
// section-quotient, conjecture.
std::vector<std::string> check_suite_names();

CheckResult run_check_suite(const std::string& name, const CheckOptions& opts);

// "all" expands to every suite in order; any other name gives one result.
std::vector<CheckResult> run_check_suites(const std::string& name, const CheckOptions& opts);

} // namespace galedeg
