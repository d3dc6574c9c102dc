#ifndef CURVEMODULI_SUITES_HPP
#define CURVEMODULI_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "curvemoduli/sampling.hpp"

namespace curvemoduli {

struct SuiteReport {
    std::string suite;
    int degree;
    uint64_t seed;
    int trials;
    std::vector<std::string> failures;
    long elapsed_ms;

    bool passed() const { return failures.empty(); }
};

std::vector<std::string> suite_names();

/// Runs one named property suite. Trials are seeded individually via
/// trial_seed, so the report does not depend on execution order; failures
/// carry the trial index and a serialized counterexample.
SuiteReport run_suite(const std::string& name, int degree, uint64_t seed, int trials);

Json suite_report_to_json(const SuiteReport& r);

} // namespace curvemoduli

#endif
