#pragma once

#include "gracelab/json_io.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gracelab {

enum class Suite {
    glc,
    strong_glc,
    composition,
    strong_composition,
    center_sums,
    monoid,
    bounds,
    component_identity,
    lex,
    expansion,
    all,
};

struct SuiteLimits {
    int min_n;
    int default_n_max;
    int cap;
};

/// Throws std::invalid_argument on an unknown name.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);
SuiteLimits suite_limits(Suite suite);
std::vector<Suite> every_suite();

struct VerifyOptions {
    int n_min = 0;
    int n_max = 0;
    int ell = 1;
    int jobs = 1;
    std::uint64_t seed = 1;
    /// When set, glc and strong-glc append one witness record per instance.
    std::ostream* witnesses = nullptr;
    /// Counterexamples kept in the report; all of them are counted.
    std::size_t failure_cap = 100;
};

struct VerificationReport {
    std::string suite;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t instances_checked = 0;
    std::uint64_t failure_count = 0;
    /// Full reproduction data for each counterexample, in canonical order.
    std::vector<json> failures;
    /// Per-n summaries.
    json details = json::array();
    std::vector<VerificationReport> children;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const { return failure_count == 0; }
};

/// Runs one suite over [options.n_min, options.n_max]. Throws
/// std::out_of_range if the range falls outside the suite's limits or ell is
/// invalid for strong-composition. Suite::all runs every suite over its
/// default range.
VerificationReport run_suite(Suite suite, const VerifyOptions& options);

/// Report schema; timing is left out so reports are reproducible byte for byte.
json report_json(const VerificationReport& report);
VerificationReport report_from_json(const json& j);

} // namespace gracelab
