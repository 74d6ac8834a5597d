#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace symmcouple {

/// Empirical two-sided equivalence constants with replayable witnesses.
/// Ratios are LHS/RHS of the condition under test (both sides positive);
/// min_ratio <= 1 <= max_ratio is not required.
struct EquivalenceReport {
    double p_used = 1.0;
    long long trials = 0;  // valid (non-skipped) trials
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = 0.0;
    long long min_trial = -1;
    long long max_trial = -1;
    nlohmann::json witness_min;
    nlohmann::json witness_max;
    std::optional<double> passed_at_C;  // set iff the caller supplied a C
    nlohmann::json details;             // per-operation extras

    /// Two-sided equivalence constant observed: max(max_ratio, 1/min_ratio).
    double envelope() const {
        double inv = min_ratio > 0 ? 1.0 / min_ratio : std::numeric_limits<double>::infinity();
        return max_ratio > inv ? max_ratio : inv;
    }

    bool passes(double C) const { return max_ratio <= C && min_ratio >= 1.0 / C; }

    nlohmann::json to_json() const;
};

nlohmann::json json_number(double v);  // -> number, or string for inf/nan

}  // namespace symmcouple
