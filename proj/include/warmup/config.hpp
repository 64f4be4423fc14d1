#pragma once

#include <cstdint>

namespace warmup {

// All tunable analysis constants. Iteration-valued fields are counts of
// in-process iterations; times are seconds.
struct AnalysisConfig {
    int outlier_window = 200;        // sliding window for outlier fences
    double outlier_multiplier = 3.0; // fence = median +/- mult * (p90 - p10)
    int outlier_ignore_prefix = 200; // iterations never flagged as outliers
    double delta_s = 0.001;          // absolute equivalence tolerance (seconds)
    int steady_state_len = 500;      // tail window that must be equivalent
    double penalty_coeff = 15.0;     // changepoint penalty = coeff * log(n)
    int min_segment_len = 2;         // variance needs at least two points
    long long bootstrap_iters = 100000;
    double ci_level = 0.99;
    double iqr_lo = 0.05;
    double iqr_hi = 0.95;
    double aperf_ratio_tolerance = 0.03;
    double idle_core_divisor = 1000.0;
    double georges_cov_threshold = 0.01;
    int georges_window = 30;
    std::uint64_t rng_seed = 0;
};

inline AnalysisConfig default_config() { return AnalysisConfig{}; }

// Throws std::invalid_argument on out-of-range fields.
void validate_config(const AnalysisConfig& cfg);

} // namespace warmup
