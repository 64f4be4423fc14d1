#pragma once

#include <span>
#include <vector>

#include "warmup/config.hpp"

namespace warmup {

// Flags iterations whose time lies strictly outside
//   median(W) +/- outlier_multiplier * (p90(W) - p10(W))
// where W is the centred window of cfg.outlier_window iterations around the
// candidate, [i - w/2, i + w/2 - 1] clipped to [1, N], candidate included.
// Indices <= cfg.outlier_ignore_prefix are never flagged. Returns sorted
// ascending 1-based indices.
std::vector<int> detect_outliers(std::span<const double> times,
                                 const AnalysisConfig& cfg);

} // namespace warmup
