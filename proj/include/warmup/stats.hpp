#pragma once

#include <span>
#include <vector>

namespace warmup {

double mean_of(std::span<const double> values);

// MLE variance: sum of squared deviations / n.
double variance_mle(std::span<const double> values);

// Unbiased sample standard deviation (n - 1 denominator).
double sample_stddev(std::span<const double> values);

// Linear-interpolation percentile: sorts a copy, position q * (n - 1).
// Throws std::invalid_argument on empty input or q outside [0, 1].
double percentile(std::span<const double> values, double q);

// Same rule on data already sorted ascending.
double percentile_sorted(std::span<const double> sorted, double q);

// Closed-interval intersection test.
bool intervals_overlap(double lo1, double hi1, double lo2, double hi2);

// Median with (iqr_lo, iqr_hi) percentiles; sample vector retained for
// thumbnail histograms.
struct IqrStat {
    double median = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> samples;
};

IqrStat iqr_stat(std::vector<double> samples, double q_lo, double q_hi);

struct MeanCi {
    double mean = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double level = 0.0;
};

} // namespace warmup
