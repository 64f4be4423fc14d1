#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace warmup {

// Iteration indices are 1-based everywhere in these types and in external
// formats; loops over raw vectors convert at the point of access.

struct BenchKey {
    std::string machine;
    std::string vm;
    std::string benchmark;

    auto operator<=>(const BenchKey&) const = default;
};

std::string to_string(const BenchKey& key);

// One benchmark run: per-iteration wall-clock times plus optional per-core
// counter deltas (outer index = core, inner = iteration).
struct ProcessExecution {
    BenchKey key;
    int pexec_index = 0;
    std::vector<double> wallclock_times;
    std::vector<std::vector<double>> core_cycles; // empty when absent
    std::vector<std::vector<double>> aperf;
    std::vector<std::vector<double>> mperf;

    int iterations() const { return static_cast<int>(wallclock_times.size()); }
    bool has_counters() const { return !aperf.empty() && !mperf.empty(); }
};

// A changepoint segment: inclusive 1-based span with mean and MLE variance
// of its non-outlier times. Variance is seconds^2 but is read as seconds by
// the segment-equivalence test.
struct Segment {
    int start = 0;
    int end = 0;
    double mean = 0.0;
    double variance = 0.0;

    int length() const { return end - start + 1; }
};

enum class ExecClass { Flat, Warmup, Slowdown, NoSteadyState };
inline constexpr std::array<ExecClass, 4> kExecClasses = {
    ExecClass::Flat, ExecClass::Warmup, ExecClass::Slowdown,
    ExecClass::NoSteadyState};

std::string to_string(ExecClass cls);

enum class PairClassKind {
    Flat,
    Warmup,
    Slowdown,
    NoSteadyState,
    GoodInconsistent,
    BadInconsistent
};

std::string to_string(PairClassKind kind);

struct PairClass {
    PairClassKind kind = PairClassKind::Flat;
    std::map<ExecClass, int> counts; // constituent executions per class

    // "bad inconsistent (22 slowdown, 8 warmup)" style rendering.
    std::string label() const;
};

struct ClassifiedExecution {
    const ProcessExecution* execution = nullptr; // owned by the ResultsSet
    std::vector<int> outliers;                   // sorted 1-based indices
    std::vector<Segment> segments;               // tile [1, N]
    ExecClass classification = ExecClass::Flat;
    // Present iff classification != NoSteadyState.
    std::optional<int> steady_segment_index; // 0-based into segments
    std::optional<int> steady_start_iter;    // 1-based
    std::optional<double> steady_elapsed_s;
};

} // namespace warmup
