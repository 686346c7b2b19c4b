#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rggfault/connmodel.hpp"
#include "rggfault/geometry.hpp"
#include "rggfault/graphcore.hpp"

namespace rggfault {

/// Independent node faults with constant probability epsilon in [0,1).
struct FaultModel {
    double epsilon = 0.0;

    explicit FaultModel(double eps);
    double kappa() const { return 1.0 - epsilon; }
};

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

/// Wilson score interval for a binomial proportion; `z` is the normal
/// quantile (1.96 for 95%). Well-behaved near p = 0 and p = 1.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

struct BreakdownEstimate {
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    double ci_low = 0.0;   // 95% Wilson
    double ci_high = 0.0;  // 95% Wilson
    std::uint64_t master_seed = 0;
    std::uint64_t disconnected_count = 0;
};

/// Marks "use the size-based default policy" for the truncation budget.
inline constexpr double kAutoTruncation = -1.0;

struct SimOptions {
    double truncation = kAutoTruncation;  // expected missed edges per graph
    unsigned workers = 0;                 // 0 = hardware concurrency
};

/// Monte Carlo estimate of the expected network breakdown probability: per
/// trial, fresh uniform points, independent node faults, then edge sampling
/// restricted to the survivors; records whether the survival graph is
/// disconnected. Deterministic for a given master seed under any worker
/// count (each trial draws from substreams keyed by its index).
BreakdownEstimate estimate_breakdown(std::size_t n, const ConnectionModel& model,
                                     const FaultModel& fault, Metric metric, std::uint64_t trials,
                                     std::uint64_t master_seed, const SimOptions& options = {});

/// Conditional breakdown probability with exactly s survivors: simulates the
/// s-node ensemble directly (s uniform points, edge sampling, connectivity).
/// At epsilon = 0 this matches estimate_breakdown(n = s) trial for trial.
BreakdownEstimate estimate_conditional(std::size_t s, const ConnectionModel& model, Metric metric,
                                       std::uint64_t trials, std::uint64_t master_seed,
                                       const SimOptions& options = {});

/// Breakdown probability of one frozen graph under node faults: per trial a
/// fault subset is drawn and the induced subgraph's connectivity is checked.
BreakdownEstimate estimate_breakdown_of_graph(const GraphInstance& graph, const FaultModel& fault,
                                              std::uint64_t trials, std::uint64_t master_seed,
                                              const SimOptions& options = {});

struct Lemma1Bounds {
    double lower = 0.0;
    double upper = 1.0;
    long s_minus = 0;
    long s_plus = 0;
    double delta_n = 0.0;
    bool slack_vacuous = false;  // additive slack 1/(2 n delta_n) >= 1
    std::vector<std::pair<long, double>> conditional_estimates;  // (s, p_hat)
};

/// Survivor-count window and slack used by the sandwich bound.
struct Lemma1Grid {
    long s_minus = 0;
    long s_plus = 0;
    double slack = 0.0;
    std::vector<long> s_values;
};

/// delta_n <= 0 selects the default rule n^(-1/3). The window is
/// [ceil((kappa-delta)n), floor((kappa+delta)n)]; all integers when the range
/// has at most 32 values, otherwise 16 evenly spaced values incl. endpoints.
Lemma1Grid lemma1_grid(std::size_t n, double epsilon, double delta_n = 0.0);

/// Sandwich bound on the breakdown probability from conditional estimates:
///   lower = (1 - 1/(2 n delta_n)) * min_s p_hat(s)
///   upper = 1/(2 n delta_n) + max_s p_hat(s)
Lemma1Bounds lemma1_bounds(std::size_t n, const ConnectionModel& model, const FaultModel& fault,
                           Metric metric, std::uint64_t trials_per_s, std::uint64_t master_seed,
                           double delta_n = 0.0, const SimOptions& options = {});

}  // namespace rggfault
