#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rggfault {

/// One trial body: given the global trial index, report a boolean outcome.
using TrialFn = std::function<bool(std::uint64_t)>;

/// Runs `trials` independent work items over `workers` threads and returns
/// how many reported true. `make_trial()` is invoked once per worker so each
/// thread owns its scratch state. Items are claimed in batches from a shared
/// counter; each item derives everything it needs from its own index, so the
/// count is identical for any worker count.
std::uint64_t count_over_trials(std::uint64_t trials, unsigned workers,
                                const std::function<TrialFn()>& make_trial);

unsigned resolve_workers(unsigned requested);

}  // namespace rggfault
