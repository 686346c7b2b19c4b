#include "rggfault/faultsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rggfault/parallel.hpp"

namespace rggfault {

FaultModel::FaultModel(double eps) : epsilon(eps) {
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::invalid_argument("FaultModel: epsilon must be in [0,1)");
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = (p + z2 / (2.0 * t)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

double resolve_truncation(double requested, std::size_t n) {
    return requested < 0.0 ? default_truncation(n) : requested;
}

BreakdownEstimate finish(std::uint64_t disconnected, std::uint64_t trials,
                         std::uint64_t master_seed) {
    BreakdownEstimate est;
    est.trials = trials;
    est.disconnected_count = disconnected;
    est.p_hat = trials ? static_cast<double>(disconnected) / static_cast<double>(trials) : 0.0;
    const Interval ci = wilson_interval(disconnected, trials, kZ95);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    est.master_seed = master_seed;
    return est;
}

struct TrialWorkspace {
    std::vector<Point> points;
    std::vector<Point> survivors;
    PairScratch scratch;
    UnionFind uf;
};

}  // namespace

BreakdownEstimate estimate_breakdown(std::size_t n, const ConnectionModel& model,
                                     const FaultModel& fault, Metric metric, std::uint64_t trials,
                                     std::uint64_t master_seed, const SimOptions& options) {
    if (trials == 0) throw std::invalid_argument("estimate_breakdown: trials must be >= 1");
    const double tau = resolve_truncation(options.truncation, n);
    const double eps = fault.epsilon;

    auto make_trial = [&, tau, eps, n]() {
        auto ws = std::make_shared<TrialWorkspace>();
        return [=, &model](std::uint64_t t) -> bool {
            RandomStream point_rng = RandomStream::derive(master_seed, {t, stream_phase::kPoints});
            ws->points.clear();
            fill_uniform(ws->points, n, point_rng);

            RandomStream fault_rng = RandomStream::derive(master_seed, {t, stream_phase::kFaults});
            ws->survivors.clear();
            for (const Point& p : ws->points) {
                if (!(fault_rng.next_double() < eps)) ws->survivors.push_back(p);
            }

            RandomStream edge_rng = RandomStream::derive(master_seed, {t, stream_phase::kEdges});
            const bool connected = sampled_graph_connected(
                std::span<const Point>(ws->survivors), metric, model, edge_rng, tau, ws->scratch,
                ws->uf);
            return !connected;
        };
    };
    const std::uint64_t disconnected = count_over_trials(trials, options.workers, make_trial);
    return finish(disconnected, trials, master_seed);
}

BreakdownEstimate estimate_conditional(std::size_t s, const ConnectionModel& model, Metric metric,
                                       std::uint64_t trials, std::uint64_t master_seed,
                                       const SimOptions& options) {
    if (trials == 0) throw std::invalid_argument("estimate_conditional: trials must be >= 1");
    const double tau = resolve_truncation(options.truncation, s);

    auto make_trial = [&, tau, s]() {
        auto ws = std::make_shared<TrialWorkspace>();
        return [=, &model](std::uint64_t t) -> bool {
            RandomStream point_rng = RandomStream::derive(master_seed, {t, stream_phase::kPoints});
            ws->points.clear();
            fill_uniform(ws->points, s, point_rng);
            RandomStream edge_rng = RandomStream::derive(master_seed, {t, stream_phase::kEdges});
            const bool connected = sampled_graph_connected(
                std::span<const Point>(ws->points), metric, model, edge_rng, tau, ws->scratch,
                ws->uf);
            return !connected;
        };
    };
    const std::uint64_t disconnected = count_over_trials(trials, options.workers, make_trial);
    return finish(disconnected, trials, master_seed);
}

BreakdownEstimate estimate_breakdown_of_graph(const GraphInstance& graph, const FaultModel& fault,
                                              std::uint64_t trials, std::uint64_t master_seed,
                                              const SimOptions& options) {
    if (trials == 0) throw std::invalid_argument("estimate_breakdown_of_graph: trials must be >= 1");
    const std::size_t n = graph.node_count;
    const double eps = fault.epsilon;

    auto make_trial = [&, eps, n]() {
        auto alive = std::make_shared<std::vector<std::uint8_t>>(n, std::uint8_t{0});
        auto uf = std::make_shared<UnionFind>();
        return [=, &graph](std::uint64_t t) -> bool {
            RandomStream fault_rng = RandomStream::derive(master_seed, {t, stream_phase::kFaults});
            std::size_t survivors = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const bool keep = !(fault_rng.next_double() < eps);
                (*alive)[i] = keep;
                survivors += keep;
            }
            if (survivors <= 1) return false;  // connected by convention
            uf->reset(n);
            std::size_t merges = 0;
            for (const auto& [i, j] : graph.edges) {
                if ((*alive)[i] && (*alive)[j] && uf->unite(i, j)) ++merges;
            }
            return merges + 1 != survivors;  // survivors form >1 component
        };
    };
    const std::uint64_t disconnected = count_over_trials(trials, options.workers, make_trial);
    return finish(disconnected, trials, master_seed);
}

Lemma1Grid lemma1_grid(std::size_t n, double epsilon, double delta_n) {
    if (n == 0) throw std::invalid_argument("lemma1_grid: n must be >= 1");
    const double kappa = 1.0 - epsilon;
    if (delta_n <= 0.0) delta_n = std::pow(static_cast<double>(n), -1.0 / 3.0);
    if (!(delta_n < kappa))
        throw std::invalid_argument("lemma1_grid: need 0 < delta_n < kappa");

    Lemma1Grid grid;
    const double nd = static_cast<double>(n);
    grid.s_minus = static_cast<long>(std::ceil((kappa - delta_n) * nd));
    grid.s_plus = static_cast<long>(std::floor((kappa + delta_n) * nd));
    grid.s_plus = std::min<long>(grid.s_plus, static_cast<long>(n));
    grid.s_minus = std::max<long>(grid.s_minus, 0);
    grid.slack = 1.0 / (2.0 * nd * delta_n);

    const long span = grid.s_plus - grid.s_minus;
    if (span <= 32) {
        for (long s = grid.s_minus; s <= grid.s_plus; ++s) grid.s_values.push_back(s);
    } else {
        constexpr int kGridPoints = 16;
        for (int i = 0; i < kGridPoints; ++i) {
            const double f = static_cast<double>(i) / (kGridPoints - 1);
            grid.s_values.push_back(grid.s_minus + static_cast<long>(std::lround(f * span)));
        }
        grid.s_values.erase(std::unique(grid.s_values.begin(), grid.s_values.end()),
                            grid.s_values.end());
    }
    return grid;
}

Lemma1Bounds lemma1_bounds(std::size_t n, const ConnectionModel& model, const FaultModel& fault,
                           Metric metric, std::uint64_t trials_per_s, std::uint64_t master_seed,
                           double delta_n, const SimOptions& options) {
    const Lemma1Grid grid = lemma1_grid(n, fault.epsilon, delta_n);

    Lemma1Bounds bounds;
    bounds.s_minus = grid.s_minus;
    bounds.s_plus = grid.s_plus;
    bounds.delta_n = (delta_n <= 0.0) ? std::pow(static_cast<double>(n), -1.0 / 3.0) : delta_n;
    bounds.slack_vacuous = grid.slack >= 1.0;

    double min_p = 1.0, max_p = 0.0;
    for (std::size_t idx = 0; idx < grid.s_values.size(); ++idx) {
        const long s = grid.s_values[idx];
        double p = 0.0;
        if (s >= 2) {
            // a distinct seed word per s keeps the conditional runs independent
            const auto est = estimate_conditional(static_cast<std::size_t>(s), model, metric,
                                                  trials_per_s,
                                                  mix64(master_seed ^ static_cast<std::uint64_t>(s)),
                                                  options);
            p = est.p_hat;
        }
        bounds.conditional_estimates.emplace_back(s, p);
        min_p = std::min(min_p, p);
        max_p = std::max(max_p, p);
    }
    bounds.lower = (1.0 - grid.slack) * min_p;
    bounds.upper = grid.slack + max_p;
    return bounds;
}

}  // namespace rggfault
