#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rggfault/connmodel.hpp"
#include "rggfault/geometry.hpp"
#include "rggfault/random.hpp"

namespace rggfault {

struct GraphInstance {
    std::size_t node_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, unique
    std::string generator;  // model / seed provenance, for exports
};

struct ConnectivityVerdict {
    bool connected = true;
    std::size_t component_count = 0;
    std::size_t isolated_count = 0;
};

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    void reset(std::size_t n);
    std::uint32_t find(std::uint32_t v);
    bool unite(std::uint32_t a, std::uint32_t b);  // true when two sets merged
    std::size_t components() const { return components_; }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> set_size_;
    std::size_t components_ = 0;
};

/// Default expected-missed-edges budget for soft connection functions on
/// large instances; below the size threshold sampling is exact.
double default_truncation(std::size_t n);

/// Smallest radius r with pairs*g(r) <= tau merged with the profile support
/// (pairs = n^2/2). Skipping pairs beyond it misses at most tau edges in
/// expectation. tau <= 0 returns the support radius (exact sampling).
double truncation_radius(const ConnectionModel& model, std::size_t n, double tau);

/// Scratch space for cell-grid pair enumeration, reusable across trials.
struct PairScratch {
    std::vector<std::uint32_t> cell_of;
    std::vector<std::uint32_t> cell_start;
    std::vector<std::uint32_t> order;
};

namespace detail {

template <typename Sink>
bool emit_pair(std::span<const Point> pts, Metric metric, const ConnectionModel& model,
               RandomStream& rng, double cut_sq, std::uint32_t i, std::uint32_t j, Sink&& sink) {
    const double d_sq = distance_sq(pts[i], pts[j], metric);
    if (d_sq > cut_sq) return true;
    const double p = model.probability_from_sq(d_sq);
    if (p >= 1.0 || (p > 0.0 && rng.next_double() < p)) {
        return sink(i, j);
    }
    return true;
}

}  // namespace detail

/// Streams each sampled edge into `sink(i, j) -> bool` (return false to stop
/// early). Each unordered pair carries an edge independently with probability
/// g(d(i,j)); pairs beyond the truncation radius for `tau` are skipped. The
/// enumeration order is a pure function of the inputs, so a given stream
/// reproduces the same graph regardless of the caller's threading.
template <typename Sink>
void for_each_sampled_edge(std::span<const Point> pts, Metric metric, const ConnectionModel& model,
                           RandomStream& rng, double tau, PairScratch& scratch, Sink&& sink) {
    const std::size_t n = pts.size();
    if (n < 2) return;

    const double cut = truncation_radius(model, n, tau);
    const double cut_sq = cut * cut;

    std::size_t m = 0;
    if (cut > 0.0 && cut < 0.5) {
        m = static_cast<std::size_t>(1.0 / cut);
        const auto cap = static_cast<std::size_t>(std::sqrt(static_cast<double>(n))) + 1;
        m = std::min(m, cap);
    }

    if (m < 3) {  // neighborhoods would wrap onto themselves; enumerate all pairs
        for (std::uint32_t i = 0; i + 1 < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if (!detail::emit_pair(pts, metric, model, rng, cut_sq, i, j, sink)) return;
        return;
    }

    // Bucket points into an m x m grid of side 1/m >= cut; all pairs within
    // the cut live in the same or an adjacent cell.
    auto& cell_of = scratch.cell_of;
    auto& start = scratch.cell_start;
    auto& order = scratch.order;
    const std::size_t cells = m * m;
    cell_of.resize(n);
    order.resize(n);
    start.assign(cells + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto cx = static_cast<std::size_t>(pts[i].x * static_cast<double>(m));
        auto cy = static_cast<std::size_t>(pts[i].y * static_cast<double>(m));
        if (cx >= m) cx = m - 1;
        if (cy >= m) cy = m - 1;
        cell_of[i] = static_cast<std::uint32_t>(cy * m + cx);
        ++start[cell_of[i] + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    {
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (std::size_t i = 0; i < n; ++i) order[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
    }

    // Half-shell neighbor offsets: each unordered cell pair visited once.
    static constexpr int kOffsets[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
    const bool wrap = (metric == Metric::Torus);
    const auto mi = static_cast<long>(m);

    for (std::size_t cy = 0; cy < m; ++cy) {
        for (std::size_t cx = 0; cx < m; ++cx) {
            const std::size_t c = cy * m + cx;
            const std::uint32_t a0 = start[c], a1 = start[c + 1];
            for (std::uint32_t a = a0; a < a1; ++a)
                for (std::uint32_t b = a + 1; b < a1; ++b) {
                    std::uint32_t i = order[a], j = order[b];
                    if (i > j) std::swap(i, j);
                    if (!detail::emit_pair(pts, metric, model, rng, cut_sq, i, j, sink)) return;
                }
            for (const auto& off : kOffsets) {
                long nx = static_cast<long>(cx) + off[0];
                long ny = static_cast<long>(cy) + off[1];
                if (wrap) {
                    nx = (nx + mi) % mi;
                    ny = (ny + mi) % mi;
                } else if (nx < 0 || nx >= mi || ny < 0 || ny >= mi) {
                    continue;
                }
                const std::size_t d = static_cast<std::size_t>(ny) * m + static_cast<std::size_t>(nx);
                const std::uint32_t b0 = start[d], b1 = start[d + 1];
                for (std::uint32_t a = a0; a < a1; ++a)
                    for (std::uint32_t b = b0; b < b1; ++b) {
                        std::uint32_t i = order[a], j = order[b];
                        if (i > j) std::swap(i, j);
                        if (!detail::emit_pair(pts, metric, model, rng, cut_sq, i, j, sink)) return;
                    }
            }
        }
    }
}

/// Samples a materialized graph instance from a point set and model.
GraphInstance sample_graph(const PointSet& points, const ConnectionModel& model, RandomStream& rng,
                           double tau = 0.0);

/// Union-find connectivity verdict. Graphs with <= 1 node are connected.
ConnectivityVerdict is_connected(const GraphInstance& graph);

/// Streams edge sampling straight into a union-find and reports whether the
/// result is connected, without materializing the edge list. Stops sampling
/// as soon as everything is merged.
bool sampled_graph_connected(std::span<const Point> pts, Metric metric,
                             const ConnectionModel& model, RandomStream& rng, double tau,
                             PairScratch& scratch, UnionFind& uf);

/// Plain-text edge list: header "n <node_count>", then one "i j" per line.
void write_edge_list(std::ostream& out, const GraphInstance& graph);

}  // namespace rggfault
