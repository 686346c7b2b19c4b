#include "rggfault/graphcore.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace rggfault {

void UnionFind::reset(std::size_t n) {
    parent_.resize(n);
    set_size_.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    components_ = n;
}

std::uint32_t UnionFind::find(std::uint32_t v) {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];  // path halving
        v = parent_[v];
    }
    return v;
}

bool UnionFind::unite(std::uint32_t a, std::uint32_t b) {
    std::uint32_t ra = find(a);
    std::uint32_t rb = find(b);
    if (ra == rb) return false;
    if (set_size_[ra] < set_size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    set_size_[ra] += set_size_[rb];
    --components_;
    return true;
}

double default_truncation(std::size_t n) { return n >= 1024 ? 1e-4 : 0.0; }

double truncation_radius(const ConnectionModel& model, std::size_t n, double tau) {
    const double support = model.support_radius();
    if (tau <= 0.0 || n < 2) return support;

    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n);
    const double threshold = tau / pairs;
    if (model.connect_probability(0.0) <= threshold) return 0.0;

    double hi = 1.0;
    while (model.connect_probability(hi) > threshold) {
        hi *= 2.0;
        if (hi > 1e9) return support;  // no usable decay within reach
    }
    double lo = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (model.connect_probability(mid) > threshold)
            lo = mid;
        else
            hi = mid;
    }
    // hi satisfies g(hi) <= threshold, so every skipped pair does too.
    return std::min(hi, support);
}

GraphInstance sample_graph(const PointSet& points, const ConnectionModel& model, RandomStream& rng,
                           double tau) {
    GraphInstance g;
    g.node_count = points.size();
    g.generator = model.describe() + " on " + metric_name(points.metric);
    PairScratch scratch;
    for_each_sampled_edge(std::span<const Point>(points.points), points.metric, model, rng, tau,
                          scratch, [&g](std::uint32_t i, std::uint32_t j) {
                              g.edges.emplace_back(i, j);
                              return true;
                          });
    return g;
}

ConnectivityVerdict is_connected(const GraphInstance& graph) {
    ConnectivityVerdict verdict;
    const std::size_t n = graph.node_count;
    if (n <= 1) {
        verdict.connected = true;
        verdict.component_count = n;
        verdict.isolated_count = n;  // a single node has degree 0
        return verdict;
    }
    UnionFind uf;
    uf.reset(n);
    std::vector<std::uint8_t> touched(n, 0);
    for (const auto& [i, j] : graph.edges) {
        if (i >= n || j >= n) throw std::invalid_argument("is_connected: edge index out of range");
        uf.unite(i, j);
        touched[i] = touched[j] = 1;
    }
    verdict.component_count = uf.components();
    verdict.connected = verdict.component_count <= 1;
    verdict.isolated_count =
        static_cast<std::size_t>(std::count(touched.begin(), touched.end(), 0));
    return verdict;
}

bool sampled_graph_connected(std::span<const Point> pts, Metric metric,
                             const ConnectionModel& model, RandomStream& rng, double tau,
                             PairScratch& scratch, UnionFind& uf) {
    const std::size_t n = pts.size();
    if (n <= 1) return true;
    uf.reset(n);
    for_each_sampled_edge(pts, metric, model, rng, tau, scratch,
                          [&uf](std::uint32_t i, std::uint32_t j) {
                              uf.unite(i, j);
                              return uf.components() > 1;  // stop once fully merged
                          });
    return uf.components() <= 1;
}

void write_edge_list(std::ostream& out, const GraphInstance& graph) {
    out << "n " << graph.node_count << '\n';
    for (const auto& [i, j] : graph.edges) out << i << ' ' << j << '\n';
}

}  // namespace rggfault
