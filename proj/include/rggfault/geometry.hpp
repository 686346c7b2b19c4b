#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rggfault/random.hpp"

namespace rggfault {

/// Distance convention on the unit-area square.
enum class Metric { PlanarSquare, Torus };

std::string metric_name(Metric m);
Metric metric_from_name(const std::string& name);

/// A node position. Coordinates live in the half-open square [0,1)^2 so the
/// torus seam is owned by exactly one side.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct PointSet {
    std::vector<Point> points;
    Metric metric = Metric::Torus;

    std::size_t size() const { return points.size(); }
};

inline double wrap_delta(double d) {
    d = std::fabs(d);
    return d > 0.5 ? 1.0 - d : d;
}

/// Squared distance between two points; the hot path in edge sampling.
inline double distance_sq(const Point& a, const Point& b, Metric metric) {
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    if (metric == Metric::Torus) {
        dx = wrap_delta(dx);
        dy = wrap_delta(dy);
    }
    return dx * dx + dy * dy;
}

inline double distance(const Point& a, const Point& b, Metric metric) {
    return std::sqrt(distance_sq(a, b, metric));
}

/// Exactly n points, i.i.d. uniform on [0,1)^2. Rejects n = 0.
PointSet sample_uniform(std::size_t n, RandomStream& rng, Metric metric = Metric::Torus);

/// Poisson point process: node count ~ Poisson(density), then uniform
/// positions. The count is drawn by an exact inversion-style method.
PointSet sample_poisson(double density, RandomStream& rng, Metric metric = Metric::Torus);

/// Exact Poisson(lambda) count sampler (Knuth product method, with halving
/// for large lambda so the running product stays in normal double range).
std::uint64_t poisson_count(double lambda, RandomStream& rng);

// Appends n uniform points to `out` without touching metric bookkeeping.
void fill_uniform(std::vector<Point>& out, std::size_t n, RandomStream& rng);

}  // namespace rggfault
