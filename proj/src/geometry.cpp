#include "rggfault/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rggfault {

std::string metric_name(Metric m) {
    return m == Metric::Torus ? "torus" : "square";
}

Metric metric_from_name(const std::string& name) {
    if (name == "torus") return Metric::Torus;
    if (name == "square" || name == "planar") return Metric::PlanarSquare;
    throw std::invalid_argument("unknown metric '" + name + "' (expected square|torus)");
}

void fill_uniform(std::vector<Point>& out, std::size_t n, RandomStream& rng) {
    out.reserve(out.size() + n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = rng.next_double();
        double y = rng.next_double();
        out.push_back(Point{x, y});
    }
}

PointSet sample_uniform(std::size_t n, RandomStream& rng, Metric metric) {
    if (n == 0) throw std::invalid_argument("sample_uniform: n must be >= 1");
    PointSet ps;
    ps.metric = metric;
    fill_uniform(ps.points, n, rng);
    return ps;
}

std::uint64_t poisson_count(double lambda, RandomStream& rng) {
    if (!(lambda > 0.0)) throw std::invalid_argument("poisson_count: lambda must be > 0");
    // Sum of independent halves is exact and keeps exp(-lambda) representable.
    std::uint64_t total = 0;
    while (lambda > 500.0) {
        lambda *= 0.5;
        total += poisson_count(lambda, rng);
    }
    const double limit = std::exp(-lambda);
    std::uint64_t k = 0;
    double product = rng.next_double();
    while (product > limit) {
        ++k;
        product *= rng.next_double();
    }
    return total + k;
}

PointSet sample_poisson(double density, RandomStream& rng, Metric metric) {
    if (!(density > 0.0)) throw std::invalid_argument("sample_poisson: density must be > 0");
    PointSet ps;
    ps.metric = metric;
    const std::uint64_t count = poisson_count(density, rng);
    fill_uniform(ps.points, count, rng);
    return ps;
}

}  // namespace rggfault
