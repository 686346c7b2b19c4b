#include "rggfault/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rggfault/connmodel.hpp"

namespace rggfault {

namespace {

double require_kappa(double epsilon, const char* where) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw std::invalid_argument(std::string(where) + ": epsilon must be in [0,1)");
    return 1.0 - epsilon;
}

}  // namespace

double critical_radius(std::int64_t n, double c, double b, double epsilon) {
    const double kappa = require_kappa(epsilon, "critical_radius");
    if (n < 1) throw std::invalid_argument("critical_radius: n must be >= 1");
    if (!(c > 0.0)) throw std::invalid_argument("critical_radius: C must be > 0");
    const double num = std::log(static_cast<double>(n)) + b;
    if (!(num > 0.0)) throw std::invalid_argument("critical_radius: ln n + b must be > 0");
    return std::sqrt(num / (c * kappa * static_cast<double>(n)));
}

double asymptotic_breakdown(double b, double epsilon) {
    const double kappa = require_kappa(epsilon, "asymptotic_breakdown");
    return -std::expm1(-kappa * std::exp(-b));
}

double beta_threshold(std::int64_t n, double eta, double epsilon) {
    const double kappa = require_kappa(epsilon, "beta_threshold");
    if (n < 2) throw std::invalid_argument("beta_threshold: n must be >= 2");
    const double c_eta = rayleigh_constant_c(eta);
    const double nd = static_cast<double>(n);
    return std::pow(c_eta * kappa * nd / std::log(nd), 0.5 * eta);
}

double epsilon_threshold(std::int64_t n, double eta, double beta) {
    if (n < 2) throw std::invalid_argument("epsilon_threshold: n must be >= 2");
    if (!(beta > 0.0)) throw std::invalid_argument("epsilon_threshold: beta must be > 0");
    const double c_eta = rayleigh_constant_c(eta);
    const double nd = static_cast<double>(n);
    return 1.0 - std::log(nd) / (c_eta * nd) * std::pow(beta, 2.0 / eta);
}

double epsilon_threshold_cor1(double d) {
    if (!(d >= 1.0)) throw std::invalid_argument("epsilon_threshold_cor1: d must be >= 1");
    return 1.0 / d;
}

double approx_breakdown(const ApproxInputs& in) {
    const double kappa = require_kappa(in.epsilon, "approx_breakdown");
    if (in.n < 2) throw std::invalid_argument("approx_breakdown: n must be >= 2");
    if (!(in.h1 > 0.0)) throw std::invalid_argument("approx_breakdown: H1 must be > 0");
    if (in.boundary == BoundaryMode::SquareFull && !(in.h0 > 0.0))
        throw std::invalid_argument("approx_breakdown: H0 must be > 0 in SquareFull mode");

    const double nd = static_cast<double>(in.n);
    const double ln_kappa = std::log(kappa);
    const double ln_n = std::log(nd);
    const double bulk_rate = 2.0 * std::numbers::pi * kappa * nd * in.h1;

    double exponent = std::exp(ln_kappa + ln_n - bulk_rate);
    if (in.boundary == BoundaryMode::SquareFull) {
        const double ln_h0 = std::log(in.h0);
        exponent += std::exp(std::log(2.0) - ln_h0 - 0.5 * bulk_rate);
        exponent += std::exp(std::log(4.0) - ln_kappa - ln_n - 2.0 * ln_h0 - 0.25 * bulk_rate);
    }
    return -std::expm1(-exponent);
}

double approx_breakdown_rayleigh_delta(std::int64_t n, double eta, double epsilon, double delta) {
    const double kappa = require_kappa(epsilon, "approx_breakdown_rayleigh_delta");
    if (n < 2) throw std::invalid_argument("approx_breakdown_rayleigh_delta: n must be >= 2");
    if (!(delta > 0.0))
        throw std::invalid_argument("approx_breakdown_rayleigh_delta: delta must be > 0");
    if (!(eta >= 1.0)) throw std::invalid_argument("approx_breakdown_rayleigh_delta: eta must be >= 1");
    const double ln_n = std::log(static_cast<double>(n));
    const double exponent_of_n = 1.0 - kappa * std::pow(delta, -2.0 / eta);
    return -std::expm1(-std::exp(std::log(kappa) + exponent_of_n * ln_n));
}

ConsistencyReport asymptotic_consistency_check(const std::vector<std::int64_t>& n_list, double c,
                                               double b, double epsilon) {
    require_kappa(epsilon, "asymptotic_consistency_check");
    ConsistencyReport report;
    const double limit = asymptotic_breakdown(b, epsilon);
    for (const std::int64_t n : n_list) {
        if (n < 2) throw std::invalid_argument("asymptotic_consistency_check: n must be >= 2");
        const double r = critical_radius(n, c, b, epsilon);
        ApproxInputs in;
        in.n = n;
        in.epsilon = epsilon;
        in.h1 = c * r * r / (2.0 * std::numbers::pi);
        in.h0 = 1.0;
        in.boundary = BoundaryMode::SquareFull;
        const double value = approx_breakdown(in);
        report.entries.push_back({n, value, limit, std::fabs(value - limit)});
    }
    report.gaps_strictly_decreasing = report.entries.size() >= 2;
    for (std::size_t i = 1; i < report.entries.size(); ++i) {
        if (!(report.entries[i].gap < report.entries[i - 1].gap))
            report.gaps_strictly_decreasing = false;
    }
    (void)kappa;
    return report;
}

}  // namespace rggfault
