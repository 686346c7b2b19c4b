#pragma once

#include <cstdint>
#include <vector>

namespace rggfault {

enum class BoundaryMode { SquareFull, TorusBulkOnly };

/// Inputs of the finite-n breakdown approximation. H0 and H1 are moments of
/// the scaled connection function actually in force (H_m = integral of
/// g_rn(r) r^m dr). SquareFull keeps the domain-edge and corner terms, which
/// need H0 > 0; TorusBulkOnly keeps only the bulk isolated-node term.
struct ApproxInputs {
    std::int64_t n = 2;
    double epsilon = 0.0;
    double h0 = 1.0;
    double h1 = 0.0;
    BoundaryMode boundary = BoundaryMode::TorusBulkOnly;
};

/// Critical radius sqrt((ln n + b) / (C kappa n)); kappa = 1 - epsilon.
/// Rejects ln n + b <= 0.
double critical_radius(std::int64_t n, double c, double b, double epsilon);

/// Limiting breakdown probability 1 - exp(-kappa e^{-b}) at the critical
/// radius schedule.
double asymptotic_breakdown(double b, double epsilon);

/// Rayleigh power-parameter threshold (C_eta kappa n / ln n)^(eta/2).
double beta_threshold(std::int64_t n, double eta, double epsilon);

/// Fault-rate threshold 1 - (ln n / (C_eta n)) beta^(2/eta). May be negative:
/// the network is then below the connectivity threshold even without faults.
double epsilon_threshold(std::int64_t n, double eta, double beta);

/// Threshold 1/d for the radius family r_n(d) = sqrt(d ln n / (C n)), d >= 1.
double epsilon_threshold_cor1(double d);

/// Finite-n approximation of the breakdown probability.
///   TorusBulkOnly: 1 - exp(-kappa n e^{-2 pi kappa n H1})
///   SquareFull adds the domain-edge term (2/H0) e^{-pi kappa n H1} and the
///   corner term (4/(kappa n H0^2)) e^{-pi kappa n H1 / 2}.
/// Exponent terms are assembled in log space so large n cannot overflow.
double approx_breakdown(const ApproxInputs& inputs);

/// Rayleigh model at beta = delta * beta_c(eta): 1 - exp(-kappa n^(1 - kappa
/// * delta^(-2/eta))). At eta = 4 this is the delta-scaling curve.
double approx_breakdown_rayleigh_delta(std::int64_t n, double eta, double epsilon, double delta);

struct ConsistencyEntry {
    std::int64_t n = 0;
    double approx = 0.0;
    double limit = 0.0;
    double gap = 0.0;
};

struct ConsistencyReport {
    std::vector<ConsistencyEntry> entries;
    bool gaps_strictly_decreasing = false;
};

/// Evaluates the square-domain approximation along the critical-radius
/// schedule and reports the gap to the limiting value for each n. H1 follows
/// from C via H1 = C r^2 / (2 pi); the boundary terms use the reference
/// profile normalization H0 = 1.
ConsistencyReport asymptotic_consistency_check(const std::vector<std::int64_t>& n_list, double c,
                                               double b, double epsilon);

}  // namespace rggfault
