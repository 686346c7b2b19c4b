#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

namespace rggfault {

enum class ModelKind { HardDisk, RayleighSISO, RescaledGeneric };

enum class CheckStatus { Pass, Fail, Unverified };

struct ConditionCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<ConditionCheck> checks;

    bool all_passed() const;  // Unverified does not count as failure
    bool has_failure() const;
};

/// Constant C of the Rayleigh profile family: C_eta = (2*pi/eta) * Gamma(2/eta).
double rayleigh_constant_c(double eta);

/// A rotationally invariant connection function g with its parameters.
///
/// Built-ins:
///   HardDisk(range)        g(r) = 1 for r <= range, else 0
///   RayleighSISO(beta,eta) g(r) = exp(-beta * r^eta)
///   RescaledGeneric        tabulated profile evaluated at r/scale,
///                          linear interpolation, 0 beyond the table
///
/// Values are immutable after construction and safe to share across threads.
class ConnectionModel {
public:
    static ConnectionModel hard_disk(double range);
    static ConnectionModel rayleigh(double beta, double eta);
    /// Rayleigh model with the SNR provenance kept: beta = theta * beta0.
    static ConnectionModel rayleigh_from_snr(double snr_threshold, double beta0, double eta);
    static ConnectionModel tabulated(std::vector<double> radii, std::vector<double> values,
                                     double scale = 1.0);
    /// Parses the two-column "r g(r)" plain-text profile format ('#' comments).
    static ConnectionModel tabulated_from_stream(std::istream& in, double scale = 1.0);
    static ConnectionModel tabulated_from_file(const std::string& path, double scale = 1.0);

    ModelKind kind() const { return kind_; }

    /// Connection probability at distance r. Rejects r < 0.
    double connect_probability(double r) const;

    /// Connection probability from squared distance; avoids the sqrt for the
    /// analytic kinds.
    double probability_from_sq(double r_sq) const;

    /// m-th moment H_m = integral of g(r) r^m dr over [0, inf) of the model
    /// as parameterized. Closed forms for the analytic kinds, adaptive
    /// quadrature (absolute tolerance 1e-10) otherwise.
    double moment(int m) const;

    /// H_m of the unscaled profile (scale = 1, beta = 1).
    double unscaled_moment(int m) const;

    /// C = integral of g(|x|) over the plane for the unscaled profile,
    /// i.e. 2*pi*H1(unscaled).
    double constant_c() const;

    /// Radius beyond which g is exactly zero; +inf when unbounded.
    double support_radius() const;

    /// Checks the connection-function conditions: range, monotonicity,
    /// finiteness of C, and sufficiently fast decay (analytic for built-ins,
    /// unverifiable beyond the table for tabulated profiles).
    ValidationReport validate_conditions() const;

    std::string describe() const;

    double range() const { return range_; }
    double beta() const { return beta_; }
    double eta() const { return eta_; }
    double scale() const { return scale_; }

private:
    ConnectionModel() = default;

    double tabulated_value(double r) const;  // unscaled profile lookup
    double moment_by_quadrature(int m, double scale, double abs_tol) const;

    ModelKind kind_ = ModelKind::HardDisk;
    double range_ = 1.0;  // hard disk
    double beta_ = 1.0;   // rayleigh
    double eta_ = 2.0;    // rayleigh
    double scale_ = 1.0;  // rescaled generic
    std::vector<double> radii_;
    std::vector<double> values_;
};

}  // namespace rggfault
