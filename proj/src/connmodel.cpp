#include "rggfault/connmodel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rggfault/quadrature.hpp"

namespace rggfault {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMomentTol = 1e-10;
}  // namespace

bool ValidationReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const ConditionCheck& c) { return c.status == CheckStatus::Fail; });
}

bool ValidationReport::has_failure() const { return !all_passed(); }

double rayleigh_constant_c(double eta) {
    if (!(eta >= 1.0)) throw std::invalid_argument("rayleigh_constant_c: eta must be >= 1");
    return 2.0 * std::numbers::pi / eta * std::tgamma(2.0 / eta);
}

ConnectionModel ConnectionModel::hard_disk(double range) {
    if (!(range > 0.0)) throw std::invalid_argument("hard_disk: range must be > 0");
    ConnectionModel m;
    m.kind_ = ModelKind::HardDisk;
    m.range_ = range;
    return m;
}

ConnectionModel ConnectionModel::rayleigh(double beta, double eta) {
    if (!(beta > 0.0)) throw std::invalid_argument("rayleigh: beta must be > 0");
    if (!(eta >= 1.0)) throw std::invalid_argument("rayleigh: eta must be >= 1");
    ConnectionModel m;
    m.kind_ = ModelKind::RayleighSISO;
    m.beta_ = beta;
    m.eta_ = eta;
    return m;
}

ConnectionModel ConnectionModel::rayleigh_from_snr(double snr_threshold, double beta0, double eta) {
    if (!(snr_threshold > 0.0)) throw std::invalid_argument("rayleigh_from_snr: threshold must be > 0");
    if (!(beta0 > 0.0)) throw std::invalid_argument("rayleigh_from_snr: beta0 must be > 0");
    return rayleigh(snr_threshold * beta0, eta);
}

ConnectionModel ConnectionModel::tabulated(std::vector<double> radii, std::vector<double> values,
                                           double scale) {
    if (radii.size() != values.size() || radii.size() < 2)
        throw std::invalid_argument("tabulated: need >= 2 matching (r, g) samples");
    if (radii.front() != 0.0) throw std::invalid_argument("tabulated: first abscissa must be 0");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]))
            throw std::invalid_argument("tabulated: abscissae must be strictly increasing");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("tabulated: non-finite value");
    if (!(scale > 0.0)) throw std::invalid_argument("tabulated: scale must be > 0");
    ConnectionModel m;
    m.kind_ = ModelKind::RescaledGeneric;
    m.scale_ = scale;
    m.radii_ = std::move(radii);
    m.values_ = std::move(values);
    return m;
}

ConnectionModel ConnectionModel::tabulated_from_stream(std::istream& in, double scale) {
    std::vector<double> radii, values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        double r, g;
        if (!(row >> r)) continue;  // blank or comment-only line
        if (!(row >> g)) {
            throw std::runtime_error("profile line " + std::to_string(lineno) +
                                     ": expected two columns 'r g(r)'");
        }
        radii.push_back(r);
        values.push_back(g);
    }
    return tabulated(std::move(radii), std::move(values), scale);
}

ConnectionModel ConnectionModel::tabulated_from_file(const std::string& path, double scale) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path);
    return tabulated_from_stream(in, scale);
}

double ConnectionModel::tabulated_value(double r) const {
    if (r <= radii_.front()) return std::clamp(values_.front(), 0.0, 1.0);
    if (r >= radii_.back()) {
        return r == radii_.back() ? std::clamp(values_.back(), 0.0, 1.0) : 0.0;
    }
    const auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
    const std::size_t hi = static_cast<std::size_t>(it - radii_.begin());
    const std::size_t lo = hi - 1;
    const double t = (r - radii_[lo]) / (radii_[hi] - radii_[lo]);
    return std::clamp(values_[lo] + t * (values_[hi] - values_[lo]), 0.0, 1.0);
}

double ConnectionModel::connect_probability(double r) const {
    if (r < 0.0) throw std::invalid_argument("connect_probability: r must be >= 0");
    switch (kind_) {
        case ModelKind::HardDisk:
            return r <= range_ ? 1.0 : 0.0;
        case ModelKind::RayleighSISO:
            return std::exp(-beta_ * std::pow(r, eta_));
        case ModelKind::RescaledGeneric:
            return tabulated_value(r / scale_);
    }
    return 0.0;
}

double ConnectionModel::probability_from_sq(double r_sq) const {
    switch (kind_) {
        case ModelKind::HardDisk:
            return r_sq <= range_ * range_ ? 1.0 : 0.0;
        case ModelKind::RayleighSISO:
            if (eta_ == 2.0) return std::exp(-beta_ * r_sq);
            if (eta_ == 4.0) return std::exp(-beta_ * r_sq * r_sq);
            return std::exp(-beta_ * std::pow(r_sq, 0.5 * eta_));
        case ModelKind::RescaledGeneric:
            return tabulated_value(std::sqrt(r_sq) / scale_);
    }
    return 0.0;
}

double ConnectionModel::moment_by_quadrature(int m, double scale, double abs_tol) const {
    // Integrand g(r/scale) r^m; tail envelope from monotone decay:
    // contribution of [R, 2R] is at most g(R) * R^(m+1) * (2^(m+1)-1)/(m+1).
    const auto integrand = [this, m, scale](double r) {
        double g;
        if (kind_ == ModelKind::RayleighSISO) {
            g = std::exp(-beta_ * std::pow(r / scale, eta_));
        } else if (kind_ == ModelKind::HardDisk) {
            g = (r / scale <= range_) ? 1.0 : 0.0;
        } else {
            g = tabulated_value(r / scale);
        }
        return m == 0 ? g : g * std::pow(r, m);
    };
    const double octave_factor = (std::pow(2.0, m + 1) - 1.0) / (m + 1);
    // g evaluated at the octave start bounds the whole block by monotonicity.
    const auto envelope = [this, m, scale, octave_factor](double r) {
        double g;
        if (kind_ == ModelKind::RayleighSISO) {
            g = std::exp(-beta_ * std::pow(r / scale, eta_));
        } else if (kind_ == ModelKind::HardDisk) {
            g = (r / scale <= range_) ? 1.0 : 0.0;
        } else {
            g = tabulated_value(r / scale);
        }
        return g * std::pow(r, m + 1) * octave_factor;
    };
    return integrate_half_line(integrand, envelope, abs_tol);
}

double ConnectionModel::moment(int m) const {
    if (m < 0) throw std::invalid_argument("moment: m must be >= 0");
    switch (kind_) {
        case ModelKind::HardDisk:
            return std::pow(range_, m + 1) / (m + 1);
        case ModelKind::RayleighSISO:
            return std::tgamma((m + 1.0) / eta_) / (eta_ * std::pow(beta_, (m + 1.0) / eta_));
        case ModelKind::RescaledGeneric:
            return moment_by_quadrature(m, scale_, kMomentTol);
    }
    return 0.0;
}

double ConnectionModel::unscaled_moment(int m) const {
    if (m < 0) throw std::invalid_argument("unscaled_moment: m must be >= 0");
    switch (kind_) {
        case ModelKind::HardDisk:
            return 1.0 / (m + 1);
        case ModelKind::RayleighSISO:
            return std::tgamma((m + 1.0) / eta_) / eta_;
        case ModelKind::RescaledGeneric:
            return moment_by_quadrature(m, 1.0, kMomentTol);
    }
    return 0.0;
}

double ConnectionModel::constant_c() const {
    return 2.0 * std::numbers::pi * unscaled_moment(1);
}

double ConnectionModel::support_radius() const {
    switch (kind_) {
        case ModelKind::HardDisk:
            return range_;
        case ModelKind::RayleighSISO:
            return kInf;
        case ModelKind::RescaledGeneric: {
            // Last abscissa with a nonzero value; zero tail can be cut exactly.
            for (std::size_t i = radii_.size(); i-- > 0;) {
                if (values_[i] > 0.0) {
                    return (i + 1 < radii_.size() ? radii_[i + 1] : radii_.back()) * scale_;
                }
            }
            return 0.0;
        }
    }
    return kInf;
}

ValidationReport ConnectionModel::validate_conditions() const {
    ValidationReport report;
    auto add = [&report](std::string name, CheckStatus st, std::string detail) {
        report.checks.push_back({std::move(name), st, std::move(detail)});
    };

    if (kind_ == ModelKind::RescaledGeneric) {
        bool in_range = true;
        for (double v : values_)
            if (v < 0.0 || v > 1.0) in_range = false;
        add("range [0,1]", in_range ? CheckStatus::Pass : CheckStatus::Fail,
            in_range ? "all table values in [0,1]" : "table value outside [0,1]");

        bool monotone = true;
        std::size_t bad = 0;
        for (std::size_t i = 1; i < values_.size(); ++i) {
            if (values_[i] > values_[i - 1] + 1e-12) {
                monotone = false;
                bad = i;
                break;
            }
        }
        add("monotone non-increasing", monotone ? CheckStatus::Pass : CheckStatus::Fail,
            monotone ? "table is non-increasing"
                     : "g increases between r=" + std::to_string(radii_[bad - 1]) +
                           " and r=" + std::to_string(radii_[bad]));

        double c = 0.0;
        bool finite = true;
        try {
            c = constant_c();
        } catch (const std::exception&) {
            finite = false;
        }
        add("finite positive C", (finite && c > 0.0) ? CheckStatus::Pass : CheckStatus::Fail,
            finite ? "C = " + std::to_string(c) : "integral diverges");

        add("decay g = o(1/(r^2 ln^2 r))", CheckStatus::Unverified,
            "profile is zero beyond the table; decay rate unverifiable numerically");
        return report;
    }

    // Analytic kinds: sampled-grid checks plus analytic decay.
    bool in_range = true, monotone = true;
    const double r_hi = (kind_ == ModelKind::HardDisk) ? 2.0 * range_
                                                       : 4.0 * std::pow(1.0 / beta_, 1.0 / eta_) + 1.0;
    double prev = connect_probability(0.0);
    for (int i = 0; i <= 512; ++i) {
        const double r = r_hi * i / 512.0;
        const double g = connect_probability(r);
        if (g < 0.0 || g > 1.0) in_range = false;
        if (g > prev + 1e-12) monotone = false;
        prev = g;
    }
    add("range [0,1]", in_range ? CheckStatus::Pass : CheckStatus::Fail, "sampled grid");
    add("monotone non-increasing", monotone ? CheckStatus::Pass : CheckStatus::Fail, "sampled grid");

    const double c = constant_c();
    add("finite positive C", (std::isfinite(c) && c > 0.0) ? CheckStatus::Pass : CheckStatus::Fail,
        "C = " + std::to_string(c));
    add("decay g = o(1/(r^2 ln^2 r))", CheckStatus::Pass,
        kind_ == ModelKind::HardDisk ? "compact support" : "exponential tail");
    return report;
}

std::string ConnectionModel::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case ModelKind::HardDisk:
            out << "hard-disk(range=" << range_ << ")";
            break;
        case ModelKind::RayleighSISO:
            out << "rayleigh-siso(beta=" << beta_ << ", eta=" << eta_ << ")";
            break;
        case ModelKind::RescaledGeneric:
            out << "tabulated(" << radii_.size() << " samples, scale=" << scale_ << ")";
            break;
    }
    return out.str();
}

}  // namespace rggfault
