#include "rggfault/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace rggfault {

namespace {

double simpson_recurse(const std::function<double(double)>& f, double a, double b,
                       double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double integrate_half_line(const std::function<double(double)>& f,
                           const std::function<double(double)>& tail_envelope,
                           double abs_tol) {
    constexpr int kMaxOctaves = 80;
    const double tail_tol = 0.05 * abs_tol;

    double total = adaptive_simpson(f, 0.0, 1.0, 0.25 * abs_tol);
    double r = 1.0;
    for (int octave = 0; octave < kMaxOctaves; ++octave) {
        const double bound = tail_envelope(r);
        if (std::isfinite(bound) && bound < tail_tol) return total;
        total += adaptive_simpson(f, r, 2.0 * r, 0.25 * abs_tol);
        r *= 2.0;
    }
    throw std::domain_error("integrate_half_line: integral does not converge (tail bound never collapses)");
}

}  // namespace rggfault
