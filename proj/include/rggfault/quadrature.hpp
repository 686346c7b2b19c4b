#pragma once

#include <functional>

namespace rggfault {

/// Adaptive Simpson integration of f over [a,b] to the given absolute
/// tolerance. Handles integrands with jump discontinuities by subdividing
/// until the local estimate stabilizes (depth-capped).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 52);

/// Integral of f over [0, inf). Accumulates octave blocks [R, 2R] starting
/// at R = 1 and stops once `tail_envelope(R)` — an upper bound on the
/// contribution of [R, 2R], typically obtained from monotone decay — drops
/// below the tolerance. Throws std::domain_error when the envelope never
/// collapses (divergent integral).
double integrate_half_line(const std::function<double(double)>& f,
                           const std::function<double(double)>& tail_envelope,
                           double abs_tol);

}  // namespace rggfault
