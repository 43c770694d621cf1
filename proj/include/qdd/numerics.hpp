#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace qdd {

// Tolerances for adaptive quadrature. An interval is accepted once its error
// estimate drops below max(abs_tol, rel_tol * |running integral|).
struct QuadratureSpec {
    double rel_tol{1e-8};
    double abs_tol{1e-12};
    int max_subdivisions{1 << 16};
};

// Raised when the subdivision budget runs out before the tolerance is met.
// Carries the best estimate so callers can decide whether to keep it.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_(best_estimate), bound_(error_bound) {}

    double best_estimate() const noexcept { return best_; }
    double error_bound() const noexcept { return bound_; }

private:
    double best_;
    double bound_;
};

// Bessel function of the first kind, integer order >= 0, x >= 0.
// Miller backward recurrence with series fallback for small x.
double bessel_jn(int order, double x);

// Adaptive Gauss-Kronrod (G7, K15) over [lower, upper]. oscillation_hint is
// the expected number of oscillations of the integrand across the interval;
// it seeds the initial partition so no oscillation is straddled by a single
// panel. Throws ConvergenceError if max_subdivisions is exhausted.
double integrate(const std::function<double(double)>& f, double lower, double upper,
                 const QuadratureSpec& spec = {}, double oscillation_hint = 0.0);

}  // namespace qdd
