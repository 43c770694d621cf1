#include "qdd/coherence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdd {

namespace {

double exponent_to_signal(double integral) {
    // The decay exponent is nonnegative by construction; anything beyond
    // quadrature noise signals an inconsistent integrand.
    if (integral < -1e-10)
        throw std::logic_error("coherence: decay exponent came out negative");
    return std::exp(-2.0 * std::max(integral, 0.0));
}

PulseSequence sequence_for_time(const PulseSequence& seq, double t) {
    if (seq.kind == SequenceKind::Custom) {
        if (t > seq.total)
            throw std::invalid_argument("signal_at: t exceeds the custom sequence duration");
        std::vector<double> kept;
        kept.reserve(seq.times.size());
        for (double tj : seq.times)
            if (tj < t) kept.push_back(tj);
        return custom_sequence(std::move(kept), t);
    }
    return make_sequence(seq.kind, seq.pulse_count(), t);
}

}  // namespace

double phenomenological_signal(const PhenomenologicalModel& model, double t) {
    if (!(model.t2 > 0.0)) throw std::invalid_argument("phenomenological_signal: t2 must be > 0");
    if (!(t >= 0.0)) throw std::domain_error("phenomenological_signal: t must be >= 0");
    return std::exp(-2.0 * t / model.t2);
}

double decoherence_integral(const BathSpec& bath, const PulseSequence& seq,
                            const QuadratureSpec& quad) {
    const double wd = bath.omega_d;
    auto integrand = [&](double w) -> double {
        if (w <= 0.0) {
            // J (n + 1/2) |f|^2 -> 2 alpha theta |f(0)|^2 as w -> 0 for
            // theta > 0, and vanishes linearly at theta = 0.
            if (bath.theta > 0.0)
                return 2.0 * bath.alpha * bath.theta * filter_exact(seq, 0.0).abs_squared;
            return 0.0;
        }
        const double jw = spectral_density(bath, w);
        if (jw == 0.0) return 0.0;
        const double occ = thermal_occupation(bath, w);
        return jw * (occ + 0.5) * filter_exact(seq, w).abs_squared;
    };
    const double hint = wd * seq.total / (2.0 * std::numbers::pi);
    return integrate(integrand, 0.0, wd, quad, hint);
}

double signal_at(const BathSpec& bath, const PulseSequence& seq, double t,
                 const QuadratureSpec& quad) {
    if (!(t >= 0.0)) throw std::domain_error("signal_at: t must be >= 0");
    if (t == 0.0) return 1.0;
    const PulseSequence run = sequence_for_time(seq, t);
    return exponent_to_signal(decoherence_integral(bath, run, quad));
}

double signal_at_via_closed_form(const BathSpec& bath, int n_even, double t,
                                 const QuadratureSpec& quad) {
    if (!(t >= 0.0)) throw std::domain_error("signal_at_via_closed_form: t must be >= 0");
    if (t == 0.0) return 1.0;
    if (bath.omega_d * t >= (n_even + 1) * std::numbers::pi)
        throw std::invalid_argument(
            "signal_at_via_closed_form: tan pole inside the integration range; "
            "requires omega_d * t < (n + 1) pi");

    auto integrand = [&](double w) -> double {
        if (w <= 0.0) {
            if (bath.theta > 0.0)
                return 2.0 * bath.alpha * bath.theta * filter_uniform_closed(n_even, t, 0.0);
            return 0.0;
        }
        const double jw = spectral_density(bath, w);
        if (jw == 0.0) return 0.0;
        const double occ = thermal_occupation(bath, w);
        return jw * (occ + 0.5) * filter_uniform_closed(n_even, t, w);
    };
    const double hint = bath.omega_d * t / (2.0 * std::numbers::pi);
    return exponent_to_signal(integrate(integrand, 0.0, bath.omega_d, quad, hint));
}

CoherenceCurve signal_curve(const BathSpec& bath, SequenceKind kind, int n,
                            std::span<const double> times, const QuadratureSpec& quad) {
    const PulseSequence proto = make_sequence(kind, n, 1.0);
    CoherenceCurve curve;
    curve.times.assign(times.begin(), times.end());
    curve.signal.reserve(times.size());
    for (double t : times) curve.signal.push_back(signal_at(bath, proto, t, quad));
    return curve;
}

}  // namespace qdd
