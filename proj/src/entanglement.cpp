#include "qdd/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace qdd {

XState make_x_state(double a, double b, double c, double d, std::complex<double> z) {
    if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0) || !(d >= 0.0))
        throw std::invalid_argument("x state: diagonal entries must be >= 0");
    if (std::abs(a + b + c + d - 1.0) > 1e-12)
        throw std::invalid_argument("x state: diagonal must sum to 1");
    if (std::norm(z) > b * c + 1e-12)
        throw std::invalid_argument("x state: positivity requires |z|^2 <= b c");
    return XState{a, b, c, d, z};
}

double concurrence(const XState& state) {
    return std::max(0.0, 2.0 * (std::abs(state.z) - std::sqrt(state.a * state.d)));
}

double death_ratio(const XState& state) {
    const double zmag = std::abs(state.z);
    if (zmag == 0.0) throw std::domain_error("death_ratio: state has no coherence");
    return std::sqrt(state.a * state.d) / zmag;
}

XState evolve_state(const XState& state, double signal) {
    if (!(signal >= 0.0)) throw std::domain_error("evolve_state: signal must be >= 0");
    XState out = state;
    out.z *= signal;
    return out;
}

double concurrence_at(const XState& state, double signal) {
    if (!(signal >= 0.0)) throw std::domain_error("concurrence_at: signal must be >= 0");
    return std::max(0.0, 2.0 * (std::abs(state.z) * signal - std::sqrt(state.a * state.d)));
}

GhzSpec make_ghz_spec(int qubit_count) {
    if (qubit_count < 2) throw std::invalid_argument("ghz spec: needs at least 2 qubits");
    return GhzSpec{qubit_count};
}

double ghz_coherence(const GhzSpec& ghz, double signal) {
    if (ghz.qubit_count < 2) throw std::invalid_argument("ghz_coherence: needs at least 2 qubits");
    if (!(signal >= 0.0)) throw std::domain_error("ghz_coherence: signal must be >= 0");
    return std::pow(signal, ghz.qubit_count / 2.0);
}

std::optional<double> death_time_phenomenological(const XState& state,
                                                  const PhenomenologicalModel& model) {
    if (!(model.t2 > 0.0))
        throw std::invalid_argument("death_time_phenomenological: t2 must be > 0");
    if (std::abs(state.z) == 0.0) return 0.0;
    const double r = death_ratio(state);
    if (r == 0.0) return std::nullopt;  // concurrence stays positive forever
    if (r >= 1.0) return 0.0;
    return 0.5 * model.t2 * std::log(1.0 / r);
}

DeathResult death_time_microscopic(const XState& state, const BathSpec& bath,
                                   SequenceKind kind, int n, const DeathScan& scan,
                                   const QuadratureSpec& quad) {
    if (!(scan.horizon > 0.0))
        throw std::invalid_argument("death_time_microscopic: horizon must be > 0");
    const double step = scan.step > 0.0 ? scan.step : 0.05 / bath.omega_d;

    if (std::abs(state.z) == 0.0 || death_ratio(state) >= 1.0)
        return DeathResult{0.0, 1.0};

    const PulseSequence proto = make_sequence(kind, n, 1.0);
    auto conc = [&](double t, double* sig) {
        const double s = signal_at(bath, proto, t, quad);
        if (sig) *sig = s;
        return concurrence_at(state, s);
    };

    DeathResult out;
    double lo = 0.0;
    double hi = 0.0;
    bool crossed = false;
    for (int k = 1;; ++k) {
        const double t = k * step;
        if (t > scan.horizon * (1.0 + 1e-12)) break;
        double s = 1.0;
        const double c = conc(t, &s);
        out.min_signal = std::min(out.min_signal, s);
        if (c <= 0.0) {
            lo = (k - 1) * step;
            hi = t;
            crossed = true;
            break;
        }
    }
    if (!crossed) return out;

    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (conc(mid, nullptr) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    out.time = 0.5 * (lo + hi);
    return out;
}

}  // namespace qdd
