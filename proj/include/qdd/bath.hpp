#pragma once

#include <cmath>
#include <stdexcept>

namespace qdd {

// Only the Ohmic form is built in; the tag leaves room for other spectra
// without touching the API.
enum class SpectrumKind { Ohmic };

// Dephasing bath: Ohmic spectral density with a hard cutoff, at temperature
// theta expressed as a frequency (hbar = k_B = 1).
struct BathSpec {
    double alpha{0.0};    // dimensionless coupling strength
    double omega_d{1.0};  // cutoff frequency, sets the bath correlation time 1/omega_d
    double theta{0.0};    // temperature as a frequency; 0 means T = 0
    SpectrumKind spectrum{SpectrumKind::Ohmic};

    static BathSpec ohmic(double alpha, double omega_d, double theta = 0.0) {
        if (!(alpha >= 0.0)) throw std::invalid_argument("BathSpec: alpha must be >= 0");
        if (!(omega_d > 0.0)) throw std::invalid_argument("BathSpec: omega_d must be > 0");
        if (!(theta >= 0.0)) throw std::invalid_argument("BathSpec: theta must be >= 0");
        return BathSpec{alpha, omega_d, theta, SpectrumKind::Ohmic};
    }
};

// J(omega) = 2 alpha omega below the cutoff; 0 at and above it (the cutoff
// edge itself maps to 0, fixed for determinism).
inline double spectral_density(const BathSpec& spec, double omega) {
    if (!(omega >= 0.0)) throw std::domain_error("spectral_density: omega must be >= 0");
    if (omega >= spec.omega_d) return 0.0;
    return 2.0 * spec.alpha * omega;
}

// Bose occupation 1/(exp(omega/theta) - 1); identically 0 at theta = 0.
// Divergence at omega -> 0 for theta > 0 is handled by callers, which supply
// the finite J(omega)*n(omega) -> 2 alpha theta limit analytically.
inline double thermal_occupation(const BathSpec& spec, double omega) {
    if (!(omega > 0.0)) throw std::domain_error("thermal_occupation: omega must be > 0");
    if (spec.theta == 0.0) return 0.0;
    return 1.0 / std::expm1(omega / spec.theta);
}

}  // namespace qdd
