#pragma once

#include <span>
#include <vector>

#include "qdd/bath.hpp"
#include "qdd/numerics.hpp"
#include "qdd/pulse.hpp"

namespace qdd {

// Sampled coherence signal S(t) on a time grid. Units: t in 1/omega_d when
// the bath carries physical omega_d, otherwise dimensionless omega_d * t.
struct CoherenceCurve {
    std::vector<double> times;
    std::vector<double> signal;
};

// Markovian single-qubit reference: S(t) = exp(-2 t / t2).
struct PhenomenologicalModel {
    double t2{1.0};
};

double phenomenological_signal(const PhenomenologicalModel& model, double t);

// Decay exponent integral over [0, omega_d]:
//   I = int J(w) (n(w) + 1/2) |f(w)|^2 dw
// The coherence is S = exp(-2 I). The integrand is finite at w = 0: it tends
// to 2 alpha theta |f(0)|^2 for theta > 0 and to 0 for theta = 0.
double decoherence_integral(const BathSpec& bath, const PulseSequence& seq,
                            const QuadratureSpec& quad = {});

// S(t) for a sequence stretched to total duration t. Canonical kinds are
// regenerated with total = t; a Custom sequence requires t <= seq.total and
// keeps only the pulses before t.
double signal_at(const BathSpec& bath, const PulseSequence& seq, double t,
                 const QuadratureSpec& quad = {});

// Same quantity through the even-n uniform closed form of |f|^2. Valid only
// while omega * t / (2n + 2) stays clear of tan poles across the integration
// range, i.e. t < (n + 1) pi / omega_d.
double signal_at_via_closed_form(const BathSpec& bath, int n_even, double t,
                                 const QuadratureSpec& quad = {});

CoherenceCurve signal_curve(const BathSpec& bath, SequenceKind kind, int n,
                            std::span<const double> times, const QuadratureSpec& quad = {});

}  // namespace qdd
