#pragma once

#include <complex>
#include <optional>

#include "qdd/bath.hpp"
#include "qdd/coherence.hpp"
#include "qdd/pulse.hpp"

namespace qdd {

// Two-qubit X state in the standard basis. Diagonal (a, b, c, d) and the
// single anti-diagonal coherence z between |00> and |11>. Both qubits dephase
// independently, so only |z| decays while the diagonal is frozen.
struct XState {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double d{0.0};
    std::complex<double> z{0.0, 0.0};
};

// Validates positivity (all diagonal entries >= 0, b c >= |z|^2) and unit
// trace to within 1e-12.
XState make_x_state(double a, double b, double c, double d, std::complex<double> z);

// Wootters concurrence of an X state with a single coherence:
//   C = max(0, 2 (|z| - sqrt(a d)))
double concurrence(const XState& state);

// r = sqrt(a d) / |z|. The coherence signal S(t) crossing r is exactly where
// concurrence hits zero. Throws std::domain_error when z == 0.
double death_ratio(const XState& state);

// State after both qubits dephase with signal S: z -> z S, diagonal fixed.
XState evolve_state(const XState& state, double signal);

double concurrence_at(const XState& state, double signal);

// N-qubit GHZ coherence under independent identical dephasing: the
// |0...0><1...1| element decays by S(t)^{N/2} relative to one qubit's pair
// coherence convention.
struct GhzSpec {
    int qubit_count{2};
};

GhzSpec make_ghz_spec(int qubit_count);

double ghz_coherence(const GhzSpec& ghz, double signal);

// Death time under S(t) = exp(-2 t / t2): t_d = (t2 / 2) ln(1 / r).
// nullopt when concurrence never reaches zero (a d == 0 with z != 0);
// 0 when it is already zero at t = 0 or z == 0.
std::optional<double> death_time_phenomenological(const XState& state,
                                                  const PhenomenologicalModel& model);

// Forward scan controls for the microscopic death search. step == 0 picks
// 0.05 / omega_d.
struct DeathScan {
    double horizon{20.0};
    double step{0.0};
};

struct DeathResult {
    std::optional<double> time;  // first zero crossing, nullopt if none found
    double min_signal{1.0};     // smallest S(t) reached over the scan
};

// Scans t in (0, horizon] for the first t where concurrence_at(state, S(t))
// reaches zero, then bisects to relative tolerance 1e-6.
DeathResult death_time_microscopic(const XState& state, const BathSpec& bath,
                                   SequenceKind kind, int n, const DeathScan& scan,
                                   const QuadratureSpec& quad = {});

}  // namespace qdd
