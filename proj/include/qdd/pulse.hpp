#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdd {

enum class SequenceKind { Uniform, Uhrig, Custom };

std::string to_string(SequenceKind kind);
SequenceKind sequence_kind_from_string(const std::string& name);

// A train of n instantaneous pi pulses at strictly increasing times inside
// (0, total). n = 0 is free evolution.
struct PulseSequence {
    std::vector<double> times;
    double total{1.0};
    SequenceKind kind{SequenceKind::Custom};

    int pulse_count() const { return static_cast<int>(times.size()); }
};

// T_j = j total/(n+1), j = 1..n.
PulseSequence uniform_sequence(int n, double total);

// T_j = total sin^2(pi j / (2(n+1))), j = 1..n. Times are symmetric about
// total/2 by construction: T_j + T_{n+1-j} == total bit-exactly.
PulseSequence uhrig_sequence(int n, double total);

// Arbitrary sorted pulse times; validated against the sequence invariants.
PulseSequence custom_sequence(std::vector<double> times, double total);

// Dispatch for the canonical kinds; Custom is rejected (it has no generator).
PulseSequence make_sequence(SequenceKind kind, int n, double total);

// Accumulated coupling sign at time t: +1 before the first pulse, flipping
// at each pulse instant, right-continuous (a pulse at exactly t counts).
int switching_function(const PulseSequence& seq, double t);

// f(omega) and |f(omega)|^2; abs_squared is always norm(value).
struct FilterValue {
    std::complex<double> value;
    double abs_squared;
};

// Filter function of the sequence at frequency omega >= 0:
//   f(omega) = -i [1 + (-1)^{n+1} e^{-i w T} + 2 sum_j (-1)^j e^{-i w T_j}] / omega
// evaluated by Taylor series for |omega*total| < 1e-4 (the bracket vanishes
// at omega = 0, so the direct form cancels catastrophically there).
FilterValue filter_exact(const PulseSequence& seq, double omega);

// Thrown by filter_uniform_closed when omega sits too close to a tan pole.
// The exact evaluator has no pole and is the fallback.
class FilterPoleError : public std::domain_error {
  public:
    FilterPoleError(const std::string& msg, double omega)
        : std::domain_error(msg), omega_(omega) {}
    double omega() const noexcept { return omega_; }

  private:
    double omega_;
};

// Closed form for the equidistant sequence, even n only:
//   |f|^2 = 4 tan^2(w T/(2n+2)) cos^2(w T/2) / w^2.
// Poles of tan are removable analytically but not numerically; proximity
// within 1e-6 of a pole (in the tan argument) raises FilterPoleError.
double filter_uniform_closed(int n, double total, double omega);

// Bessel approximation for the sin^2-spaced sequence:
//   |f|^2 ~= 16 (n+1)^2 J_{n+1}(w T/2)^2 / w^2,
// accurate in the band w T/2 <= n; exact-route comparison belongs to tests.
double filter_uhrig_approx(int n, double total, double omega);

}  // namespace qdd
