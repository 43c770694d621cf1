#include "qdd/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdd/numerics.hpp"

namespace qdd {

namespace {

void check_sequence_args(int n, double total) {
    if (n < 0) throw std::invalid_argument("pulse sequence: n must be >= 0");
    if (!(total > 0.0)) throw std::invalid_argument("pulse sequence: total must be > 0");
}

}  // namespace

std::string to_string(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::Uniform: return "uniform";
        case SequenceKind::Uhrig: return "uhrig";
        case SequenceKind::Custom: return "custom";
    }
    throw std::logic_error("to_string: bad SequenceKind");
}

SequenceKind sequence_kind_from_string(const std::string& name) {
    if (name == "uniform") return SequenceKind::Uniform;
    if (name == "uhrig") return SequenceKind::Uhrig;
    if (name == "custom") return SequenceKind::Custom;
    throw std::invalid_argument("unknown sequence kind: '" + name + "'");
}

PulseSequence uniform_sequence(int n, double total) {
    check_sequence_args(n, total);
    std::vector<double> times(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) times[j - 1] = static_cast<double>(j) * total / (n + 1);
    return PulseSequence{std::move(times), total, SequenceKind::Uniform};
}

PulseSequence uhrig_sequence(int n, double total) {
    check_sequence_args(n, total);
    std::vector<double> times(static_cast<std::size_t>(n));
    // Fill the lower half from sin^2 and mirror the rest so that
    // T_j + T_{n+1-j} == total exactly.
    for (int j = 1; j <= n; ++j) {
        if (2 * j < n + 1) {
            const double s = std::sin(std::numbers::pi * j / (2.0 * (n + 1)));
            times[j - 1] = total * s * s;
        } else if (2 * j == n + 1) {
            times[j - 1] = 0.5 * total;
        } else {
            times[j - 1] = total - times[static_cast<std::size_t>(n - j)];
        }
    }
    return PulseSequence{std::move(times), total, SequenceKind::Uhrig};
}

PulseSequence custom_sequence(std::vector<double> times, double total) {
    if (!(total > 0.0)) throw std::invalid_argument("pulse sequence: total must be > 0");
    double prev = 0.0;
    for (double t : times) {
        if (!(t > prev)) throw std::invalid_argument("pulse sequence: times must be strictly increasing and > 0");
        prev = t;
    }
    if (!times.empty() && !(times.back() < total))
        throw std::invalid_argument("pulse sequence: times must be strictly inside (0, total)");
    return PulseSequence{std::move(times), total, SequenceKind::Custom};
}

PulseSequence make_sequence(SequenceKind kind, int n, double total) {
    switch (kind) {
        case SequenceKind::Uniform: return uniform_sequence(n, total);
        case SequenceKind::Uhrig: return uhrig_sequence(n, total);
        case SequenceKind::Custom:
            throw std::invalid_argument("make_sequence: custom sequences need explicit times");
    }
    throw std::logic_error("make_sequence: bad SequenceKind");
}

int switching_function(const PulseSequence& seq, double t) {
    if (!(t >= 0.0) || !(t <= seq.total))
        throw std::domain_error("switching_function: t outside [0, total]");
    // Right-continuity: a pulse at exactly t has already flipped the sign.
    const auto flips = std::upper_bound(seq.times.begin(), seq.times.end(), t) - seq.times.begin();
    return (flips % 2 == 0) ? 1 : -1;
}

FilterValue filter_exact(const PulseSequence& seq, double omega) {
    if (!(omega >= 0.0)) throw std::domain_error("filter_exact: omega must be >= 0");
    const int n = seq.pulse_count();
    const double total = seq.total;
    const double end_sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}

    std::complex<double> f;
    if (std::abs(omega * total) < 1e-4) {
        // bracket(omega) vanishes at omega = 0; expand bracket/omega in
        // moments S_m = (-1)^{n+1} T^m + 2 sum_j (-1)^j T_j^m:
        //   f = -i sum_{m>=1} (-i)^m S_m omega^{m-1} / m!
        std::complex<double> sum = 0.0;
        std::complex<double> iw_pow = 1.0;  // (-i omega)^{m-1}
        double factorial = 1.0;
        for (int m = 1; m <= 6; ++m) {
            factorial *= m;
            double moment = end_sign * std::pow(total, m);
            double sign = -1.0;
            for (double tj : seq.times) {
                moment += 2.0 * sign * std::pow(tj, m);
                sign = -sign;
            }
            sum += std::complex<double>(0.0, -1.0) * iw_pow * (moment / factorial);
            iw_pow *= std::complex<double>(0.0, -omega);
        }
        f = std::complex<double>(0.0, -1.0) * sum;
    } else {
        std::complex<double> bracket = 1.0 + end_sign * std::polar(1.0, -omega * total);
        double sign = -1.0;
        for (double tj : seq.times) {
            bracket += 2.0 * sign * std::polar(1.0, -omega * tj);
            sign = -sign;
        }
        f = std::complex<double>(0.0, -1.0) * bracket / omega;
    }
    return FilterValue{f, std::norm(f)};
}

double filter_uniform_closed(int n, double total, double omega) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("filter_uniform_closed: requires even n >= 2");
    if (!(total > 0.0)) throw std::invalid_argument("filter_uniform_closed: total must be > 0");
    if (!(omega >= 0.0)) throw std::domain_error("filter_uniform_closed: omega must be >= 0");

    const double x = omega * total / (2.0 * n + 2.0);
    const double half_pi = std::numbers::pi / 2.0;
    // nearest odd multiple of pi/2
    const double k = std::round(x / std::numbers::pi - 0.5);
    const double pole = (2.0 * k + 1.0) * half_pi;
    if (std::abs(x - pole) < 1e-6)
        throw FilterPoleError("filter_uniform_closed: omega within 1e-6 of a tan pole", omega);

    if (std::abs(omega * total) < 1e-4) {
        // tan(x)/x series keeps the omega -> 0 limit exact: 4 (T/(2n+2))^2.
        const double x2 = x * x;
        const double ratio = 1.0 + x2 / 3.0 + 2.0 * x2 * x2 / 15.0;
        const double a = total / (2.0 * n + 2.0);
        const double c = std::cos(omega * total / 2.0);
        return 4.0 * a * a * ratio * ratio * c * c;
    }
    const double tn = std::tan(x);
    const double c = std::cos(omega * total / 2.0);
    return 4.0 * tn * tn * c * c / (omega * omega);
}

double filter_uhrig_approx(int n, double total, double omega) {
    if (n < 1) throw std::invalid_argument("filter_uhrig_approx: requires n >= 1");
    if (!(total > 0.0)) throw std::invalid_argument("filter_uhrig_approx: total must be > 0");
    if (!(omega >= 0.0)) throw std::domain_error("filter_uhrig_approx: omega must be >= 0");

    const double pref = 16.0 * (n + 1.0) * (n + 1.0);
    const double x = omega * total / 2.0;
    if (std::abs(omega * total) < 1e-4) {
        // J_{n+1}(x)^2/omega^2 ~ (T/2)^2 (x/2)^{2n} / (n+1)!^2 with the first
        // series correction; vanishes at omega = 0 since n+1 >= 2.
        if (omega == 0.0) return 0.0;
        double lead = 1.0;
        for (int k = 1; k <= n + 1; ++k) lead *= (x / 2.0) / k;  // (x/2)^{n+1}/(n+1)!
        const double corr = 1.0 - x * x / (4.0 * (n + 2.0));
        const double j = lead * corr;
        return pref * j * j / (omega * omega);
    }
    const double j = bessel_jn(n + 1, x);
    return pref * j * j / (omega * omega);
}

}  // namespace qdd
