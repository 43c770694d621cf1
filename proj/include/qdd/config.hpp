#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qdd/numerics.hpp"
#include "qdd/pulse.hpp"

namespace qdd {

// Malformed config text or semantically invalid values. The CLI maps this
// (and any other setup failure) to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Full run description. Time-like values (tmin, tmax, total, horizon, step,
// t2) are in units of omega_d * t by default; the --si flag switches them to
// plain times in 1/[omega_d]. theta shares the frequency units of omega_d.
struct RunConfig {
    // [bath]
    std::vector<double> alphas{0.01};
    double omega_d{1.0};
    double theta{0.0};

    // [sequence]
    std::vector<SequenceKind> kinds{SequenceKind::Uniform, SequenceKind::Uhrig};
    std::vector<int> ns{10};
    std::vector<double> custom_times{};
    double total{1.0};

    // [grid]
    double tmin{0.2};
    double tmax{20.0};
    int points{100};

    // [state]
    double a{0.04};
    double b{0.46};
    double c{0.46};
    double d{0.04};
    double z_re{0.4};
    double z_im{0.0};
    double t2{0.0};  // 0 disables the phenomenological comparison

    // [ghz]
    int ghz_qubits{4};

    // [death]
    double horizon{20.0};
    double step{0.05};

    // [quadrature]
    QuadratureSpec quad{};

    // [output]
    std::string out{"-"};
};

// Parses the strict INI dialect described in the README: [section] headers,
// key = value pairs, full-line comments starting with # or ;. Unknown
// sections, unknown keys, duplicate keys, and malformed values are errors
// that name the offending line.
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<config>");
RunConfig parse_config_file(const std::string& path);

// Semantic checks shared by the parser and by CLI overrides; throws
// ConfigError on the first violated constraint.
void validate_config(const RunConfig& cfg);

// Canonical re-parseable rendering of every key.
std::string dump_config(const RunConfig& cfg);

}  // namespace qdd
