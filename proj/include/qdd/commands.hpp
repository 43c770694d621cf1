#pragma once

#include <ostream>

#include "qdd/config.hpp"

namespace qdd {

struct CommandOptions {
    RunConfig cfg;
    bool si{false};  // time-like inputs are plain times instead of omega_d*t
    int jobs{1};     // worker threads; 0 means all hardware threads
};

// Each command writes one #-commented CSV table to os and returns the
// process exit code: 0 on success, 1 when at least one cell failed to
// converge (failed cells are printed as nan). Setup problems throw
// ConfigError.
int cmd_filter(const CommandOptions& opt, std::ostream& os);
int cmd_signal(const CommandOptions& opt, std::ostream& os);
int cmd_concurrence(const CommandOptions& opt, std::ostream& os);
int cmd_death(const CommandOptions& opt, std::ostream& os);
int cmd_ghz(const CommandOptions& opt, std::ostream& os);

}  // namespace qdd
