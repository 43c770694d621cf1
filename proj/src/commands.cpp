#include "qdd/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "qdd/coherence.hpp"
#include "qdd/csv.hpp"
#include "qdd/entanglement.hpp"

namespace qdd {

namespace {

namespace fs = std::filesystem;

// Memoized S(t) cells keyed by the full parameter tuple, stored one file per
// cell under QDD_CACHE_DIR. Values round-trip through hexfloat, so a cache
// hit reproduces the computed double bit for bit.
class SignalCache {
public:
    SignalCache() {
        const char* dir = std::getenv("QDD_CACHE_DIR");
        if (dir == nullptr || *dir == '\0') return;
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (!ec || fs::is_directory(dir, ec)) dir_ = dir;
    }

    bool enabled() const { return !dir_.empty(); }

    std::optional<double> load(const std::string& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        std::string stored;
        std::string value;
        if (!std::getline(in, stored) || !std::getline(in, value)) return std::nullopt;
        if (stored != key) return std::nullopt;
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end == value.c_str()) return std::nullopt;
        return v;
    }

    void store(const std::string& key, double value) const {
        std::lock_guard<std::mutex> lock(mu_);
        const std::string final_path = path_for(key);
        const std::string tmp_path = final_path + ".tmp";
        {
            std::ofstream out(tmp_path, std::ios::trunc);
            if (!out) return;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.13a", value);
            out << key << '\n' << buf << '\n';
        }
        std::error_code ec;
        fs::rename(tmp_path, final_path, ec);
    }

private:
    std::string path_for(const std::string& key) const {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : key) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char name[32];
        std::snprintf(name, sizeof name, "%016llx.sig", static_cast<unsigned long long>(h));
        return dir_ + "/" + name;
    }

    std::string dir_;
    mutable std::mutex mu_;
};

std::string cache_key(const BathSpec& bath, SequenceKind kind, int n, double t,
                      const QuadratureSpec& q) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "s1 a=%a wd=%a th=%a k=%s n=%d t=%a rt=%a at=%a ms=%d",
                  bath.alpha, bath.omega_d, bath.theta, to_string(kind).c_str(), n, t,
                  q.rel_tol, q.abs_tol, q.max_subdivisions);
    return buf;
}

void run_parallel(int jobs, int count, const std::function<void(int)>& work) {
    if (jobs == 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<double> make_grid(double lo, double hi, int points) {
    std::vector<double> g(static_cast<std::size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < points; ++i) {
        g[static_cast<std::size_t>(i)] =
            (i + 1 == points) ? hi : lo + i * (hi - lo) / (points - 1);
    }
    return g;
}

struct Combo {
    double alpha;
    int n;  // unused for custom
    SequenceKind kind;
    std::string label;
};

std::string combo_label(SequenceKind kind, int n, double alpha) {
    if (kind == SequenceKind::Custom) return "custom_a" + csv::format(alpha);
    return to_string(kind) + "_n" + std::to_string(n) + "_a" + csv::format(alpha);
}

std::vector<Combo> make_combos(const RunConfig& cfg) {
    std::vector<Combo> combos;
    for (double alpha : cfg.alphas)
        for (SequenceKind kind : cfg.kinds) {
            if (kind == SequenceKind::Custom) {
                combos.push_back({alpha, -1, kind, combo_label(kind, -1, alpha)});
            } else {
                for (int n : cfg.ns) combos.push_back({alpha, n, kind, combo_label(kind, n, alpha)});
            }
        }
    return combos;
}

XState state_from_config(const RunConfig& cfg) {
    try {
        return make_x_state(cfg.a, cfg.b, cfg.c, cfg.d, {cfg.z_re, cfg.z_im});
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: [state] ") + e.what());
    }
}

// Time-like config values are omega_d*t products by default and plain times
// under --si; internal computations always use plain times.
double to_real_time(const CommandOptions& opt, double value) {
    return opt.si ? value : value / opt.cfg.omega_d;
}

struct SignalTable {
    std::vector<double> t_in;    // grid in input units, echoed to the output
    std::vector<double> t_real;
    std::vector<Combo> combos;
    std::vector<double> values;  // row-major [time][combo]
    std::vector<char> failed;
    int failures{0};
};

SignalTable compute_signal_table(const CommandOptions& opt) {
    const RunConfig& cfg = opt.cfg;
    SignalTable table;
    table.t_in = make_grid(cfg.tmin, cfg.tmax, cfg.points);
    table.t_real.reserve(table.t_in.size());
    for (double t : table.t_in) table.t_real.push_back(to_real_time(opt, t));
    table.combos = make_combos(cfg);

    const double total_real = to_real_time(opt, cfg.total);
    std::vector<PulseSequence> protos;
    protos.reserve(table.combos.size());
    for (const Combo& c : table.combos) {
        if (c.kind == SequenceKind::Custom) {
            std::vector<double> times_real;
            times_real.reserve(cfg.custom_times.size());
            for (double tj : cfg.custom_times) times_real.push_back(to_real_time(opt, tj));
            protos.push_back(custom_sequence(std::move(times_real), total_real));
            if (table.t_real.back() > total_real * (1.0 + 1e-12))
                throw ConfigError("config: [grid] tmax exceeds the custom sequence duration");
        } else {
            protos.push_back(make_sequence(c.kind, c.n, 1.0));
        }
    }

    const std::size_t rows = table.t_in.size();
    const std::size_t cols = table.combos.size();
    table.values.assign(rows * cols, 0.0);
    table.failed.assign(rows * cols, 0);

    SignalCache cache;
    std::atomic<int> failures{0};
    run_parallel(opt.jobs, static_cast<int>(rows * cols), [&](int idx) {
        const std::size_t row = static_cast<std::size_t>(idx) / cols;
        const std::size_t col = static_cast<std::size_t>(idx) % cols;
        const Combo& c = table.combos[col];
        const BathSpec bath = BathSpec::ohmic(c.alpha, cfg.omega_d, cfg.theta);
        const double t = table.t_real[row];
        try {
            double value;
            const bool cacheable = c.kind != SequenceKind::Custom && cache.enabled();
            const std::string key =
                cacheable ? cache_key(bath, c.kind, c.n, t, cfg.quad) : std::string{};
            if (cacheable) {
                if (auto hit = cache.load(key)) {
                    table.values[static_cast<std::size_t>(idx)] = *hit;
                    return;
                }
            }
            value = signal_at(bath, protos[col], t, cfg.quad);
            if (cacheable) cache.store(key, value);
            table.values[static_cast<std::size_t>(idx)] = value;
        } catch (const ConvergenceError&) {
            table.failed[static_cast<std::size_t>(idx)] = 1;
            table.values[static_cast<std::size_t>(idx)] =
                std::numeric_limits<double>::quiet_NaN();
            failures.fetch_add(1);
        }
    });
    table.failures = failures.load();
    return table;
}

void write_run_comments(std::ostream& os, const CommandOptions& opt, const std::string& name) {
    const RunConfig& cfg = opt.cfg;
    csv::comment(os, "qdd " + name);
    csv::comment(os, "omega_d = " + csv::format(cfg.omega_d) + ", theta = " +
                         csv::format(cfg.theta) +
                         ", time units = " + (opt.si ? "1/omega_d" : "omega_d*t"));
}

int finish_table(std::ostream& os, int failures) {
    if (failures > 0) {
        csv::comment(os, "warning: " + std::to_string(failures) +
                             " cell(s) failed to converge and were written as nan");
        return 1;
    }
    return 0;
}

}  // namespace

int cmd_filter(const CommandOptions& opt, std::ostream& os) {
    const RunConfig& cfg = opt.cfg;
    const double total_real = to_real_time(opt, cfg.total);

    struct FilterCombo {
        SequenceKind kind;
        int n;
        bool closed;
        std::string label;
        PulseSequence seq;
    };
    std::vector<FilterCombo> combos;
    for (SequenceKind kind : cfg.kinds) {
        if (kind == SequenceKind::Custom) {
            std::vector<double> times_real;
            for (double tj : cfg.custom_times) times_real.push_back(to_real_time(opt, tj));
            combos.push_back(
                {kind, -1, false, "custom", custom_sequence(std::move(times_real), total_real)});
        } else {
            for (int n : cfg.ns) {
                const bool closed = (kind == SequenceKind::Uniform && n >= 2 && n % 2 == 0) ||
                                    (kind == SequenceKind::Uhrig && n >= 1);
                combos.push_back({kind, n, closed,
                                  to_string(kind) + "_n" + std::to_string(n),
                                  make_sequence(kind, n, total_real)});
            }
        }
    }

    write_run_comments(os, opt, "filter");
    csv::comment(os, "sequence total = " + csv::format(cfg.total) +
                         ", omega grid in units of " + (opt.si ? "[omega_d]" : "omega_d"));
    std::vector<std::string> names{"omega"};
    for (const FilterCombo& c : combos) {
        names.push_back("F2_" + c.label);
        if (c.closed)
            names.push_back((c.kind == SequenceKind::Uniform ? "F2closed_" : "F2approx_") +
                            c.label);
    }
    csv::header(os, names);

    const std::vector<double> grid = make_grid(cfg.tmin, cfg.tmax, cfg.points);
    for (double w_in : grid) {
        const double w = opt.si ? w_in : w_in * cfg.omega_d;
        std::vector<std::string> cells{csv::format(w_in)};
        for (const FilterCombo& c : combos) {
            cells.push_back(csv::format(filter_exact(c.seq, w).abs_squared));
            if (!c.closed) continue;
            if (c.kind == SequenceKind::Uniform) {
                try {
                    cells.push_back(csv::format(filter_uniform_closed(c.n, total_real, w)));
                } catch (const FilterPoleError&) {
                    cells.push_back("");
                }
            } else {
                cells.push_back(csv::format(filter_uhrig_approx(c.n, total_real, w)));
            }
        }
        csv::row(os, cells);
    }
    return 0;
}

int cmd_signal(const CommandOptions& opt, std::ostream& os) {
    const SignalTable table = compute_signal_table(opt);
    write_run_comments(os, opt, "signal");
    std::vector<std::string> names{"t"};
    for (const Combo& c : table.combos) names.push_back("S_" + c.label);
    csv::header(os, names);
    const std::size_t cols = table.combos.size();
    for (std::size_t row = 0; row < table.t_in.size(); ++row) {
        std::vector<std::string> cells{csv::format(table.t_in[row])};
        for (std::size_t col = 0; col < cols; ++col)
            cells.push_back(csv::format(table.values[row * cols + col]));
        csv::row(os, cells);
    }
    return finish_table(os, table.failures);
}

int cmd_concurrence(const CommandOptions& opt, std::ostream& os) {
    const XState state = state_from_config(opt.cfg);
    const SignalTable table = compute_signal_table(opt);

    write_run_comments(os, opt, "concurrence");
    csv::comment(os, "state: a = " + csv::format(opt.cfg.a) + ", b = " + csv::format(opt.cfg.b) +
                         ", c = " + csv::format(opt.cfg.c) + ", d = " + csv::format(opt.cfg.d) +
                         ", z = " + csv::format(opt.cfg.z_re) + " + " +
                         csv::format(opt.cfg.z_im) + "i");
    const bool phenom = opt.cfg.t2 > 0.0;
    std::vector<std::string> names{"t"};
    for (const Combo& c : table.combos) names.push_back("C_" + c.label);
    if (phenom) names.push_back("C_phenom_t2" + csv::format(opt.cfg.t2));
    csv::header(os, names);

    const double t2_real = phenom ? to_real_time(opt, opt.cfg.t2) : 0.0;
    const std::size_t cols = table.combos.size();
    for (std::size_t row = 0; row < table.t_in.size(); ++row) {
        std::vector<std::string> cells{csv::format(table.t_in[row])};
        for (std::size_t col = 0; col < cols; ++col) {
            const double s = table.values[row * cols + col];
            cells.push_back(csv::format(std::isnan(s) ? s : concurrence_at(state, s)));
        }
        if (phenom) {
            const double s = phenomenological_signal({t2_real}, table.t_real[row]);
            cells.push_back(csv::format(concurrence_at(state, s)));
        }
        csv::row(os, cells);
    }
    return finish_table(os, table.failures);
}

int cmd_ghz(const CommandOptions& opt, std::ostream& os) {
    GhzSpec ghz;
    try {
        ghz = make_ghz_spec(opt.cfg.ghz_qubits);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: [ghz] ") + e.what());
    }
    const SignalTable table = compute_signal_table(opt);

    write_run_comments(os, opt, "ghz");
    csv::comment(os, "qubits = " + std::to_string(ghz.qubit_count) +
                         "; G = S^(qubits/2) is the GHZ coherence envelope");
    std::vector<std::string> names{"t"};
    for (const Combo& c : table.combos) names.push_back("G_" + c.label);
    csv::header(os, names);

    const std::size_t cols = table.combos.size();
    for (std::size_t row = 0; row < table.t_in.size(); ++row) {
        std::vector<std::string> cells{csv::format(table.t_in[row])};
        for (std::size_t col = 0; col < cols; ++col) {
            const double s = table.values[row * cols + col];
            cells.push_back(csv::format(std::isnan(s) ? s : ghz_coherence(ghz, s)));
        }
        csv::row(os, cells);
    }
    return finish_table(os, table.failures);
}

int cmd_death(const CommandOptions& opt, std::ostream& os) {
    const RunConfig& cfg = opt.cfg;
    const XState state = state_from_config(cfg);
    for (SequenceKind k : cfg.kinds)
        if (k == SequenceKind::Custom)
            throw ConfigError("config: death scan needs regenerable sequences (uniform or uhrig)");

    const std::vector<Combo> combos = make_combos(cfg);
    const DeathScan scan{to_real_time(opt, cfg.horizon),
                         cfg.step > 0.0 ? to_real_time(opt, cfg.step) : 0.0};

    struct DeathCell {
        DeathResult result;
        bool failed{false};
    };
    std::vector<DeathCell> cells(combos.size());
    std::atomic<int> failures{0};
    run_parallel(opt.jobs, static_cast<int>(combos.size()), [&](int i) {
        const Combo& c = combos[static_cast<std::size_t>(i)];
        const BathSpec bath = BathSpec::ohmic(c.alpha, cfg.omega_d, cfg.theta);
        try {
            cells[static_cast<std::size_t>(i)].result =
                death_time_microscopic(state, bath, c.kind, c.n, scan, cfg.quad);
        } catch (const ConvergenceError&) {
            cells[static_cast<std::size_t>(i)].failed = true;
            failures.fetch_add(1);
        }
    });

    write_run_comments(os, opt, "death");
    csv::comment(os, "death_time is the first zero of the concurrence; 'none' means no zero "
                     "within the horizon");
    csv::header(os, {"kind", "n", "alpha", "death_time", "min_signal"});
    for (std::size_t i = 0; i < combos.size(); ++i) {
        const Combo& c = combos[i];
        std::vector<std::string> row{to_string(c.kind), std::to_string(c.n),
                                     csv::format(c.alpha)};
        if (cells[i].failed) {
            row.push_back("nan");
            row.push_back("nan");
        } else {
            const DeathResult& res = cells[i].result;
            if (res.time)
                row.push_back(csv::format(opt.si ? *res.time : *res.time * cfg.omega_d));
            else
                row.push_back("none");
            row.push_back(csv::format(res.min_signal));
        }
        csv::row(os, row);
    }
    if (cfg.t2 > 0.0) {
        const auto t_d = death_time_phenomenological(state, {to_real_time(opt, cfg.t2)});
        std::vector<std::string> row{"phenomenological", "", ""};
        if (t_d)
            row.push_back(csv::format(opt.si ? *t_d : *t_d * cfg.omega_d));
        else
            row.push_back("none");
        row.push_back("");
        csv::row(os, row);
    }
    return finish_table(os, failures.load());
}

}  // namespace qdd
