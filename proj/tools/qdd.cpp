#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdd/commands.hpp"

namespace {

int dispatch(const std::string& name, const qdd::CommandOptions& opt, std::ostream& os) {
    if (name == "filter") return qdd::cmd_filter(opt, os);
    if (name == "signal") return qdd::cmd_signal(opt, os);
    if (name == "concurrence") return qdd::cmd_concurrence(opt, os);
    if (name == "death") return qdd::cmd_death(opt, os);
    if (name == "ghz") return qdd::cmd_ghz(opt, os);
    throw std::logic_error("dispatch: unknown subcommand " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherence and entanglement decay under pi-pulse sequences"};
    app.fallthrough(true);
    app.require_subcommand(0, 1);

    std::string config_path;
    bool dump = false;
    bool si = false;
    int jobs = 1;
    std::vector<double> alphas;
    std::vector<int> ns;
    std::vector<std::string> kinds;
    double tmax = 0.0;
    int points = 0;
    double theta = 0.0;
    std::string out;

    app.add_option("--config", config_path, "config file (strict INI)");
    app.add_flag("--dump-config", dump, "print the effective config and exit");
    app.add_flag("--si", si, "time inputs are plain times instead of omega_d*t products");
    app.add_option("--jobs", jobs, "worker threads (0 = all hardware threads)")
        ->check(CLI::NonNegativeNumber);
    auto* opt_alpha =
        app.add_option("--alpha", alphas, "override coupling strengths")->delimiter(',');
    auto* opt_n = app.add_option("--n", ns, "override pulse counts")->delimiter(',');
    auto* opt_kind =
        app.add_option("--kind", kinds, "override sequence kinds (uniform, uhrig, custom)")
            ->delimiter(',');
    auto* opt_tmax = app.add_option("--tmax", tmax, "override the grid upper end");
    auto* opt_points = app.add_option("--points", points, "override the grid point count");
    auto* opt_theta = app.add_option("--theta", theta, "override the bath temperature");
    auto* opt_out = app.add_option("--out", out, "output file ('-' = stdout)");

    app.add_subcommand("filter", "tabulate |f(omega)|^2 for the configured sequences");
    app.add_subcommand("signal", "tabulate the coherence signal S(t)");
    app.add_subcommand("concurrence", "tabulate the two-qubit concurrence C(t)");
    app.add_subcommand("death", "locate entanglement death times");
    app.add_subcommand("ghz", "tabulate the N-qubit GHZ coherence envelope");

    CLI11_PARSE(app, argc, argv);

    try {
        qdd::CommandOptions opt;
        if (!config_path.empty()) opt.cfg = qdd::parse_config_file(config_path);
        opt.si = si;
        opt.jobs = jobs;
        if (opt_alpha->count()) opt.cfg.alphas = alphas;
        if (opt_n->count()) opt.cfg.ns = ns;
        if (opt_kind->count()) {
            opt.cfg.kinds.clear();
            for (const std::string& k : kinds)
                opt.cfg.kinds.push_back(qdd::sequence_kind_from_string(k));
        }
        if (opt_tmax->count()) opt.cfg.tmax = tmax;
        if (opt_points->count()) opt.cfg.points = points;
        if (opt_theta->count()) opt.cfg.theta = theta;
        if (opt_out->count()) opt.cfg.out = out;
        qdd::validate_config(opt.cfg);

        if (dump) {
            std::cout << qdd::dump_config(opt.cfg);
            return 0;
        }

        const auto subs = app.get_subcommands();
        if (subs.empty()) {
            std::cerr << app.help();
            return 2;
        }

        int code;
        if (opt.cfg.out == "-") {
            code = dispatch(subs.front()->get_name(), opt, std::cout);
        } else {
            std::ofstream file(opt.cfg.out, std::ios::binary | std::ios::trunc);
            if (!file) throw qdd::ConfigError("cannot open output file '" + opt.cfg.out + "'");
            code = dispatch(subs.front()->get_name(), opt, file);
        }
        return code;
    } catch (const qdd::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
