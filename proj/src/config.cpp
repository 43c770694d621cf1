#include "qdd/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "qdd/csv.hpp"

namespace qdd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

struct LineContext {
    const std::string& origin;
    int line;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
    }
};

double parse_double(std::string_view v, const LineContext& ctx) {
    double out{};
    const char* first = v.data();
    const char* last = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        ctx.fail("expected a number, got '" + std::string(v) + "'");
    return out;
}

int parse_int(std::string_view v, const LineContext& ctx) {
    int out{};
    const char* first = v.data();
    const char* last = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        ctx.fail("expected an integer, got '" + std::string(v) + "'");
    return out;
}

std::vector<std::string_view> split_list(std::string_view v) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= v.size()) {
        const std::size_t comma = v.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? v.size() : comma;
        parts.push_back(trim(v.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

std::vector<double> parse_double_list(std::string_view v, const LineContext& ctx,
                                      bool allow_empty) {
    if (trim(v).empty()) {
        if (allow_empty) return {};
        ctx.fail("list must not be empty");
    }
    std::vector<double> out;
    for (std::string_view part : split_list(v)) out.push_back(parse_double(part, ctx));
    return out;
}

std::vector<int> parse_int_list(std::string_view v, const LineContext& ctx) {
    if (trim(v).empty()) ctx.fail("list must not be empty");
    std::vector<int> out;
    for (std::string_view part : split_list(v)) out.push_back(parse_int(part, ctx));
    return out;
}

std::vector<SequenceKind> parse_kind_list(std::string_view v, const LineContext& ctx) {
    if (trim(v).empty()) ctx.fail("list must not be empty");
    std::vector<SequenceKind> out;
    for (std::string_view part : split_list(v)) {
        try {
            out.push_back(sequence_kind_from_string(std::string(part)));
        } catch (const std::invalid_argument& e) {
            ctx.fail(e.what());
        }
    }
    return out;
}

}  // namespace

void validate_config(const RunConfig& cfg) {
    auto require = [](bool ok, const char* msg) {
        if (!ok) throw ConfigError(std::string("config: ") + msg);
    };
    require(!cfg.alphas.empty(), "[bath] alpha must have at least one value");
    for (double a : cfg.alphas) require(a >= 0.0, "[bath] alpha values must be >= 0");
    require(cfg.omega_d > 0.0, "[bath] omega_d must be > 0");
    require(cfg.theta >= 0.0, "[bath] theta must be >= 0");
    require(!cfg.kinds.empty(), "[sequence] kind must have at least one value");
    require(!cfg.ns.empty(), "[sequence] n must have at least one value");
    for (int n : cfg.ns) require(n >= 0, "[sequence] n values must be >= 0");
    require(cfg.total > 0.0, "[sequence] total must be > 0");
    for (SequenceKind k : cfg.kinds) {
        if (k == SequenceKind::Custom) {
            try {
                custom_sequence(cfg.custom_times, cfg.total);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("config: [sequence] times: ") + e.what());
            }
        }
    }
    require(cfg.tmin >= 0.0, "[grid] tmin must be >= 0");
    require(cfg.tmax >= cfg.tmin, "[grid] tmax must be >= tmin");
    require(cfg.points >= 1, "[grid] points must be >= 1");
    require(cfg.t2 >= 0.0, "[state] t2 must be >= 0");
    require(cfg.ghz_qubits >= 2, "[ghz] qubits must be >= 2");
    require(cfg.horizon > 0.0, "[death] horizon must be > 0");
    require(cfg.step >= 0.0, "[death] step must be >= 0");
    require(cfg.quad.rel_tol > 0.0, "[quadrature] rel_tol must be > 0");
    require(cfg.quad.abs_tol > 0.0, "[quadrature] abs_tol must be > 0");
    require(cfg.quad.max_subdivisions >= 1, "[quadrature] max_subdivisions must be >= 1");
    require(!cfg.out.empty(), "[output] file must not be empty");
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::string section;
    std::set<std::string> seen;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        LineContext ctx{origin, lineno};
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']') ctx.fail("unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            static const std::set<std::string> known = {"bath",  "sequence", "grid",
                                                        "state", "ghz",      "death",
                                                        "quadrature", "output"};
            if (!known.count(section)) ctx.fail("unknown section [" + section + "]");
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) ctx.fail("expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) ctx.fail("empty key");
        if (section.empty()) ctx.fail("key '" + key + "' appears before any [section]");
        if (!seen.insert(section + "." + key).second)
            ctx.fail("duplicate key '" + key + "' in [" + section + "]");

        if (section == "bath") {
            if (key == "alpha") cfg.alphas = parse_double_list(value, ctx, false);
            else if (key == "omega_d") cfg.omega_d = parse_double(value, ctx);
            else if (key == "theta") cfg.theta = parse_double(value, ctx);
            else ctx.fail("unknown key '" + key + "' in [bath]");
        } else if (section == "sequence") {
            if (key == "kind") cfg.kinds = parse_kind_list(value, ctx);
            else if (key == "n") cfg.ns = parse_int_list(value, ctx);
            else if (key == "times") cfg.custom_times = parse_double_list(value, ctx, true);
            else if (key == "total") cfg.total = parse_double(value, ctx);
            else ctx.fail("unknown key '" + key + "' in [sequence]");
        } else if (section == "grid") {
            if (key == "tmin") cfg.tmin = parse_double(value, ctx);
            else if (key == "tmax") cfg.tmax = parse_double(value, ctx);
            else if (key == "points") cfg.points = parse_int(value, ctx);
            else ctx.fail("unknown key '" + key + "' in [grid]");
        } else if (section == "state") {
            if (key == "a") cfg.a = parse_double(value, ctx);
            else if (key == "b") cfg.b = parse_double(value, ctx);
            else if (key == "c") cfg.c = parse_double(value, ctx);
            else if (key == "d") cfg.d = parse_double(value, ctx);
            else if (key == "z_re") cfg.z_re = parse_double(value, ctx);
            else if (key == "z_im") cfg.z_im = parse_double(value, ctx);
            else if (key == "t2") cfg.t2 = parse_double(value, ctx);
            else ctx.fail("unknown key '" + key + "' in [state]");
        } else if (section == "ghz") {
            if (key == "qubits") cfg.ghz_qubits = parse_int(value, ctx);
            else ctx.fail("unknown key '" + key + "' in [ghz]");
        } else if (section == "death") {
            if (key == "horizon") cfg.horizon = parse_double(value, ctx);
            else if (key == "step") cfg.step = parse_double(value, ctx);
            else ctx.fail("unknown key '" + key + "' in [death]");
        } else if (section == "quadrature") {
            if (key == "rel_tol") cfg.quad.rel_tol = parse_double(value, ctx);
            else if (key == "abs_tol") cfg.quad.abs_tol = parse_double(value, ctx);
            else if (key == "max_subdivisions") cfg.quad.max_subdivisions = parse_int(value, ctx);
            else ctx.fail("unknown key '" + key + "' in [quadrature]");
        } else if (section == "output") {
            if (key == "file") cfg.out = std::string(value);
            else ctx.fail("unknown key '" + key + "' in [output]");
        }
    }

    validate_config(cfg);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

std::string dump_config(const RunConfig& cfg) {
    std::ostringstream os;
    auto num = [](double v) { return csv::format(v); };

    os << "[bath]\n";
    os << "alpha = ";
    for (std::size_t i = 0; i < cfg.alphas.size(); ++i)
        os << (i ? "," : "") << num(cfg.alphas[i]);
    os << "\n";
    os << "omega_d = " << num(cfg.omega_d) << "\n";
    os << "theta = " << num(cfg.theta) << "\n\n";

    os << "[sequence]\n";
    os << "kind = ";
    for (std::size_t i = 0; i < cfg.kinds.size(); ++i)
        os << (i ? "," : "") << to_string(cfg.kinds[i]);
    os << "\n";
    os << "n = ";
    for (std::size_t i = 0; i < cfg.ns.size(); ++i) os << (i ? "," : "") << cfg.ns[i];
    os << "\n";
    os << "times = ";
    for (std::size_t i = 0; i < cfg.custom_times.size(); ++i)
        os << (i ? "," : "") << num(cfg.custom_times[i]);
    os << "\n";
    os << "total = " << num(cfg.total) << "\n\n";

    os << "[grid]\n";
    os << "tmin = " << num(cfg.tmin) << "\n";
    os << "tmax = " << num(cfg.tmax) << "\n";
    os << "points = " << cfg.points << "\n\n";

    os << "[state]\n";
    os << "a = " << num(cfg.a) << "\n";
    os << "b = " << num(cfg.b) << "\n";
    os << "c = " << num(cfg.c) << "\n";
    os << "d = " << num(cfg.d) << "\n";
    os << "z_re = " << num(cfg.z_re) << "\n";
    os << "z_im = " << num(cfg.z_im) << "\n";
    os << "t2 = " << num(cfg.t2) << "\n\n";

    os << "[ghz]\n";
    os << "qubits = " << cfg.ghz_qubits << "\n\n";

    os << "[death]\n";
    os << "horizon = " << num(cfg.horizon) << "\n";
    os << "step = " << num(cfg.step) << "\n\n";

    os << "[quadrature]\n";
    os << "rel_tol = " << num(cfg.quad.rel_tol) << "\n";
    os << "abs_tol = " << num(cfg.quad.abs_tol) << "\n";
    os << "max_subdivisions = " << cfg.quad.max_subdivisions << "\n\n";

    os << "[output]\n";
    os << "file = " << cfg.out << "\n";
    return os.str();
}

}  // namespace qdd
