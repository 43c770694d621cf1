#include <string>

#include "doctest.h"
#include "qdd/config.hpp"

using namespace qdd;

namespace {

bool mentions(const std::exception& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("defaults survive an empty config") {
    const RunConfig cfg = parse_config_text("");
    CHECK(cfg.alphas == std::vector<double>{0.01});
    CHECK(cfg.omega_d == 1.0);
    CHECK(cfg.theta == 0.0);
    CHECK(cfg.kinds.size() == 2);
    CHECK(cfg.ns == std::vector<int>{10});
    CHECK(cfg.points == 100);
    CHECK(cfg.quad.rel_tol == 1e-8);
    CHECK(cfg.quad.abs_tol == 1e-12);
    CHECK(cfg.quad.max_subdivisions == 65536);
    CHECK(cfg.out == "-");
}

TEST_CASE("a full config parses") {
    const std::string text = R"(
# run description
[bath]
alpha = 0.25, 0.1, 0.01
omega_d = 2
theta = 60

; alternate comment style
[sequence]
kind = uhrig
n = 10, 50

[grid]
tmin = 0.5
tmax = 40
points = 80

[state]
a = 0.05
b = 0.45
c = 0.45
d = 0.05
z_re = 0.2
t2 = 3

[ghz]
qubits = 6

[death]
horizon = 25
step = 0.1

[quadrature]
rel_tol = 1e-9

[output]
file = out.csv
)";
    const RunConfig cfg = parse_config_text(text);
    CHECK(cfg.alphas == std::vector<double>{0.25, 0.1, 0.01});
    CHECK(cfg.omega_d == 2.0);
    CHECK(cfg.theta == 60.0);
    REQUIRE(cfg.kinds.size() == 1);
    CHECK(cfg.kinds[0] == SequenceKind::Uhrig);
    CHECK(cfg.ns == std::vector<int>{10, 50});
    CHECK(cfg.tmin == 0.5);
    CHECK(cfg.tmax == 40.0);
    CHECK(cfg.points == 80);
    CHECK(cfg.a == 0.05);
    CHECK(cfg.z_re == 0.2);
    CHECK(cfg.t2 == 3.0);
    CHECK(cfg.ghz_qubits == 6);
    CHECK(cfg.horizon == 25.0);
    CHECK(cfg.step == 0.1);
    CHECK(cfg.quad.rel_tol == 1e-9);
    CHECK(cfg.quad.abs_tol == 1e-12);  // untouched key keeps its default
    CHECK(cfg.out == "out.csv");
}

TEST_CASE("unknown keys and sections are rejected with their line") {
    try {
        parse_config_text("[bath]\nalpha = 0.1\nalfa = 0.2\n", "test.cfg");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(mentions(e, "test.cfg:3"));
        CHECK(mentions(e, "alfa"));
    }
    CHECK_THROWS_AS(parse_config_text("[bathtub]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[grid]\ndpi = 300\n"), ConfigError);
}

TEST_CASE("malformed lines are rejected") {
    CHECK_THROWS_AS(parse_config_text("alpha = 0.1\n"), ConfigError);     // before any section
    CHECK_THROWS_AS(parse_config_text("[bath\n"), ConfigError);           // unterminated
    CHECK_THROWS_AS(parse_config_text("[bath]\nalpha\n"), ConfigError);   // no '='
    CHECK_THROWS_AS(parse_config_text("[bath]\n= 0.1\n"), ConfigError);   // empty key
    CHECK_THROWS_AS(parse_config_text("[bath]\nalpha = zero\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[bath]\nalpha = 0.1 0.2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[bath]\nalpha =\n"), ConfigError);  // empty list
    CHECK_THROWS_AS(parse_config_text("[grid]\npoints = 10.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[bath]\nalpha = 0.1\nalpha = 0.2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[sequence]\nkind = cpmg\n"), ConfigError);
}

TEST_CASE("semantic validation") {
    CHECK_THROWS_AS(parse_config_text("[bath]\nomega_d = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[bath]\nalpha = -0.1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[bath]\ntheta = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[grid]\npoints = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[grid]\ntmin = 5\ntmax = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[sequence]\nn = -2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[ghz]\nqubits = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[death]\nhorizon = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[quadrature]\nrel_tol = -1e-8\n"), ConfigError);
    // custom kind needs ordered interior times
    CHECK_THROWS_AS(parse_config_text("[sequence]\nkind = custom\ntimes = 0.9, 0.5\n"),
                    ConfigError);
    CHECK_NOTHROW(parse_config_text("[sequence]\nkind = custom\ntimes = 0.2, 0.5\ntotal = 1\n"));
}

TEST_CASE("dump and reparse round-trips byte for byte") {
    RunConfig cfg;
    cfg.alphas = {0.25, 0.001};
    cfg.theta = 60.0;
    cfg.kinds = {SequenceKind::Custom};
    cfg.custom_times = {0.1, 0.7};
    cfg.total = 2.0;
    cfg.quad.rel_tol = 1e-10;
    cfg.out = "table.csv";

    const std::string once = dump_config(cfg);
    const RunConfig reparsed = parse_config_text(once);
    const std::string twice = dump_config(reparsed);
    CHECK(once == twice);

    // defaults round-trip as well
    const std::string d1 = dump_config(RunConfig{});
    CHECK(d1 == dump_config(parse_config_text(d1)));
}

TEST_CASE("whitespace and line ending tolerance") {
    const RunConfig cfg =
        parse_config_text("[bath]\r\n  alpha   =  0.5  \r\n\r\n[grid]\npoints = 7\n");
    CHECK(cfg.alphas == std::vector<double>{0.5});
    CHECK(cfg.points == 7);
}
