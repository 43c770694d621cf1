#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qdd/numerics.hpp"

using qdd::bessel_jn;
using qdd::ConvergenceError;
using qdd::integrate;
using qdd::QuadratureSpec;

TEST_CASE("bessel special values") {
    CHECK(bessel_jn(0, 0.0) == 1.0);
    CHECK(bessel_jn(1, 0.0) == 0.0);
    CHECK(bessel_jn(7, 0.0) == 0.0);

    CHECK(bessel_jn(11, 5.0) == doctest::Approx(0.00035092744976620901015).epsilon(1e-12));
    CHECK(bessel_jn(64, 50.0) == doctest::Approx(6.3583833006752058569e-5).epsilon(1e-11));
    CHECK(bessel_jn(64, 200.0) == doctest::Approx(-0.034059764963014577214).epsilon(1e-11));
    CHECK(bessel_jn(30, 200.0) == doctest::Approx(-0.052122279029882832044).epsilon(1e-11));

    // first zero of J_0
    CHECK(std::abs(bessel_jn(0, 2.4048255576957727686)) < 1e-13);

    CHECK_THROWS_AS(bessel_jn(-1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_jn(0, -1.0), std::domain_error);
}

TEST_CASE("bessel agrees with the power series oracle at moderate arguments") {
    for (double x : {0.5, 1.9, 2.5, 7.3, 12.0}) {
        for (int n : {0, 1, 2, 5, 11, 20}) {
            const double ref = static_cast<double>(oracle::bessel_series(n, x));
            if (std::abs(ref) < 1e-280) continue;
            CHECK(bessel_jn(n, x) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel three-term recurrence holds") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ux(2.0, 200.0);
    std::uniform_int_distribution<int> un(1, 63);
    for (int rep = 0; rep < 100; ++rep) {
        const double x = ux(rng);
        const int n = un(rng);
        const double jm = bessel_jn(n - 1, x);
        const double j0 = bessel_jn(n, x);
        const double jp = bessel_jn(n + 1, x);
        const double lhs = jm + jp;
        const double rhs = 2.0 * n / x * j0;
        const double scale = std::max({std::abs(jm), std::abs(j0), std::abs(jp), 1e-280});
        CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
    }
}

TEST_CASE("bessel squared-sum normalization") {
    for (double x : {1.0, 5.0, 20.0, 90.0}) {
        double sum = bessel_jn(0, x) * bessel_jn(0, x);
        const int kmax = static_cast<int>(x) + 40;
        for (int k = 1; k <= kmax; ++k) {
            const double jk = bessel_jn(k, x);
            sum += 2.0 * jk * jk;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("quadrature integrates polynomials and smooth functions") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::acos(-1.0)) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double) { return 1.0; }, -2.0, 3.0) ==
          doctest::Approx(5.0).epsilon(1e-15));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0) ==
          doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-12));
}

TEST_CASE("quadrature resolves oscillatory integrands with a hint") {
    // int_0^100 cos(10 x) dx = sin(1000) / 10
    const double got = integrate([](double x) { return std::cos(10.0 * x); }, 0.0, 100.0, {},
                                 10.0 * 100.0 / (2.0 * std::acos(-1.0)));
    CHECK(got == doctest::Approx(std::sin(1000.0) / 10.0).epsilon(1e-9));
}

TEST_CASE("quadrature is deterministic and additive") {
    auto f = [](double x) { return std::cos(3.0 * x) / (1.0 + x * x); };
    const double a = integrate(f, 0.0, 7.0);
    const double b = integrate(f, 0.0, 7.0);
    CHECK(a == b);  // bitwise reproducible

    const double left = integrate(f, 0.0, 2.5);
    const double right = integrate(f, 2.5, 7.0);
    CHECK(left + right == doctest::Approx(a).epsilon(1e-10));

    auto g = [](double x) { return std::exp(-x); };
    const double combined = integrate([&](double x) { return 2.0 * f(x) + 3.0 * g(x); }, 0.0, 7.0);
    CHECK(combined ==
          doctest::Approx(2.0 * a + 3.0 * integrate(g, 0.0, 7.0)).epsilon(1e-10));
}

TEST_CASE("quadrature matches a brute-force midpoint rule") {
    auto f1 = [](double x) { return std::sin(7.0 * x) * std::exp(-0.3 * x) + 0.2 * x; };
    auto f2 = [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };
    const double ref1 = oracle::midpoint_integral(f1, 0.0, 9.0, 3'000'000);
    const double ref2 = oracle::midpoint_integral(f2, -1.0, 1.0, 3'000'000);
    CHECK(integrate(f1, 0.0, 9.0, {}, 10.0) == doctest::Approx(ref1).epsilon(1e-9));
    CHECK(integrate(f2, -1.0, 1.0) == doctest::Approx(ref2).epsilon(1e-9));
}

TEST_CASE("quadrature failure carries its best estimate") {
    QuadratureSpec tight;
    tight.max_subdivisions = 5;
    bool threw = false;
    try {
        integrate([](double x) { return std::cos(50.0 * x); }, 0.0, 100.0, tight);
    } catch (const ConvergenceError& e) {
        threw = true;
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.error_bound() > 0.0);
    }
    CHECK(threw);
}

TEST_CASE("quadrature argument validation") {
    auto f = [](double x) { return x; };
    CHECK(integrate(f, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(integrate(f, 3.0, 2.0), std::invalid_argument);
    QuadratureSpec bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, bad), std::invalid_argument);
    CHECK_THROWS_AS(
        integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
        std::domain_error);
}
