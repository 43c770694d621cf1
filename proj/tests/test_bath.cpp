#include <cmath>
#include <limits>

#include "doctest.h"
#include "qdd/bath.hpp"

using qdd::BathSpec;

TEST_CASE("ohmic factory validates its arguments") {
    CHECK_NOTHROW(BathSpec::ohmic(0.0, 1.0));
    CHECK_NOTHROW(BathSpec::ohmic(0.25, 2.0, 60.0));
    CHECK_THROWS_AS(BathSpec::ohmic(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec::ohmic(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec::ohmic(0.1, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec::ohmic(0.1, 1.0, -0.5), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(BathSpec::ohmic(nan, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec::ohmic(0.1, nan), std::invalid_argument);
}

TEST_CASE("spectral density is linear below the cutoff and zero from it on") {
    const BathSpec bath = BathSpec::ohmic(0.25, 1.0);
    CHECK(qdd::spectral_density(bath, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(qdd::spectral_density(bath, 0.0) == 0.0);
    CHECK(qdd::spectral_density(bath, 1.0) == 0.0);  // hard cutoff at the boundary
    CHECK(qdd::spectral_density(bath, 1.5) == 0.0);
    CHECK_THROWS_AS(qdd::spectral_density(bath, -0.1), std::domain_error);

    const BathSpec scaled = BathSpec::ohmic(0.1, 3.0);
    CHECK(qdd::spectral_density(scaled, 2.0) == doctest::Approx(0.4).epsilon(1e-15));
    for (int i = 1; i <= 20; ++i) {
        const double w = 3.0 * i / 21.0;
        CHECK(qdd::spectral_density(scaled, w) >= 0.0);
    }
}

TEST_CASE("thermal occupation matches the Bose factor") {
    const BathSpec bath = BathSpec::ohmic(0.1, 2.0, 1.0);
    // 1 / (e^{0.01} - 1)
    CHECK(qdd::thermal_occupation(bath, 0.01) ==
          doctest::Approx(99.500833331944447751).epsilon(1e-14));
    CHECK(qdd::thermal_occupation(bath, 1.0) ==
          doctest::Approx(1.0 / std::expm1(1.0)).epsilon(1e-15));
    // far tail stays positive instead of underflowing to garbage
    CHECK(qdd::thermal_occupation(bath, 100.0) > 0.0);
    CHECK(qdd::thermal_occupation(bath, 100.0) < 1e-40);

    const BathSpec cold = BathSpec::ohmic(0.1, 2.0, 0.0);
    CHECK(qdd::thermal_occupation(cold, 0.5) == 0.0);

    CHECK_THROWS_AS(qdd::thermal_occupation(bath, 0.0), std::domain_error);
    CHECK_THROWS_AS(qdd::thermal_occupation(bath, -1.0), std::domain_error);
}

TEST_CASE("thermal occupation decreases with frequency") {
    const BathSpec bath = BathSpec::ohmic(0.1, 1.0, 0.7);
    double prev = qdd::thermal_occupation(bath, 1e-3);
    for (int i = 1; i <= 50; ++i) {
        const double w = 1e-3 + i * 0.02;
        const double occ = qdd::thermal_occupation(bath, w);
        CHECK(occ < prev);
        CHECK(occ >= 0.0);
        prev = occ;
    }
}
