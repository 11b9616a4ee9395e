#include <cmath>
#include <numbers>

#include "casidual/blackbody.hpp"
#include "doctest.h"

using namespace casidual;
using blackbody::ThermalState;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("blackbody");

TEST_CASE("thermal state ties T and beta together") {
    const auto st = ThermalState::from_beta(2.0);
    CHECK(st.temperature == 0.5);
    CHECK(st.beta == 2.0);
    const auto st2 = ThermalState::from_temperature(4.0);
    CHECK(st2.beta == 0.25);
    for (double b : {0.3, 1.0, 7.0}) {
        const auto s = ThermalState::from_beta(b);
        CHECK(s.beta * s.temperature == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(ThermalState::from_beta(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ThermalState::from_temperature(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(ThermalState::from_temperature_quantity({300.0, dim::length}),
                    std::invalid_argument);
    SUBCASE("natural units: T = 1 gives beta = 1") {
        CHECK(ThermalState::from_temperature(1.0).beta == 1.0);
    }
}

TEST_CASE("pressure equals pi^2/(45 beta^4)") {
    CHECK(blackbody::pressure_bb(ThermalState::from_beta(1.0)) ==
          doctest::Approx(0.2193245422464302).epsilon(1e-10));
    CHECK(blackbody::pressure_bb(ThermalState::from_beta(2.0)) ==
          doctest::Approx(1.3707783890401886e-2).epsilon(1e-10));
    SUBCASE("quadrature route over the beta grid") {
        for (double b : {0.5, 1.0, 2.0, 5.0}) {
            CHECK(blackbody::pressure_bb(ThermalState::from_beta(b)) ==
                  doctest::Approx(blackbody::pressure_closed_form(b)).epsilon(1e-8));
        }
    }
    SUBCASE("vanishes as T -> 0") {
        CHECK(blackbody::pressure_bb(ThermalState::from_temperature(1e-3)) <
              1e-10);
        CHECK(blackbody::pressure_bb(ThermalState::from_temperature(1e-3)) > 0.0);
    }
}

TEST_CASE("internal energy is Planck's integral, pi^2/(15 beta^4)") {
    CHECK(blackbody::internal_energy_bb(ThermalState::from_beta(1.0)) ==
          doctest::Approx(0.6579736267392906).epsilon(1e-10));
    SUBCASE("quadrature route over the beta grid") {
        for (double b : {0.5, 1.0, 2.0, 5.0}) {
            CHECK(blackbody::internal_energy_bb(ThermalState::from_beta(b)) ==
                  doctest::Approx(blackbody::internal_energy_closed_form(b))
                      .epsilon(1e-8));
        }
    }
    SUBCASE("u = 3p") {
        for (double b : {0.5, 1.0, 2.0, 5.0}) {
            const auto st = ThermalState::from_beta(b);
            CHECK(blackbody::internal_energy_bb(st) ==
                  doctest::Approx(3.0 * blackbody::pressure_bb(st)).epsilon(1e-8));
        }
    }
    SUBCASE("300 K in SI units") {
        const auto st =
            ThermalState::from_temperature_quantity({300.0, dim::temperature});
        const double u_si =
            from_natural(blackbody::internal_energy_bb(st), dim::energy_density)
                .magnitude;
        // Stefan-Boltzmann: u = pi^2 (k_B T)^4 / (15 (hbar c)^3)
        const PhysicalConstants k;
        const double kt = k.k_B * 300.0;
        const double hc = k.hbar * k.c;
        const double oracle = kPi * kPi * kt * kt * kt * kt / (15.0 * hc * hc * hc);
        CHECK(u_si == doctest::Approx(oracle).epsilon(1e-8));
        CHECK(u_si == doctest::Approx(6.13e-6).epsilon(1e-2));
    }
}

TEST_CASE("derivative route for the internal energy") {
    CHECK(blackbody::internal_energy_via_derivative(ThermalState::from_beta(1.0)) ==
          doctest::Approx(kPi * kPi / 15.0).epsilon(1e-6));
    CHECK(blackbody::internal_energy_via_derivative(ThermalState::from_beta(0.5)) ==
          doctest::Approx(16.0 * kPi * kPi / 15.0).epsilon(1e-6));
    SUBCASE("agrees with the direct route") {
        for (double b : {0.5, 1.0, 2.0}) {
            const auto st = ThermalState::from_beta(b);
            CHECK(blackbody::internal_energy_via_derivative(st) ==
                  doctest::Approx(blackbody::internal_energy_bb(st)).epsilon(1e-6));
        }
    }
}

TEST_CASE("entropy density s = (p + u)/T") {
    CHECK(blackbody::entropy_density(ThermalState::from_beta(1.0)) ==
          doctest::Approx(0.8772981689857208).epsilon(1e-10));
    SUBCASE("s = (4/3) u / T") {
        for (double T : {0.5, 1.0, 2.0}) {
            const auto st = ThermalState::from_temperature(T);
            CHECK(blackbody::entropy_density(st) ==
                  doctest::Approx(4.0 / 3.0 * blackbody::internal_energy_bb(st) / T)
                      .epsilon(1e-8));
        }
    }
    SUBCASE("scales as T^3") {
        const double s1 = blackbody::entropy_density(ThermalState::from_temperature(1.0));
        const double s2 = blackbody::entropy_density(ThermalState::from_temperature(2.0));
        CHECK(s2 == doctest::Approx(8.0 * s1).epsilon(1e-8));
    }
    SUBCASE("vanishes as T -> 0") {
        CHECK(blackbody::entropy_density(ThermalState::from_temperature(1e-3)) < 1e-7);
    }
    SUBCASE("cross-check route s = dp/dT") {
        for (double T : {0.5, 1.0, 2.0}) {
            const auto st = ThermalState::from_temperature(T);
            CHECK(blackbody::entropy_via_derivative(st) ==
                  doctest::Approx(blackbody::entropy_density(st)).epsilon(1e-6));
        }
    }
}

TEST_CASE("thermo point invariants") {
    for (double b : {0.5, 1.0, 3.0}) {
        const auto pt = blackbody::thermo_point(ThermalState::from_beta(b));
        CHECK(pt.p == -pt.f);  // exact by construction
        CHECK(pt.p > 0.0);
        CHECK(pt.u > 0.0);
        CHECK(pt.s > 0.0);
        CHECK(pt.s == doctest::Approx((pt.p + pt.u) * b).epsilon(1e-12));
    }
    SUBCASE("all quantities strictly increase with T") {
        double pp = 0.0, pu = 0.0, ps = 0.0;
        for (double T : {0.5, 0.8, 1.0, 1.7, 2.0, 5.0}) {
            const auto pt = blackbody::thermo_point(ThermalState::from_temperature(T));
            CHECK(pt.p > pp);
            CHECK(pt.u > pu);
            CHECK(pt.s > ps);
            pp = pt.p;
            pu = pt.u;
            ps = pt.s;
        }
    }
}

TEST_CASE("absolute-temperature relation ds/du = 1/T") {
    SUBCASE("T = 1") {
        const auto c = blackbody::check_ds_du(ThermalState::from_temperature(1.0));
        CHECK(c.ds_du == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(c.residual <= 1e-6);
    }
    SUBCASE("T = 2 gives one half") {
        const auto c = blackbody::check_ds_du(ThermalState::from_temperature(2.0));
        CHECK(c.ds_du == doctest::Approx(0.5).epsilon(1e-6));
        CHECK(c.expected == 0.5);
        CHECK(c.residual <= 1e-6);
    }
    SUBCASE("residual over the T grid") {
        for (double T : {0.5, 1.0, 2.0}) {
            const auto c = blackbody::check_ds_du(ThermalState::from_temperature(T));
            CHECK(c.residual <= 1e-6);
        }
    }
    SUBCASE("residual is invariant under the unit system") {
        // the same physical point, natural input vs SI-derived input
        const auto natural = blackbody::check_ds_du(ThermalState::from_beta(7.6e-6));
        const auto si = blackbody::check_ds_du(
            ThermalState::from_temperature_quantity({300.0, dim::temperature}));
        CHECK(natural.residual <= 1e-6);
        CHECK(si.residual <= 1e-6);
    }
}

TEST_SUITE_END();
