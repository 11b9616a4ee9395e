#include <cmath>
#include <numbers>
#include <random>

#include "casidual/duality.hpp"
#include "doctest.h"

using namespace casidual;
using duality::Route;
using duality::Xi;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("duality");

TEST_CASE("gap <-> beta map") {
    CHECK(duality::map_gap_to_beta(1.0) == 2.0);
    CHECK(duality::map_gap_to_beta(0.5) == 1.0);
    CHECK(duality::map_beta_to_gap(1.0) == 0.5);
    SUBCASE("composition is the identity, bit for bit") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> dist(1e-9, 1e9);
        for (int i = 0; i < 200; ++i) {
            const double l = dist(rng);
            CHECK(duality::map_beta_to_gap(duality::map_gap_to_beta(l)) == l);
            CHECK(duality::map_gap_to_beta(duality::map_beta_to_gap(l)) == l);
        }
    }
    SUBCASE("record carries direction and endpoints") {
        const auto m = duality::DualityMap::gap_to_beta(3.0);
        CHECK(m.direction == duality::DualityMap::Direction::gap_to_beta);
        CHECK(m.input == 3.0);
        CHECK(m.output == 6.0);
    }
    CHECK_THROWS_AS(duality::map_gap_to_beta(0.0), std::invalid_argument);
    CHECK_THROWS_AS(duality::map_beta_to_gap(-2.0), std::invalid_argument);
}

TEST_CASE("xi inversion") {
    CHECK(duality::xi_inversion(Xi(0.5)).value == 0.5);  // fixed point, exact
    CHECK(duality::xi_inversion(Xi(1.0)).value == 0.25);
    SUBCASE("involution") {
        for (double xi : {0.1, 1.0, 7.0}) {
            CHECK(duality::xi_inversion(duality::xi_inversion(Xi(xi))).value == xi);
        }
        // for arbitrary values the double reciprocal can move by an ulp
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> dist(1e-3, 1e3);
        for (int i = 0; i < 500; ++i) {
            const double xi = dist(rng);
            const double back = duality::xi_inversion(duality::xi_inversion(Xi(xi))).value;
            CHECK(back == doctest::Approx(xi).epsilon(4e-16));
        }
    }
    SUBCASE("matches the xi-image of the gap <-> beta exchange") {
        std::mt19937 rng(13);
        std::uniform_real_distribution<double> dist(1e-3, 1e3);
        for (int i = 0; i < 500; ++i) {
            const double l = dist(rng);
            const double beta = dist(rng);
            const double mapped_xi =
                duality::map_beta_to_gap(beta) / duality::map_gap_to_beta(l);
            CHECK(duality::xi_inversion(Xi(l / beta)).value ==
                  doctest::Approx(mapped_xi).epsilon(4e-16));
        }
    }
    CHECK_THROWS_AS(Xi(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Xi(-1.0), std::invalid_argument);
}

TEST_CASE("pressure <-> energy swap under 2l <-> beta") {
    SUBCASE("closed forms cancel to machine precision") {
        for (double l : {0.25, 0.5, 1.0, 2.0}) {
            const auto r = duality::check_pressure_energy_swap(l, Route::closed_form);
            CHECK(r.residual_p_swap <= 1e-12);
            CHECK(r.residual_u_swap <= 1e-12);
        }
    }
    SUBCASE("quadrature routes cancel within 1e-8") {
        for (double l : {0.25, 0.5, 1.0, 2.0}) {
            const auto r = duality::check_pressure_energy_swap(l);
            CHECK(r.residual_p_swap <= 1e-8);
            CHECK(r.residual_u_swap <= 1e-8);
        }
    }
    SUBCASE("the cancelling pair at l = 0.5") {
        // p_cas(1/2) = -pi^2/15 against u_bb(beta = 1) = +pi^2/15
        CHECK(casimir::pressure(0.5) == doctest::Approx(-kPi * kPi / 15.0).epsilon(1e-9));
        CHECK(blackbody::internal_energy_bb(blackbody::ThermalState::from_beta(1.0)) ==
              doctest::Approx(kPi * kPi / 15.0).epsilon(1e-9));
        CHECK(casimir::energy_density(0.5) ==
              doctest::Approx(-kPi * kPi / 45.0).epsilon(1e-9));
        CHECK(blackbody::pressure_bb(blackbody::ThermalState::from_beta(1.0)) ==
              doctest::Approx(kPi * kPi / 45.0).epsilon(1e-9));
    }
    SUBCASE("residuals do not depend on l") {
        const auto a = duality::check_pressure_energy_swap(0.25);
        const auto b = duality::check_pressure_energy_swap(4.0);
        CHECK(a.residual_p_swap <= 1e-10);
        CHECK(b.residual_p_swap <= 1e-10);
    }
}

TEST_CASE("dual entropy density") {
    CHECK(duality::dual_entropy_density(1.0) ==
          doctest::Approx(0.1096622711232151).epsilon(1e-9));
    CHECK(duality::dual_entropy_closed_form(1.0) ==
          doctest::Approx(kPi * kPi / 90.0).epsilon(1e-15));
    SUBCASE("scales as l^-3") {
        const double s1 = duality::dual_entropy_density(1.0);
        const double s2 = duality::dual_entropy_density(2.0);
        CHECK(s1 == doctest::Approx(8.0 * s2).epsilon(1e-8));
    }
    SUBCASE("positive for every gap") {
        for (double l : {0.1, 0.5, 1.0, 10.0}) {
            CHECK(duality::dual_entropy_density(l) > 0.0);
        }
    }
}

TEST_CASE("the dual thermodynamic relation fails by a factor of three") {
    SUBCASE("slope magnitude 6l against effective inverse temperature 2l") {
        const auto c = duality::check_dual_thermo_relation(1.0);
        CHECK(std::abs(c.ds_du) == doctest::Approx(6.0).epsilon(1e-6));
        CHECK(c.effective_inverse_T == 2.0);
        CHECK(c.inconsistency_ratio == doctest::Approx(3.0).epsilon(1e-6));
        // the slope itself is negative: the dual entropy falls while the
        // energy density rises with the gap
        CHECK(c.ds_du < 0.0);
    }
    SUBCASE("ratio is independent of l") {
        for (double l : {0.5, 1.0, 2.0}) {
            const auto c = duality::check_dual_thermo_relation(l);
            CHECK(c.inconsistency_ratio == doctest::Approx(3.0).epsilon(1e-6));
            CHECK(c.effective_inverse_T == 2.0 * l);
        }
    }
    SUBCASE("the genuine thermal side passes the same pipeline") {
        for (double T : {0.5, 1.0, 2.0}) {
            const auto c = blackbody::check_ds_du(blackbody::ThermalState::from_temperature(T));
            CHECK(c.ds_du * T == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("full report") {
    const auto rep = duality::full_report(0.5);
    CHECK(rep.l == 0.5);
    CHECK(rep.beta_dual == 1.0);
    CHECK(rep.residual_p_swap <= 1e-10);
    CHECK(rep.residual_u_swap <= 1e-10);
    CHECK(rep.inconsistency_ratio == doctest::Approx(3.0).epsilon(1e-6));
    SUBCASE("dimensionless fields are unit-system independent") {
        const auto micron = duality::full_report(1e-6);
        CHECK(micron.residual_p_swap <= 1e-10);
        CHECK(micron.residual_u_swap <= 1e-10);
        CHECK(micron.inconsistency_ratio == doctest::Approx(3.0).epsilon(1e-6));
    }
    SUBCASE("deterministic") {
        const auto again = duality::full_report(0.5);
        CHECK(again.residual_p_swap == rep.residual_p_swap);
        CHECK(again.residual_u_swap == rep.residual_u_swap);
        CHECK(again.ds_du_dual == rep.ds_du_dual);
        CHECK(again.inconsistency_ratio == rep.inconsistency_ratio);
    }
    SUBCASE("dimension-checked entry point") {
        CHECK_THROWS_AS(duality::full_report(Quantity{0.5, dim::temperature}),
                        std::invalid_argument);
        const auto q = duality::full_report(Quantity{0.5, dim::length});
        CHECK(q.inconsistency_ratio == doctest::Approx(3.0).epsilon(1e-6));
    }
    CHECK_THROWS_AS(duality::full_report(0.0), std::invalid_argument);
}

TEST_SUITE_END();
