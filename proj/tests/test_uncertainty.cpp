#include "doctest.h"

#include <cmath>

#include "dho/ermakov.hpp"
#include "dho/errors.hpp"
#include "dho/uncertainty.hpp"

namespace {

dho::OscillatorConfig static_cfg() { return {}; }

dho::OscillatorConfig ck_cfg() {
    dho::OscillatorConfig cfg;
    cfg.friction = dho::FrictionProfile::exponential_decay(1.0);
    return cfg;
}

} // namespace

TEST_CASE("static ground state saturates the canonical floor") {
    const auto cfg = static_cfg();
    const auto es = dho::solve_static(cfg);
    const auto r = dho::uncertainty::closed_form(cfg, es, 0, 0, 1.4);
    CHECK(std::abs(r.dx1 - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(r.dp1 - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(r.prod_x1p1 - 0.5) < 1e-12);
    CHECK(r.bound_canonical == 0.5);
    CHECK(std::abs(r.bound_kinetic - 0.5) < 1e-15); // f = 1
}

TEST_CASE("damped ground state: kinetic product decays with the friction") {
    // gamma = 1, omega0 = 1, t = 2: dx1 dpk1 = (e^{-2}/2) sqrt(1 + 1/(4 Omega^2)).
    const auto cfg = ck_cfg();
    const auto es = dho::solve_caldirola_kanai(cfg);
    const auto r = dho::uncertainty::closed_form(cfg, es, 0, 0, 2.0);
    CHECK(std::abs(r.prod_x1pk1 - 0.078135862207512584863) < 1e-15);
    // Canonical product is time-independent here and above the floor.
    CHECK(r.prod_x1p1 >= 0.5 - 1e-12);
}

TEST_CASE("kinetic quantities are exact friction rescalings") {
    const auto cfg = ck_cfg();
    const auto es = dho::solve_caldirola_kanai(cfg);
    for (double t : {0.0, 0.9, 2.7})
        for (int n : {0, 2})
            for (int ell : {0, -1, 3}) {
                const auto r = dho::uncertainty::closed_form(cfg, es, n, ell, t);
                const double f = cfg.f(t);
                CHECK(r.dpk1 == f * r.dp1);
                CHECK(r.prod_x1pk1 == f * r.prod_x1p1);
                CHECK(r.bound_kinetic == doctest::Approx(0.5 * f).epsilon(1e-15));
            }
}

TEST_CASE("canonical floor holds across modes and times") {
    const auto cfg = ck_cfg();
    const auto es = dho::solve_caldirola_kanai(cfg);
    for (double t : {0.0, 0.6, 1.8, 3.5})
        for (int n = 0; n <= 3; ++n)
            for (int ell = -3; ell <= 3; ++ell) {
                const auto r = dho::uncertainty::closed_form(cfg, es, n, ell, t);
                CHECK(r.prod_x1p1 >= 0.5 - 1e-12);
            }
}

TEST_CASE("closed dispersions match quadrature moments") {
    const auto cfg = ck_cfg();
    const auto es = dho::solve_caldirola_kanai(cfg);
    const auto closed = dho::uncertainty::closed_form(cfg, es, 1, -1, 0.6);
    const auto quad = dho::uncertainty::quadrature(cfg, es, 1, -1, 0.6);
    CHECK(std::abs(quad.dx1 - closed.dx1) < 1e-6 * closed.dx1);
    CHECK(std::abs(quad.dp1 - closed.dp1) < 1e-6 * closed.dp1);
    CHECK(std::abs(quad.prod_x1p1 - closed.prod_x1p1) < 1e-6 * closed.prod_x1p1);
}

TEST_CASE("mechanical energy expectation equals f times the Hamiltonian one") {
    const auto cfg = ck_cfg();
    const auto es = dho::solve_caldirola_kanai(cfg);
    const double em = dho::uncertainty::mechanical_energy_expectation(cfg, es, 1, 2,
                                                                      1.1);
    // Same closed form as the spectra module in radial labels.
    const auto mode = dho::ModeIndex::from_radial(1, 2);
    CHECK(std::abs(em - dho::spectra::mechanical_energy_expectation(cfg, es, mode,
                                                                    1.1)) < 1e-13);
}

TEST_CASE("input validation") {
    const auto cfg = static_cfg();
    const auto es = dho::solve_static(cfg);
    CHECK_THROWS_AS(dho::uncertainty::closed_form(cfg, es, -1, 0, 0.0), dho::Error);
}
