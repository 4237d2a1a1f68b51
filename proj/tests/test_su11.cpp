#include "doctest.h"

#include <cmath>
#include <complex>

#include "dho/ermakov.hpp"
#include "dho/errors.hpp"
#include "dho/su11.hpp"

using namespace dho::su11;

TEST_CASE("ladder maps: closed matrix elements") {
    RadialState s;
    s.ell = 2;
    s.coeff[3] = complexd(1.0, 0.0);

    const auto down = k_minus(s);
    REQUIRE(down.coeff.count(2) == 1);
    CHECK(std::abs(down.coeff.at(2) - std::sqrt(15.0)) < 1e-15); // sqrt(3*(3+2))

    const auto up = k_plus(s);
    REQUIRE(up.coeff.count(4) == 1);
    CHECK(std::abs(up.coeff.at(4) - std::sqrt(24.0)) < 1e-15); // sqrt(4*(4+2))

    const auto diag = k_zero(s);
    CHECK(std::abs(diag.coeff.at(3) - 4.5) < 1e-15); // (2n+l+1)/2

    RadialState ground;
    ground.ell = 1;
    ground.coeff[0] = complexd(1.0, 0.0);
    const auto annihilated = k_minus(ground);
    CHECK(annihilated.coeff.empty());
}

TEST_CASE("commutators close the algebra: exact integer identities") {
    // (n+1)(n+l+1) - n(n+l) = 2n+l+1 and the Casimir combination are
    // integer-valued, so the defect must be exactly zero, not merely small.
    for (int ell = 0; ell <= 6; ++ell)
        for (int n = 0; n <= 12; ++n)
            CHECK(algebra_defect(ell, n) == 0);
}

TEST_CASE("commutators close the algebra: floating-point ladder route") {
    for (int ell = 0; ell <= 5; ++ell)
        for (int n = 0; n <= 10; ++n)
            CHECK(commutator_residual(ell, n) < 1e-12);
}

TEST_CASE("Bargmann index and Casimir") {
    CHECK(bargmann_index(1) == 1.0);
    CHECK(casimir_eigenvalue(1) == 0.0);
    CHECK(std::abs(bargmann_index(3) - 2.0) < 1e-15);
    CHECK(std::abs(casimir_eigenvalue(3) - 2.0) < 1e-15);
    // k(k-1) = (l+1)(l-1)/4.
    for (int ell = 0; ell <= 7; ++ell)
        CHECK(std::abs(casimir_eigenvalue(ell) -
                       0.25 * double((ell + 1) * (ell - 1))) < 1e-15);
}

TEST_CASE("chirp parameter varpi") {
    const dho::OscillatorConfig cfg;
    const auto es = dho::solve_static(cfg);
    CHECK(std::abs(varpi(cfg, es, 1.0) - complexd(1.0, 0.0)) < 1e-15);

    dho::OscillatorConfig ck;
    ck.friction = dho::FrictionProfile::exponential_decay(1.0);
    const auto esk = dho::solve_caldirola_kanai(ck);
    // rho rho_dot = -(gamma/2) rho^2 and f^{-1} rho^2 = nu/(m Omega) give
    // varpi = 1 + i gamma/(2 Omega), constant in t.
    const complexd want(1.0, 0.57735026918962576451);
    CHECK(std::abs(varpi(ck, esk, 0.0) - want) < 1e-14);
    CHECK(std::abs(varpi(ck, esk, 2.2) - want) < 1e-14);
}

TEST_CASE("differential realization reproduces the index ladder") {
    const VGrid grid;
    const complexd plain(1.0, 0.0);
    const complexd chirped(1.0, 0.4);
    for (const complexd w : {plain, chirped})
        for (const auto& [ell, n] : {std::pair{0, 0}, {0, 3}, {1, 2}, {2, 1},
                                     {3, 4}, {5, 6}}) {
            CHECK(differential_ladder_residual(ell, n, '-', w, grid) < 1e-7);
            CHECK(differential_ladder_residual(ell, n, '+', w, grid) < 1e-7);
        }
}

TEST_CASE("radial profiles and u-grid") {
    const VGrid grid;
    const auto u = u_nodes(grid);
    REQUIRE(u.size() == std::size_t(grid.count));
    CHECK(u[0] == 0.0);
    // chi_0^l is the pure profile u^{l/2} e^{-varpi u/2} times the norm.
    const auto chi = radial_profile(1, 0, complexd(1.0, 0.0), grid);
    const int j = 37;
    const complexd want = std::sqrt(u[j]) * std::exp(-0.5 * u[j]); // 1/sqrt(G(2)) = 1
    CHECK(std::abs(chi[j] - want) < 1e-13);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(algebra_defect(-1, 0), dho::Error);
    CHECK_THROWS_AS(commutator_residual(0, -1), dho::Error);
    CHECK_THROWS_AS(bargmann_index(-2), dho::Error);
}
