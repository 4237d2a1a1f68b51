#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "dho/coherent.hpp"
#include "dho/errors.hpp"
#include "dho/specfn.hpp"
#include "dho/spectra.hpp"

using dho::complexd;
using namespace dho::coherent;

namespace {

// Deterministic 64-bit LCG for property sweeps; no global RNG state.
struct Lcg {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    double uniform() { // in [0, 1)
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return double(s >> 11) * 0x1p-53;
    }
    double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

StateSpec bg(complexd z, int ell, int trunc = 0) {
    StateSpec s;
    s.family = Family::BarutGirardello;
    s.parameter = z;
    s.ell = ell;
    s.truncation = trunc;
    return s;
}

StateSpec pere(complexd eta, int ell, int trunc = 0) {
    StateSpec s;
    s.family = Family::Perelomov;
    s.parameter = eta;
    s.ell = ell;
    s.truncation = trunc;
    return s;
}

complexd series_overlap(const Expansion& a, const Expansion& b) {
    complexd acc(0.0);
    const std::size_t n = std::min(a.c.size(), b.c.size());
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(a.c[i]) * b.c[i];
    return acc;
}

} // namespace

TEST_CASE("Barut-Girardello expansion: norm, tail certificate, ladder eigenvalue") {
    const auto e = bg_expand(bg(complexd(0.5, 0.0), 0));
    CHECK(std::abs(e.norm_sq - 1.0) < 1e-12);
    CHECK(e.tail_bound < 1e-12);
    CHECK(bg_eigen_residual(e) < 1e-12);

    // z = 0 collapses onto the lowest state.
    const auto zero = bg_expand(bg(complexd(0.0, 0.0), 2));
    REQUIRE(zero.c.size() == 1);
    CHECK(zero.c[0] == complexd(1.0, 0.0));

    // Requested truncation must still certify the dropped tail.
    CHECK_NOTHROW(bg_expand(bg(complexd(0.5, 0.0), 0, 40)));
    CHECK_THROWS_AS(bg_expand(bg(complexd(3.0, 0.0), 0, 3)), dho::Error);
}

TEST_CASE("Barut-Girardello eigenproperty across random parameters") {
    Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
        const double r = rng.range(0.05, 3.0);
        const double phi = rng.range(0.0, 6.283185307179586);
        const int ell = int(rng.range(0.0, 5.999));
        const auto e = bg_expand(bg(std::polar(r, phi), ell));
        CHECK(std::abs(e.norm_sq - 1.0) < 1e-10);
        CHECK(bg_eigen_residual(e) < 1e-10);
    }
}

TEST_CASE("Perelomov expansion: norms and domain") {
    CHECK(std::abs(perelomov_expand(pere(complexd(0.5, 0.0), 0)).norm_sq - 1.0) <
          1e-12);
    CHECK(std::abs(perelomov_expand(pere(complexd(0.3, 0.0), 3)).norm_sq - 1.0) <
          1e-10);
    CHECK(std::abs(perelomov_expand(pere(complexd(0.3, 0.2), 1)).norm_sq - 1.0) <
          1e-10);
    CHECK_THROWS_AS(perelomov_expand(pere(complexd(1.0, 0.0), 0)), dho::Error);
}

TEST_CASE("Barut-Girardello overlaps: closed Bessel form vs series") {
    // <1 | -1> at l = 0 reduces to J_0(2)/I_0(2).
    const auto a = bg(complexd(1.0, 0.0), 0);
    const auto m = bg(complexd(-1.0, 0.0), 0);
    CHECK(std::abs(bg_overlap(a, m) - complexd(0.098215574083495572762, 0.0)) <
          1e-14);
    // <1 | 0.5> at l = 0.
    const auto h = bg(complexd(0.5, 0.0), 0);
    CHECK(std::abs(bg_overlap(a, h) - complexd(0.92184664544817595054, 0.0)) <
          1e-14);
    // Self-overlap is exactly the norm.
    CHECK(std::abs(bg_overlap(a, a) - complexd(1.0, 0.0)) < 1e-14);

    // Closed form vs coefficient series, complex parameters, two sectors.
    for (int ell : {0, 2}) {
        const auto s1 = bg(complexd(1.0, 1.0), ell);
        const auto s2 = bg(complexd(0.7, -0.3), ell);
        const complexd closed = bg_overlap(s1, s2);
        const complexd series = series_overlap(bg_expand(s1), bg_expand(s2));
        CHECK(std::abs(closed - series) < 1e-9);
        CHECK(std::abs(closed) < 0.9999); // distinct states never orthogonal
    }
}

TEST_CASE("Perelomov overlaps: closed disk form vs series") {
    // <0.5 | 0> at l = 0: sqrt(0.75); <0.5 | -0.5> at l = 1: 0.36 exactly.
    CHECK(std::abs(perelomov_overlap(pere(complexd(0.5, 0.0), 0),
                                     pere(complexd(0.0, 0.0), 0)) -
                   complexd(0.86602540378443864676, 0.0)) < 1e-14);
    CHECK(std::abs(perelomov_overlap(pere(complexd(0.5, 0.0), 1),
                                     pere(complexd(-0.5, 0.0), 1)) -
                   complexd(0.36, 0.0)) < 1e-14);
    for (int ell : {0, 1, 3}) {
        const auto s1 = pere(complexd(0.3, 0.2), ell);
        const auto s2 = pere(complexd(0.4, 0.0), ell);
        const complexd closed = perelomov_overlap(s1, s2);
        const complexd series =
            series_overlap(perelomov_expand(s1), perelomov_expand(s2));
        CHECK(std::abs(closed - series) < 1e-9);
    }
}

TEST_CASE("identity resolution: diagonal elements are unity") {
    // Barut-Girardello: radial K_l quadrature equals n! Gamma(n+l+1).
    CHECK(std::abs(bg_identity_element(0, 0, 0) - 1.0) < 1e-8);
    CHECK(std::abs(bg_identity_element(2, 3, 3) - 1.0) < 1e-7);
    CHECK(bg_identity_element(1, 0, 2) == 0.0); // angular integral kills n != m
    // Perelomov: Beta integral on the unit disk.
    CHECK(std::abs(perelomov_identity_element(1, 0, 0) - 1.0) < 1e-9);
    CHECK(std::abs(perelomov_identity_element(2, 4, 4) - 1.0) < 1e-8);
    // The Perelomov measure carries weight l and degenerates at l = 0.
    CHECK_THROWS_AS(perelomov_identity_element(0, 0, 0), dho::Error);
}

TEST_CASE("time evolution: per-mode phases, conserved weights") {
    const dho::OscillatorConfig cfg; // static, omega0 = nu = 1
    const auto es = dho::solve_static(cfg);
    const auto e = bg_expand(bg(complexd(0.8, 0.2), 1));
    const double t = 0.9;
    const auto ct = evolve_coefficients(e, cfg, es, t);
    REQUIRE(ct.size() == e.c.size());
    for (std::size_t n = 0; n < ct.size(); ++n) {
        CHECK(std::abs(std::abs(ct[n]) - std::abs(e.c[n])) < 1e-15);
        // Mode (n, l): theta = -(2n + l + 1) t on the static profile.
        const complexd want =
            e.c[n] * std::exp(complexd(0.0, -double(2 * n + 1 + 1) * t));
        CHECK(std::abs(ct[n] - want) < 1e-13);
    }
}

TEST_CASE("evaluate: series matches the generating-function closed form at t=0") {
    const dho::OscillatorConfig cfg;
    const auto es = dho::solve_static(cfg);
    std::vector<double> u;
    for (int i = 0; i < 50; ++i) u.push_back(25.0 * i / 49.0);

    {
        const auto s = evaluate(bg(complexd(0.5, 0.0), 0), cfg, es, u, 0.0, 0.0,
                                true);
        REQUIRE(s.closed.has_value());
        double dev = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            dev = std::max(dev, std::abs(s.series[i] - (*s.closed)[i]));
            scale = std::max(scale, std::abs((*s.closed)[i]));
        }
        CHECK(dev < 1e-9 * scale);
    }
    {
        const auto s = evaluate(pere(complexd(0.3, 0.0), 1), cfg, es, u, 0.0);
        REQUIRE(s.closed.has_value());
        for (std::size_t i = 0; i < u.size(); ++i)
            CHECK(std::abs(s.series[i] - (*s.closed)[i]) < 1e-9);
    }

    // Quadrature of |psi|^2 over the plane returns unit norm: the u-grid
    // Gauss-Laguerre rule is exact for the truncated series.
    {
        const auto rule = dho::specfn::gauss_laguerre_rule(64, 0.0);
        const auto s = evaluate(bg(complexd(0.5, 0.0), 0), cfg, es, rule.nodes, 0.0);
        double norm = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            norm += rule.weights[i] * std::exp(rule.nodes[i]) *
                    std::norm(s.series[i]);
        norm *= 2.0 * 3.14159265358979323846 * es.rho(0.0) * es.rho(0.0) / 2.0;
        CHECK(std::abs(norm - 1.0) < 1e-9);
    }

    // Closed forms exist only at t = 0; asking for them later is refused.
    CHECK_THROWS_AS(evaluate(bg(complexd(0.5, 0.0), 0), cfg, es, u, 1.0, 0.0, true),
                    dho::Error);
    const auto later = evaluate(bg(complexd(0.5, 0.0), 0), cfg, es, u, 1.0);
    CHECK(!later.closed.has_value());
}

TEST_CASE("analytic transforms: entire and disk pictures") {
    // Basis state n = 2 in the l = 1 sector: f(w) = w^2 / sqrt(2! Gamma(4)).
    {
        std::vector<complexd> c(3, complexd(0.0, 0.0));
        c[2] = complexd(1.0, 0.0);
        const auto f = analytic_transform(Family::BarutGirardello, 1, c);
        const complexd w(1.3, -0.4);
        CHECK(std::abs(f(w) - w * w / std::sqrt(12.0)) < 1e-14);
    }
    // sqrt(I_l(2|z|)/|z|^l) <psi_z | Phi> recovers f at the conjugate point.
    {
        Lcg rng;
        std::vector<complexd> c(5);
        for (auto& v : c) v = complexd(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
        const auto f = analytic_transform(Family::BarutGirardello, 1, c);
        Expansion phi;
        phi.family = Family::BarutGirardello;
        phi.ell = 1;
        phi.c = c;
        for (int trial = 0; trial < 5; ++trial) {
            const complexd z(rng.range(-1.5, 1.5), rng.range(-1.5, 1.5));
            if (std::abs(z) < 0.05) continue;
            // Fixed truncation keeps every populated Phi component in range.
            const auto state = bg_expand(bg(z, 1, 24));
            const complexd ov = series_overlap(state, phi);
            const double lognorm =
                0.5 * (std::log(dho::specfn::bessel_i(1.0, 2.0 * std::abs(z))) -
                       std::log(std::abs(z)));
            CHECK(std::abs(std::exp(lognorm) * ov - f(std::conj(z))) < 1e-10);
        }
    }
    // Perelomov transform lives on the open unit disk.
    {
        std::vector<complexd> c(2, complexd(0.0, 0.0));
        c[1] = complexd(1.0, 0.0);
        const auto f = analytic_transform(Family::Perelomov, 2, c);
        const complexd w(0.4, 0.1);
        // c_1 sqrt(Gamma(4)/(1! Gamma(3))) w = sqrt(3) w.
        CHECK(std::abs(f(w) - std::sqrt(3.0) * w) < 1e-14);
        CHECK_THROWS_AS(f(complexd(1.2, 0.0)), dho::Error);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(bg_expand(bg(complexd(0.5, 0.0), -1)), dho::Error);
    CHECK_THROWS_AS(bg_expand(bg(complexd(0.5, 0.0), 0, -2)), dho::Error);
    CHECK_THROWS_AS(bg_expand(bg(complexd(0.5, 0.0), 0, 9999)), dho::Error);
}
