#include "dho/uncertainty.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dho/errors.hpp"
#include "dho/fourier.hpp"

namespace dho::uncertainty {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("uncertainty", msg); }

} // namespace

Report closed_form(const OscillatorConfig& cfg, const ErmakovSolution& es, int n,
                   int ell, double t) {
    if (n < 0) fail("radial quantum number must be >= 0");
    cfg.validate();
    const double rho = es.rho(t), rd = es.rho_dot(t), f = cfg.f(t);
    const double quanta = double(2 * n + std::abs(ell) + 1);
    const double mu = cfg.m * rd / f;

    Report rep;
    rep.n = n;
    rep.ell = ell;
    rep.t = t;
    rep.dx1 = std::sqrt(rho * rho * quanta / (2.0 * cfg.nu));
    rep.dp1 = std::sqrt(quanta * (mu * mu / cfg.nu + cfg.nu / (rho * rho)) / 2.0);
    rep.dpk1 = f * rep.dp1;
    rep.prod_x1p1 = rep.dx1 * rep.dp1;
    // Associated as f * (dx dp) so the kinetic scaling law holds exactly.
    rep.prod_x1pk1 = f * rep.prod_x1p1;
    rep.prod_x1x2 = rep.dx1 * rep.dx1;
    rep.prod_p1p2 = rep.dp1 * rep.dp1;
    rep.prod_pk1pk2 = rep.dpk1 * rep.dpk1;
    rep.bound_canonical = 0.5;
    rep.bound_kinetic = 0.5 * f;
    return rep;
}

Report quadrature(const OscillatorConfig& cfg, const ErmakovSolution& es, int n,
                  int ell, double t, int grid_points, double extent_radii) {
    if (n < 0) fail("radial quantum number must be >= 0");
    if (grid_points < 16) fail("moment grid too small");
    cfg.validate();
    const double rho = es.rho(t), f = cfg.f(t);
    const double quanta = double(2 * n + std::abs(ell) + 1);
    const double sigma = rho * std::sqrt(quanta / (2.0 * cfg.nu));
    const double L = extent_radii * sigma;
    const int N = grid_points;
    const double h = 2.0 * L / double(N - 1);
    const ModeIndex mode = ModeIndex::from_radial(n, ell);

    std::vector<complexd> psi(std::size_t(N) * N);
    for (int iy = 0; iy < N; ++iy) {
        const double x2 = -L + h * iy;
        for (int ix = 0; ix < N; ++ix) {
            const double x1 = -L + h * ix;
            psi[std::size_t(iy) * N + ix] = spectra::eigenfunction_polar(
                cfg, es, mode, std::hypot(x1, x2), std::atan2(x2, x1), t);
        }
    }
    // Fourier derivatives treat the box as periodic; the Gaussian tails make
    // the wrap-around error negligible at the chosen extent.
    const double box = h * N;
    const auto d1 = fourier::partial_derivative_2d(psi, N, N, box, box, 0);
    const auto d2 = fourier::partial_derivative_2d(psi, N, N, box, box, 1);

    double norm = 0.0, mx1 = 0.0, mx2 = 0.0, mx1sq = 0.0, mx2sq = 0.0;
    double mp1sq = 0.0, mp2sq = 0.0;
    complexd mp1(0.0), mp2(0.0);
    for (int iy = 0; iy < N; ++iy) {
        const double x2 = -L + h * iy;
        for (int ix = 0; ix < N; ++ix) {
            const double x1 = -L + h * ix;
            const std::size_t p = std::size_t(iy) * N + ix;
            const double w = std::norm(psi[p]);
            norm += w;
            mx1 += x1 * w;
            mx2 += x2 * w;
            mx1sq += x1 * x1 * w;
            mx2sq += x2 * x2 * w;
            mp1sq += std::norm(d1[p]);
            mp2sq += std::norm(d2[p]);
            mp1 += std::conj(psi[p]) * complexd(0.0, -1.0) * d1[p];
            mp2 += std::conj(psi[p]) * complexd(0.0, -1.0) * d2[p];
        }
    }
    if (norm == 0.0) fail("vanishing norm on the moment grid");
    mx1 /= norm;
    mx2 /= norm;
    mx1sq /= norm;
    mx2sq /= norm;
    mp1sq /= norm;
    mp2sq /= norm;
    const double vp1 = mp1sq - std::norm(mp1 / norm);
    const double vp2 = mp2sq - std::norm(mp2 / norm);

    Report rep;
    rep.n = n;
    rep.ell = ell;
    rep.t = t;
    rep.dx1 = std::sqrt(mx1sq - mx1 * mx1);
    const double dx2 = std::sqrt(mx2sq - mx2 * mx2);
    rep.dp1 = std::sqrt(vp1);
    const double dp2 = std::sqrt(vp2);
    rep.dpk1 = f * rep.dp1;
    rep.prod_x1p1 = rep.dx1 * rep.dp1;
    rep.prod_x1pk1 = f * rep.prod_x1p1;
    rep.prod_x1x2 = rep.dx1 * dx2;
    rep.prod_p1p2 = rep.dp1 * dp2;
    rep.prod_pk1pk2 = rep.dpk1 * (f * dp2);
    rep.bound_canonical = 0.5;
    rep.bound_kinetic = 0.5 * f;
    return rep;
}

double mechanical_energy_expectation(const OscillatorConfig& cfg,
                                     const ErmakovSolution& es, int n, int ell,
                                     double t) {
    if (n < 0) fail("radial quantum number must be >= 0");
    cfg.validate();
    const double rho = es.rho(t), rd = es.rho_dot(t), f = cfg.f(t);
    const double w = cfg.omega(t);
    const double quanta = double(2 * n + std::abs(ell) + 1);
    const double term = cfg.m * rd * rd + f * f * cfg.nu * cfg.nu / (cfg.m * rho * rho) +
                        cfg.m * w * w * rho * rho;
    return term * quanta / (2.0 * cfg.nu);
}

} // namespace dho::uncertainty
