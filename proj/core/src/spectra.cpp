#include "dho/spectra.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dho/errors.hpp"
#include "dho/specfn.hpp"

namespace dho {

ModeIndex ModeIndex::from_radial(int n, int ell) {
    if (n < 0) throw Error("spectra", "radial quantum number must be >= 0");
    ModeIndex m;
    if (ell >= 0) {
        m.n_plus = n;
        m.n_minus = n + ell;
    } else {
        m.n_plus = n - ell;
        m.n_minus = n;
    }
    return m;
}

namespace spectra {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("spectra", msg); }

void check_mode(ModeIndex mode) {
    if (mode.n_plus < 0 || mode.n_minus < 0)
        fail("mode indices must be >= 0");
}

constexpr double kPi = 3.14159265358979323846;

// Shared frame data at time t.
struct Frame {
    double rho, rho_dot, f, omega;
    complexd gauss; // i m f^{-1} rho_dot / rho - nu / rho^2 (exponent / r^2 * 2)
};

Frame frame_at(const OscillatorConfig& cfg, const ErmakovSolution& es, double t) {
    Frame fr;
    fr.rho = es.rho(t);
    fr.rho_dot = es.rho_dot(t);
    fr.f = cfg.f(t);
    fr.omega = cfg.omega(t);
    fr.gauss = complexd(-cfg.nu / (fr.rho * fr.rho),
                        cfg.m * fr.rho_dot / (fr.f * fr.rho));
    return fr;
}

} // namespace

double invariant_eigenvalue(const OscillatorConfig& cfg, ModeIndex mode) {
    check_mode(mode);
    cfg.validate();
    return cfg.nu * double(mode.n_plus + mode.n_minus + 1);
}

int angular_momentum_eigenvalue(ModeIndex mode) {
    check_mode(mode);
    return mode.ell();
}

double hamiltonian_expectation(const OscillatorConfig& cfg,
                               const ErmakovSolution& es, ModeIndex mode,
                               double t) {
    check_mode(mode);
    const Frame fr = frame_at(cfg, es, t);
    const double quanta = double(mode.n_plus + mode.n_minus + 1);
    const double r2 = fr.rho * fr.rho;
    const double term = cfg.m * fr.rho_dot * fr.rho_dot / fr.f +
                        fr.f * cfg.nu * cfg.nu / (cfg.m * r2) +
                        cfg.m * fr.omega * fr.omega * r2 / fr.f;
    return term * quanta / (2.0 * cfg.nu);
}

double mechanical_energy_expectation(const OscillatorConfig& cfg,
                                     const ErmakovSolution& es, ModeIndex mode,
                                     double t) {
    return cfg.f(t) * hamiltonian_expectation(cfg, es, mode, t);
}

double lr_phase(const OscillatorConfig& cfg, const ErmakovSolution& es,
                ModeIndex mode, double t, double tol) {
    check_mode(mode);
    if (!(t >= 0.0)) fail("phase requested at t < 0");
    // theta_dot = <i d/dt - H> = -(N+1) nu f / (m rho^2): the <i d/dt> and <H>
    // pieces each carry nu f/(2 m rho^2) and their rho_dot^2, omega^2 rho^2
    // parts cancel, so the halves add. The static check i dpsi/dt = H psi
    // pins the prefactor (theta must be -omega0 (N+1) t there).
    const double quanta = double(mode.n_plus + mode.n_minus + 1);
    const double scale = -cfg.nu * quanta / cfg.m;
    if (t == 0.0) return 0.0;
    using Source = ErmakovSolution::Source;
    switch (es.source()) {
        case Source::ClosedFormStatic: {
            // f/rho^2 = m omega0 / nu
            const double w0 = cfg.frequency.omega0();
            return -w0 * quanta * t;
        }
        case Source::ClosedFormCK: {
            // f/rho^2 = m Omega / nu
            const double g = cfg.friction.gamma(), w0 = cfg.frequency.omega0();
            const double cap = std::sqrt(w0 * w0 - 0.25 * g * g);
            return -cap * quanta * t;
        }
        default: {
            const double integral = specfn::integrate(
                [&](double s) {
                    const double r = es.rho(s);
                    return cfg.f(s) / (r * r);
                },
                0.0, t, tol);
            return scale * integral;
        }
    }
}

complexd eigenfunction_cartesian(const OscillatorConfig& cfg,
                                 const ErmakovSolution& es, CartesianIndex mode,
                                 double x1, double x2, double t) {
    if (mode.n1 < 0 || mode.n2 < 0) fail("Cartesian indices must be >= 0");
    cfg.validate();
    const Frame fr = frame_at(cfg, es, t);
    const double arg1 = std::sqrt(cfg.nu) * x1 / fr.rho;
    const double arg2 = std::sqrt(cfg.nu) * x2 / fr.rho;
    const double logpref =
        0.5 * (std::log(cfg.nu) - double(mode.n1 + mode.n2) * std::log(2.0) -
               std::log(kPi) - specfn::log_gamma(double(mode.n1) + 1.0) -
               specfn::log_gamma(double(mode.n2) + 1.0)) -
        std::log(fr.rho);
    const double r2 = x1 * x1 + x2 * x2;
    const complexd expo = 0.5 * fr.gauss * r2;
    return std::exp(logpref) * specfn::hermite(mode.n1, arg1) *
           specfn::hermite(mode.n2, arg2) * std::exp(expo);
}

complexd eigenfunction_polar(const OscillatorConfig& cfg,
                             const ErmakovSolution& es, ModeIndex mode,
                             double r, double alpha, double t) {
    check_mode(mode);
    cfg.validate();
    if (!(r >= 0.0)) fail("radial coordinate must be >= 0");
    const Frame fr = frame_at(cfg, es, t);
    const int n = mode.radial_n();
    const int ell = mode.ell();
    const int la = ell < 0 ? -ell : ell;
    const double u = cfg.nu * r * r / (fr.rho * fr.rho);
    const double logpref =
        0.5 * (1.0 + la) * std::log(cfg.nu) - (1.0 + la) * std::log(fr.rho) -
        0.5 * std::log(kPi) +
        0.5 * (specfn::log_gamma(double(n) + 1.0) -
               specfn::log_gamma(double(n + la) + 1.0));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const complexd expo = 0.5 * fr.gauss * r * r + complexd(0.0, ell * alpha);
    return sign * std::exp(logpref) * std::pow(r, la) *
           specfn::laguerre(n, double(la), u) * std::exp(expo);
}

complexd schrodinger_solution(const OscillatorConfig& cfg,
                              const ErmakovSolution& es, ModeIndex mode,
                              double r, double alpha, double t, double tol) {
    const double theta = lr_phase(cfg, es, mode, t, tol);
    return std::exp(complexd(0.0, theta)) *
           eigenfunction_polar(cfg, es, mode, r, alpha, t);
}

WaveSample sample_polar(const OscillatorConfig& cfg, const ErmakovSolution& es,
                        ModeIndex mode, double t, int radial_points,
                        int angular_points) {
    check_mode(mode);
    if (radial_points < 2 || angular_points < 2)
        fail("sample grid needs at least 2 points per direction");
    const Frame fr = frame_at(cfg, es, t);
    const auto rule = specfn::gauss_laguerre_rule(radial_points, 0.0);

    WaveSample ws;
    ws.t = t;
    ws.mode = mode;
    ws.radial_points = radial_points;
    ws.angular_points = angular_points;
    const std::size_t total = std::size_t(radial_points) * angular_points;
    ws.r.reserve(total);
    ws.alpha.reserve(total);
    ws.value.reserve(total);
    ws.weight.reserve(total);

    const double dalpha = 2.0 * kPi / angular_points;
    const double jac = fr.rho * fr.rho / (2.0 * cfg.nu); // r dr = jac du
    for (int k = 0; k < radial_points; ++k) {
        const double u = rule.nodes[k];
        const double rk = fr.rho * std::sqrt(u / cfg.nu);
        // De-weighted Gauss-Laguerre: integrates g(u) du for g that decays
        // like the sampled densities; nodes past the double range drop out.
        const double wk = (rule.weights[k] > 0.0 && u < 700.0)
                              ? rule.weights[k] * std::exp(u)
                              : 0.0;
        for (int j = 0; j < angular_points; ++j) {
            const double a = dalpha * j;
            ws.r.push_back(rk);
            ws.alpha.push_back(a);
            ws.value.push_back(eigenfunction_polar(cfg, es, mode, rk, a, t));
            ws.weight.push_back(jac * dalpha * wk);
        }
    }
    const double u_needed = 0.5 * 64.0; // 8 standard radii: u = nu r^2/rho^2 = 32
    ws.coverage_ok =
        radial_points >= 256 && rule.nodes.back() >= u_needed;
    return ws;
}

double norm_check(const WaveSample& ws) {
    double acc = 0.0;
    for (std::size_t i = 0; i < ws.value.size(); ++i)
        acc += ws.weight[i] * std::norm(ws.value[i]);
    return acc;
}

GramResult gram_matrix(const OscillatorConfig& cfg, const ErmakovSolution& es,
                       int max_total, double t, int radial_points,
                       int angular_points) {
    if (max_total < 0) fail("max_total must be >= 0");
    GramResult g;
    for (int np = 0; np <= max_total; ++np)
        for (int nm = 0; nm + np <= max_total; ++nm)
            g.modes.push_back(ModeIndex{np, nm});

    const Frame fr = frame_at(cfg, es, t);
    const auto rule = specfn::gauss_laguerre_rule(radial_points, 0.0);
    const double dalpha = 2.0 * kPi / angular_points;
    const double jac = fr.rho * fr.rho / (2.0 * cfg.nu);

    const std::size_t nm = g.modes.size();
    const std::size_t total = std::size_t(radial_points) * angular_points;
    std::vector<complexd> vals(nm * total);
    std::vector<double> weight(total);
    for (int k = 0; k < radial_points; ++k) {
        const double u = rule.nodes[k];
        const double rk = fr.rho * std::sqrt(u / cfg.nu);
        const double wk = (rule.weights[k] > 0.0 && u < 700.0)
                              ? rule.weights[k] * std::exp(u)
                              : 0.0;
        for (int j = 0; j < angular_points; ++j) {
            const std::size_t p = std::size_t(k) * angular_points + j;
            weight[p] = jac * dalpha * wk;
            for (std::size_t a = 0; a < nm; ++a)
                vals[a * total + p] =
                    eigenfunction_polar(cfg, es, g.modes[a], rk, dalpha * j, t);
        }
    }

    g.matrix.assign(nm * nm, complexd(0.0));
    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t b = 0; b < nm; ++b) {
            complexd acc(0.0);
            for (std::size_t p = 0; p < total; ++p)
                acc += weight[p] * std::conj(vals[a * total + p]) * vals[b * total + p];
            g.matrix[a * nm + b] = acc;
            const double mag = std::abs(acc);
            if (a == b)
                g.max_diag_error = std::max(g.max_diag_error, std::abs(mag - 1.0));
            else
                g.max_offdiag = std::max(g.max_offdiag, mag);
        }
    return g;
}

double schrodinger_residual(const OscillatorConfig& cfg,
                            const ErmakovSolution& es, ModeIndex mode, double t,
                            int grid_points, double dt, double extent_radii) {
    check_mode(mode);
    if (grid_points < 8) fail("residual grid too small");
    if (!(t - dt >= 0.0)) fail("residual stencil needs t >= dt");
    const Frame fr = frame_at(cfg, es, t);
    const int n = mode.radial_n(), la = std::abs(mode.ell());
    const double sigma =
        fr.rho * std::sqrt(double(2 * n + la + 1) / (2.0 * cfg.nu));
    const double L = extent_radii * sigma;
    const int N = grid_points;
    const double h = 2.0 * L / double(N - 1);

    auto grid_state = [&](double ts) {
        std::vector<complexd> psi(std::size_t(N) * N);
        // Phase and frame shared per time slice.
        const double theta = lr_phase(cfg, es, mode, ts);
        const complexd ph = std::exp(complexd(0.0, theta));
        for (int iy = 0; iy < N; ++iy) {
            const double x2 = -L + h * iy;
            for (int ix = 0; ix < N; ++ix) {
                const double x1 = -L + h * ix;
                const double r = std::hypot(x1, x2);
                const double a = std::atan2(x2, x1);
                psi[std::size_t(iy) * N + ix] =
                    ph * eigenfunction_polar(cfg, es, mode, r, a, ts);
            }
        }
        return psi;
    };

    const auto psi_m = grid_state(t - dt);
    const auto psi_0 = grid_state(t);
    const auto psi_p = grid_state(t + dt);

    const double kin = -0.5 * fr.f / cfg.m;
    const double pot = 0.5 * cfg.m * fr.omega * fr.omega / fr.f;
    double num = 0.0, den = 0.0;
    auto at = [&](const std::vector<complexd>& v, int iy, int ix) {
        return v[std::size_t(iy) * N + ix];
    };
    for (int iy = 2; iy < N - 2; ++iy) {
        const double x2 = -L + h * iy;
        for (int ix = 2; ix < N - 2; ++ix) {
            const double x1 = -L + h * ix;
            // 4th-order 5-point second differences along each axis.
            const complexd dxx =
                (-at(psi_0, iy, ix - 2) + 16.0 * at(psi_0, iy, ix - 1) -
                 30.0 * at(psi_0, iy, ix) + 16.0 * at(psi_0, iy, ix + 1) -
                 at(psi_0, iy, ix + 2)) /
                (12.0 * h * h);
            const complexd dyy =
                (-at(psi_0, iy - 2, ix) + 16.0 * at(psi_0, iy - 1, ix) -
                 30.0 * at(psi_0, iy, ix) + 16.0 * at(psi_0, iy + 1, ix) -
                 at(psi_0, iy + 2, ix)) /
                (12.0 * h * h);
            const complexd hpsi = kin * (dxx + dyy) +
                                  pot * (x1 * x1 + x2 * x2) * at(psi_0, iy, ix);
            const complexd dpsi_dt =
                (at(psi_p, iy, ix) - at(psi_m, iy, ix)) / (2.0 * dt);
            const complexd res = complexd(0.0, 1.0) * dpsi_dt - hpsi;
            num += std::norm(res);
            den += std::norm(at(psi_0, iy, ix));
        }
    }
    if (den == 0.0) fail("residual denominator vanished");
    return std::sqrt(num / den);
}

} // namespace spectra
} // namespace dho
