#include "dho/ermakov.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "dho/errors.hpp"
#include "dho/ode.hpp"

namespace dho {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("ermakov", msg); }

double rhs_accel(const OscillatorConfig& cfg, double t, double rho, double rho_dot) {
    const double f = cfg.f(t), w = cfg.omega(t);
    const double r3 = rho * rho * rho;
    return -cfg.eta(t) * rho_dot - w * w * rho +
           cfg.nu * cfg.nu * f * f / (cfg.m * cfg.m * r3);
}

} // namespace

// Uniform dense grid with the accelerations needed for C1 Hermite
// reconstruction of both rho and rho_dot.
struct ErmakovSolution::DenseGrid {
    double dt = 0.0;
    std::vector<double> rho, rho_dot, rho_ddot;

    double interpolate(const std::vector<double>& v, const std::vector<double>& dv,
                       double t) const {
        const std::size_t n = v.size();
        double s = t / dt;
        std::size_t i = s <= 0.0 ? 0 : static_cast<std::size_t>(s);
        if (i > n - 2) i = n - 2;
        const double u = s - double(i);
        const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
        const double h10 = u * (1.0 - u) * (1.0 - u);
        const double h01 = u * u * (3.0 - 2.0 * u);
        const double h11 = u * u * (u - 1.0);
        return h00 * v[i] + h10 * dt * dv[i] + h01 * v[i + 1] + h11 * dt * dv[i + 1];
    }
};

double ErmakovSolution::rho(double t) const {
    if (!(t >= 0.0)) fail("rho queried at t < 0");
    switch (source_) {
        case Source::ClosedFormStatic:
        case Source::ConstantTrial: return rho0_;
        case Source::ClosedFormCK: return rho0_ * std::exp(-decay_ * t);
        case Source::Numeric:
            if (t > t_max_ * (1.0 + 1e-12))
                fail("rho queried beyond the solved interval");
            return grid_->interpolate(grid_->rho, grid_->rho_dot, t);
    }
    fail("unreachable source");
}

double ErmakovSolution::rho_dot(double t) const {
    if (!(t >= 0.0)) fail("rho_dot queried at t < 0");
    switch (source_) {
        case Source::ClosedFormStatic:
        case Source::ConstantTrial: return 0.0;
        case Source::ClosedFormCK: return -decay_ * rho0_ * std::exp(-decay_ * t);
        case Source::Numeric:
            if (t > t_max_ * (1.0 + 1e-12))
                fail("rho_dot queried beyond the solved interval");
            return grid_->interpolate(grid_->rho_dot, grid_->rho_ddot, t);
    }
    fail("unreachable source");
}

double ErmakovSolution::residual(double t, double h) const {
    // Centered rho_ddot unless the stencil would leave [0, t_max].
    double tc = t;
    if (tc < h) tc = h;
    if (source_ == Source::Numeric && tc > t_max_ - h) tc = t_max_ - h;
    const double ddot = (rho_dot(tc + h) - rho_dot(tc - h)) / (2.0 * h);
    const double f = cfg_.f(tc), w = cfg_.omega(tc);
    const double r = rho(tc), rd = rho_dot(tc);
    const double drive = cfg_.nu * cfg_.nu * f * f / (cfg_.m * cfg_.m * r * r * r);
    const double res = ddot + cfg_.eta(tc) * rd + w * w * r - drive;
    return std::abs(res) / std::max(1.0, std::abs(drive));
}

ErmakovSolution ErmakovSolution::constant_trial(const OscillatorConfig& cfg,
                                                double rho0) {
    if (!(rho0 > 0.0)) fail("constant trial amplitude must be > 0");
    ErmakovSolution s;
    s.source_ = Source::ConstantTrial;
    s.cfg_ = cfg;
    s.rho0_ = rho0;
    s.t_max_ = std::numeric_limits<double>::infinity();
    return s;
}

ErmakovSolution solve_static(const OscillatorConfig& cfg) {
    cfg.validate();
    if (!cfg.is_static()) fail("solve_static needs unit friction and constant frequency");
    ErmakovSolution s;
    s.source_ = ErmakovSolution::Source::ClosedFormStatic;
    s.cfg_ = cfg;
    s.rho0_ = std::sqrt(cfg.nu / (cfg.m * cfg.frequency.omega0()));
    s.t_max_ = std::numeric_limits<double>::infinity();
    return s;
}

ErmakovSolution solve_caldirola_kanai(const OscillatorConfig& cfg) {
    cfg.validate();
    if (!cfg.is_caldirola_kanai())
        fail("solve_caldirola_kanai needs exponential friction and constant frequency");
    const double g = cfg.friction.gamma(), w0 = cfg.frequency.omega0();
    const double cap2 = w0 * w0 - 0.25 * g * g;
    if (!(cap2 > 0.0)) fail("Caldirola-Kanai amplitude needs omega0^2 > gamma^2/4");
    ErmakovSolution s;
    s.source_ = ErmakovSolution::Source::ClosedFormCK;
    s.cfg_ = cfg;
    s.rho0_ = std::sqrt(cfg.nu / (cfg.m * std::sqrt(cap2)));
    s.decay_ = 0.5 * g;
    s.t_max_ = std::numeric_limits<double>::infinity();
    return s;
}

ErmakovSolution solve_numeric(const OscillatorConfig& cfg, double rho0,
                              double rhodot0, double t_end, double tol,
                              std::size_t dense_samples) {
    cfg.validate();
    if (!(rho0 > 0.0)) fail("rho0 must be > 0");
    if (!(t_end > 0.0)) fail("t_end must be > 0");
    if (dense_samples < 4) fail("need at least 4 dense samples");

    const double floor = 1e-6 * rho0;
    auto rhs = [&cfg](double t, const double* y, double* dy) {
        dy[0] = y[1];
        dy[1] = rhs_accel(cfg, t, y[0], y[1]);
    };
    auto guard = [floor](double t, const double* y) {
        if (y[0] < floor) {
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "amplitude collapsed toward the rho^-3 singularity at t = %.6g",
                          t);
            fail(buf);
        }
    };
    const auto grid_t = ode::uniform_times(0.0, t_end, dense_samples);
    const auto sol = ode::solve(rhs, {rho0, rhodot0}, 0.0, t_end, tol, grid_t,
                                "ermakov", guard);

    auto grid = std::make_shared<ErmakovSolution::DenseGrid>();
    grid->dt = t_end / double(dense_samples - 1);
    grid->rho.reserve(dense_samples);
    grid->rho_dot.reserve(dense_samples);
    grid->rho_ddot.reserve(dense_samples);
    for (std::size_t i = 0; i < sol.t.size(); ++i) {
        const double r = sol.y[i][0], rd = sol.y[i][1];
        if (r < floor) guard(sol.t[i], sol.y[i].data());
        grid->rho.push_back(r);
        grid->rho_dot.push_back(rd);
        grid->rho_ddot.push_back(rhs_accel(cfg, sol.t[i], r, rd));
    }

    ErmakovSolution s;
    s.source_ = ErmakovSolution::Source::Numeric;
    s.cfg_ = cfg;
    s.rho0_ = rho0;
    s.t_max_ = t_end;
    s.grid_ = std::move(grid);
    return s;
}

std::pair<double, double> default_initial_conditions(const OscillatorConfig& cfg) {
    cfg.validate();
    const double w0 = cfg.omega(0.0);
    if (!(w0 > 0.0)) fail("default initial conditions need omega(0) > 0");
    const double rho0 = std::sqrt(cfg.nu / (cfg.m * w0));
    return {rho0, -0.5 * cfg.eta(0.0) * rho0};
}

ErmakovSolution solve_auto(const OscillatorConfig& cfg, double t_end, double tol) {
    cfg.validate();
    if (cfg.is_static()) return solve_static(cfg);
    if (cfg.is_caldirola_kanai()) {
        const double g = cfg.friction.gamma(), w0 = cfg.frequency.omega0();
        if (w0 * w0 - 0.25 * g * g > 0.0) return solve_caldirola_kanai(cfg);
    }
    const auto ic = default_initial_conditions(cfg);
    return solve_numeric(cfg, ic.first, ic.second, t_end, tol);
}

} // namespace dho
