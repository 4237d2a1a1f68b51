#include "dho/classical.hpp"

#include <cmath>
#include <string>

#include "dho/errors.hpp"
#include "dho/ode.hpp"
#include "dho/specfn.hpp"

namespace dho::classical {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("classical", msg); }

void check_params(Regime regime, const RegimeParams& p) {
    const double g2 = p.gamma * p.gamma, w2 = 4.0 * p.omega0 * p.omega0;
    const double scale = std::max(g2, w2);
    switch (regime) {
        case Regime::OverDamped:
            if (!(g2 > w2)) fail("over-damped regime needs gamma^2 > 4 omega0^2");
            break;
        case Regime::UnderDamped:
            if (!(w2 > g2)) fail("under-damped regime needs 4 omega0^2 > gamma^2");
            break;
        case Regime::CriticallyDamped:
            if (std::abs(g2 - w2) > 1e-12 * scale)
                fail("critical damping needs gamma^2 = 4 omega0^2 (rel 1e-12)");
            break;
        case Regime::ExpHalfFrequency:
        case Regime::ExpFrequency:
            if (!(p.gamma > 0.0)) fail("exponential-frequency regimes need gamma > 0");
            break;
    }
    if (!(p.omega0 > 0.0)) fail("regime parameters need omega0 > 0");
}

} // namespace

std::array<double, 4> basis(Regime regime, const RegimeParams& p, double t) {
    check_params(regime, p);
    const double g = p.gamma, w0 = p.omega0;
    const double e = std::exp(-0.5 * g * t);
    switch (regime) {
        case Regime::OverDamped: {
            const double tau = std::sqrt(g * g - 4.0 * w0 * w0);
            const double u1 = e * std::exp(0.5 * tau * t);
            const double u2 = e * std::exp(-0.5 * tau * t);
            return {u1, u2, 0.5 * (tau - g) * u1, -0.5 * (tau + g) * u2};
        }
        case Regime::UnderDamped: {
            const double tau = std::sqrt(4.0 * w0 * w0 - g * g);
            const double s = std::sin(0.5 * tau * t), c = std::cos(0.5 * tau * t);
            return {e * s, e * c, e * (0.5 * tau * c - 0.5 * g * s),
                    e * (-0.5 * tau * s - 0.5 * g * c)};
        }
        case Regime::CriticallyDamped:
            return {e, t * e, -0.5 * g * e, e * (1.0 - 0.5 * g * t)};
        case Regime::ExpHalfFrequency: {
            // w = (2 w0/g) e^{-g t/2}; d/dt [e^{-g t/2} C1(w)] = -(g w/2) e^{-g t/2} C0(w)
            const double w = (2.0 * w0 / g) * e;
            const double j1 = specfn::bessel_j(1.0, w), y1 = specfn::bessel_y(1, w);
            const double j0 = specfn::bessel_j(0.0, w), y0 = specfn::bessel_y(0, w);
            return {e * j1, e * y1, -0.5 * g * w * e * j0, -0.5 * g * w * e * y0};
        }
        case Regime::ExpFrequency: {
            // w = (w0/g) e^{-g t}; dw/dt = -g w
            const double w = (w0 / g) * std::exp(-g * t);
            const double c = std::cos(w), s = std::sin(w);
            return {c, s, g * w * s, -g * w * c};
        }
    }
    fail("unreachable regime");
}

RegimeSolution fit_constants(Regime regime, const RegimeParams& p, complexd z0,
                             complexd zdot0) {
    const auto b = basis(regime, p, 0.0);
    const double det = b[0] * b[3] - b[1] * b[2];
    if (std::abs(det) < 1e-300) fail("degenerate basis when fitting constants");
    RegimeSolution s;
    s.regime = regime;
    s.params = p;
    s.c1 = (b[3] * z0 - b[1] * zdot0) / det;
    s.c2 = (-b[2] * z0 + b[0] * zdot0) / det;
    return s;
}

complexd closed_form(const RegimeSolution& s, double t) {
    const auto b = basis(s.regime, s.params, t);
    return s.c1 * b[0] + s.c2 * b[1];
}

complexd closed_form_velocity(const RegimeSolution& s, double t) {
    const auto b = basis(s.regime, s.params, t);
    return s.c1 * b[2] + s.c2 * b[3];
}

Regime classify(const OscillatorConfig& cfg) {
    using FK = FrictionProfile::Kind;
    using WK = FrequencyProfile::Kind;
    const FK fk = cfg.friction.kind();
    const WK wk = cfg.frequency.kind();
    if (wk == WK::Constant) {
        const double g = fk == FK::Unit ? 0.0 : cfg.friction.gamma();
        if (fk == FK::Tabulated) fail("no closed-form regime for tabulated friction");
        const double g2 = g * g, w2 = 4.0 * cfg.frequency.omega0() * cfg.frequency.omega0();
        if (std::abs(g2 - w2) <= 1e-12 * std::max(g2, w2))
            return Regime::CriticallyDamped;
        return g2 > w2 ? Regime::OverDamped : Regime::UnderDamped;
    }
    if (fk == FK::ExponentialDecay &&
        std::abs(cfg.friction.gamma() - cfg.frequency.gamma()) <=
            1e-12 * cfg.friction.gamma()) {
        if (wk == WK::ExpHalf) return Regime::ExpHalfFrequency;
        if (wk == WK::Exp) return Regime::ExpFrequency;
    }
    fail("config matches no closed-form regime");
}

RegimeParams regime_params(const OscillatorConfig& cfg) {
    RegimeParams p;
    p.omega0 = cfg.frequency.kind() == FrequencyProfile::Kind::Tabulated
                   ? cfg.frequency.value(0.0)
                   : cfg.frequency.omega0();
    p.gamma = cfg.friction.kind() == FrictionProfile::Kind::ExponentialDecay
                  ? cfg.friction.gamma()
                  : 0.0;
    return p;
}

Trajectory integrate_eom(const OscillatorConfig& cfg, complexd z0, complexd zdot0,
                         double t_end, double tol, std::size_t samples) {
    cfg.validate();
    if (!(t_end > 0.0)) fail("t_end must be > 0");
    if (samples < 2) fail("need at least 2 samples");
    auto rhs = [&cfg](double t, const double* y, double* dy) {
        const double eta = cfg.eta(t);
        const double w = cfg.omega(t), w2 = w * w;
        dy[0] = y[2];
        dy[1] = y[3];
        dy[2] = -eta * y[2] - w2 * y[0];
        dy[3] = -eta * y[3] - w2 * y[1];
    };
    const auto grid = ode::uniform_times(0.0, t_end, samples);
    const auto sol = ode::solve(rhs, {z0.real(), z0.imag(), zdot0.real(), zdot0.imag()},
                                0.0, t_end, tol, grid, "classical");
    Trajectory tr;
    tr.t = sol.t;
    tr.z.reserve(sol.t.size());
    tr.zdot.reserve(sol.t.size());
    for (const auto& y : sol.y) {
        tr.z.emplace_back(y[0], y[1]);
        tr.zdot.emplace_back(y[2], y[3]);
    }
    return tr;
}

double canonical_momentum(const OscillatorConfig& cfg, double xdot, double t) {
    return cfg.m * xdot / cfg.f(t);
}

double mechanical_energy(const OscillatorConfig& cfg, const std::array<double, 2>& x,
                         const std::array<double, 2>& xdot, double t) {
    const double w = cfg.omega(t);
    return 0.5 * cfg.m * (xdot[0] * xdot[0] + xdot[1] * xdot[1]) +
           0.5 * cfg.m * w * w * (x[0] * x[0] + x[1] * x[1]);
}

double hamiltonian(const OscillatorConfig& cfg, const std::array<double, 2>& x,
                   const std::array<double, 2>& p, double t) {
    const double f = cfg.f(t), w = cfg.omega(t);
    return 0.5 * f * (p[0] * p[0] + p[1] * p[1]) / cfg.m +
           0.5 * cfg.m * w * w * (x[0] * x[0] + x[1] * x[1]) / f;
}

} // namespace dho::classical
