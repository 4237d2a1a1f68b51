#pragma once

#include <array>
#include <complex>
#include <vector>

#include "dho/profiles.hpp"

namespace dho {

using complexd = std::complex<double>;

namespace classical {

// Closed-form families for z'' + eta z' + omega^2 z = 0 with z = x2 + i x1.
enum class Regime {
    OverDamped,       // eta = gamma, omega = omega0, gamma^2 > 4 omega0^2
    UnderDamped,      // eta = gamma, omega = omega0, gamma^2 < 4 omega0^2
    CriticallyDamped, // eta = gamma, omega = omega0, gamma^2 = 4 omega0^2
    ExpHalfFrequency, // eta = gamma, omega = omega0 e^{-gamma t/2}
    ExpFrequency,     // eta = gamma, omega = omega0 e^{-gamma t}
};

struct RegimeParams {
    double gamma = 0.0;
    double omega0 = 1.0;
};

struct RegimeSolution {
    Regime regime;
    RegimeParams params;
    complexd c1, c2; // coefficients on the regime's two basis solutions
};

// Basis values u1,u2 and derivatives at t (regime-specific closed forms).
std::array<double, 4> basis(Regime regime, const RegimeParams& p, double t);

// Solve the 2x2 system fixing c1, c2 from z(0), zdot(0).
RegimeSolution fit_constants(Regime regime, const RegimeParams& p, complexd z0,
                             complexd zdot0);

complexd closed_form(const RegimeSolution& s, double t);
complexd closed_form_velocity(const RegimeSolution& s, double t);

// Regime describing a config's friction/frequency pair, if one applies.
// Throws dho::Error if the profiles match no closed-form family.
Regime classify(const OscillatorConfig& cfg);
RegimeParams regime_params(const OscillatorConfig& cfg);

struct Trajectory {
    std::vector<double> t;
    std::vector<complexd> z;
    std::vector<complexd> zdot;
};

// Numerical integration of the equation of motion for any profile pair.
Trajectory integrate_eom(const OscillatorConfig& cfg, complexd z0,
                         complexd zdot0, double t_end, double tol,
                         std::size_t samples);

// p_j = f^{-1} m xdot_j.
double canonical_momentum(const OscillatorConfig& cfg, double xdot, double t);

// E_m = m/2 (xdot.xdot) + m omega^2/2 (x.x); the measured energy f*H.
double mechanical_energy(const OscillatorConfig& cfg,
                         const std::array<double, 2>& x,
                         const std::array<double, 2>& xdot, double t);

// H = f/(2m) (p.p) + f^{-1} m omega^2 / 2 (x.x).
double hamiltonian(const OscillatorConfig& cfg, const std::array<double, 2>& x,
                   const std::array<double, 2>& p, double t);

} // namespace classical
} // namespace dho
