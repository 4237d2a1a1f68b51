#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "dho/profiles.hpp"

namespace dho {

// Auxiliary amplitude rho(t) > 0 solving
//   rho'' + eta rho' + omega^2 rho = nu^2 f^2 / (m^2 rho^3).
class ErmakovSolution {
public:
    enum class Source { ClosedFormStatic, ClosedFormCK, Numeric, ConstantTrial };

    Source source() const { return source_; }
    const OscillatorConfig& config() const { return cfg_; }

    double rho(double t) const;
    double rho_dot(double t) const;

    // Finite-difference residual of the equation at t, scaled by the
    // magnitude of its stiffest term.  Stencil shifts near domain edges.
    double residual(double t, double h = 1e-5) const;

    double t_max() const { return t_max_; } // covered interval [0, t_max]

    // Constant trial amplitude (not a solution unless the config is static
    // and rho0 matches); for residual/sentinel experiments.
    static ErmakovSolution constant_trial(const OscillatorConfig& cfg, double rho0);

private:
    friend ErmakovSolution solve_static(const OscillatorConfig&);
    friend ErmakovSolution solve_caldirola_kanai(const OscillatorConfig&);
    friend ErmakovSolution solve_numeric(const OscillatorConfig&, double, double,
                                         double, double, std::size_t);
    ErmakovSolution() = default;

    Source source_ = Source::ClosedFormStatic;
    OscillatorConfig cfg_;
    double t_max_ = 0.0;
    // Closed-form parameters.
    double rho0_ = 1.0;   // static value or CK prefactor
    double decay_ = 0.0;  // CK gamma/2
    // Numeric dense output: uniform grid with Hermite reconstruction.
    struct DenseGrid;
    std::shared_ptr<const DenseGrid> grid_;
};

// Static profile (f = 1, omega = omega0): rho = sqrt(nu / (m omega0)).
ErmakovSolution solve_static(const OscillatorConfig& cfg);

// Caldirola-Kanai profile (f = e^{-gamma t}, omega = omega0, gamma < 2 omega0):
// rho = sqrt(nu / (m Omega)) e^{-gamma t / 2}, Omega = sqrt(omega0^2 - gamma^2/4).
ErmakovSolution solve_caldirola_kanai(const OscillatorConfig& cfg);

// Numerical solve on [0, t_end] with rho(0) = rho0, rho'(0) = rhodot0.
// Guards rho > 0; throws if the amplitude collapses below 1e-6 * rho0.
ErmakovSolution solve_numeric(const OscillatorConfig& cfg, double rho0,
                              double rhodot0, double t_end, double tol,
                              std::size_t dense_samples = 4097);

// Adiabatic initial conditions: rho0 = sqrt(nu/(m omega(0))),
// rhodot0 = -eta(0) rho0 / 2; reproduces both closed forms where they apply.
std::pair<double, double> default_initial_conditions(const OscillatorConfig& cfg);

// Closed form when the config admits one, otherwise numeric with default ICs.
ErmakovSolution solve_auto(const OscillatorConfig& cfg, double t_end, double tol);

} // namespace dho
