#pragma once

#include <complex>
#include <vector>

#include "dho/ermakov.hpp"
#include "dho/profiles.hpp"

namespace dho {

using complexd = std::complex<double>;

// Helicity occupation pair; radial pair (n, l) with n = min(n+, n-),
// l = n- - n+ labels the same state.
struct ModeIndex {
    int n_plus = 0;
    int n_minus = 0;

    int ell() const { return n_minus - n_plus; }
    int radial_n() const { return n_plus < n_minus ? n_plus : n_minus; }
    static ModeIndex from_radial(int n, int ell);
};

struct CartesianIndex {
    int n1 = 0;
    int n2 = 0;
};

namespace spectra {

// Invariant eigenvalue nu (n+ + n- + 1); time-independent.
double invariant_eigenvalue(const OscillatorConfig& cfg, ModeIndex mode);

// <Lz> = n- - n+ (exact integer).
int angular_momentum_eigenvalue(ModeIndex mode);

// <H>(t) = (m rho_dot^2 f^{-1} + f nu^2/(m rho^2) + m omega^2 f^{-1} rho^2)
//          * (n+ + n- + 1) / (2 nu).
double hamiltonian_expectation(const OscillatorConfig& cfg,
                               const ErmakovSolution& es, ModeIndex mode,
                               double t);

// Measured (mechanical) energy expectation f <H>.
double mechanical_energy_expectation(const OscillatorConfig& cfg,
                                     const ErmakovSolution& es, ModeIndex mode,
                                     double t);

// theta_mode(t) = -(nu/m) (n+ + n- + 1) * int_0^t f/rho^2, the evolution
// phase making e^{i theta} phi solve i dpsi/dt = H psi.  Closed forms for
// static and Caldirola-Kanai amplitudes, adaptive quadrature otherwise.
double lr_phase(const OscillatorConfig& cfg, const ErmakovSolution& es,
                ModeIndex mode, double t, double tol = 1e-12);

// Invariant eigenfunctions at time t (no evolution phase).
complexd eigenfunction_cartesian(const OscillatorConfig& cfg,
                                 const ErmakovSolution& es, CartesianIndex mode,
                                 double x1, double x2, double t);
complexd eigenfunction_polar(const OscillatorConfig& cfg,
                             const ErmakovSolution& es, ModeIndex mode,
                             double r, double alpha, double t);

// Full Schrodinger solution e^{i theta} phi.
complexd schrodinger_solution(const OscillatorConfig& cfg,
                              const ErmakovSolution& es, ModeIndex mode,
                              double r, double alpha, double t,
                              double tol = 1e-12);

// Polar sample set with quadrature weights: Gauss-Laguerre radial abscissas
// mapped through u = nu r^2 / rho^2 crossed with a uniform angular grid.
// sum(weight * |psi|^2) integrates spanned polynomials-times-Gaussian exactly.
struct WaveSample {
    double t = 0.0;
    ModeIndex mode;
    std::vector<double> r, alpha;     // flattened grid, radial-major
    std::vector<complexd> value;
    std::vector<double> weight;       // area weights (include r dr d_alpha)
    int radial_points = 0;
    int angular_points = 0;
    bool coverage_ok = false;         // >= 8 standard radii and >= 256 radial
};

WaveSample sample_polar(const OscillatorConfig& cfg, const ErmakovSolution& es,
                        ModeIndex mode, double t, int radial_points = 256,
                        int angular_points = 64);

// sum(weight * |value|^2); callers compare against 1.
double norm_check(const WaveSample& ws);

// Gram matrix of polar eigenfunctions with total quantum n+ + n- <= max_total,
// shared grid, entry order: (n+, n-) lexicographic.
struct GramResult {
    std::vector<ModeIndex> modes;
    std::vector<complexd> matrix; // row-major modes.size()^2
    double max_offdiag = 0.0;
    double max_diag_error = 0.0;
};
GramResult gram_matrix(const OscillatorConfig& cfg, const ErmakovSolution& es,
                       int max_total, double t, int radial_points = 64,
                       int angular_points = 32);

// Relative residual || i d_t psi - H psi || / || H psi || on an N x N
// Cartesian grid (4th-order Laplacian, centered time difference), interior
// points only.
double schrodinger_residual(const OscillatorConfig& cfg,
                            const ErmakovSolution& es, ModeIndex mode, double t,
                            int grid_points = 256, double dt = 1e-4,
                            double extent_radii = 8.0);

} // namespace spectra
} // namespace dho
