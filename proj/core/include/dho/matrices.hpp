#pragma once

#include <Eigen/Dense>
#include <complex>

#include "dho/ermakov.hpp"
#include "dho/profiles.hpp"
#include "dho/spectra.hpp"

namespace dho::matrices {

using complexd = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;

// Quadratic invariant coefficients: I = alpha J+ + beta J- + delta J0 with
// J+ = (x1^2+x2^2)/2, J- = (p1^2+p2^2)/2, J0 = (x.p + p.x)/2.
struct InvariantCoefficients {
    double alpha = 0.0; // nu^2/rho^2 + m^2 f^{-2} rho_dot^2
    double beta = 0.0;  // rho^2
    double delta = 0.0; // -m f^{-1} rho_dot rho
};

InvariantCoefficients invariant_coefficients(const OscillatorConfig& cfg,
                                             const ErmakovSolution& es, double t);

// Finite-difference residual of the coefficient ODE system
//   alpha' = 2 f^{-1} m omega^2 delta,
//   beta'  = -(2 f / m) delta,
//   delta' = -(f/m) alpha + f^{-1} m omega^2 beta,
// scaled by the largest coefficient magnitude.
double coefficient_system_residual(const OscillatorConfig& cfg,
                                   const ErmakovSolution& es, double t,
                                   double h = 1e-5);

// Operators on the truncated two-helicity number basis |n+, n-> with
// 0 <= n+, n- <= N, index = n+ * (N+1) + n-.  Quadratic operators are exact
// on the interior block n+, n- <= N-2; expectations outside that margin are
// refused.
struct TruncatedBasisRep {
    int N = 0;
    double t = 0.0;
    OscillatorConfig cfg;
    InvariantCoefficients coeff;

    MatrixXcd a_plus, a_minus;          // annihilators
    MatrixXcd x1, x2, p1, p2;           // phase-space operators
    MatrixXcd j_plus, j_minus, j_zero;  // quadratic generators
    MatrixXcd invariant;                // alpha J+ + beta J- + delta J0
    MatrixXcd hamiltonian;              // (f/m) J- + f^{-1} m omega^2 J+
    MatrixXcd angular_momentum;         // x1 p2 - x2 p1

    int dim() const { return (N + 1) * (N + 1); }
    int index(ModeIndex mode) const { return mode.n_plus * (N + 1) + mode.n_minus; }
    bool interior(ModeIndex mode, int margin = 2) const {
        return mode.n_plus >= 0 && mode.n_minus >= 0 &&
               mode.n_plus <= N - margin && mode.n_minus <= N - margin;
    }
};

TruncatedBasisRep build_rep(const OscillatorConfig& cfg,
                            const ErmakovSolution& es, double t, int N);

// <mode| M |mode>; throws unless the mode sits in the interior margin.
complexd expectation(const TruncatedBasisRep& rep, const MatrixXcd& op,
                     ModeIndex mode);

// Sorted eigenvalues of the interior principal submatrix of rep.invariant
// (exact block of the truncation), paired with the expected nu(n+ + n- + 1)
// multiset over the same index set.
struct InteriorSpectrum {
    std::vector<double> computed; // ascending
    std::vector<double> expected; // ascending
};
InteriorSpectrum interior_invariant_spectrum(const TruncatedBasisRep& rep,
                                             int margin = 2);

// max interior-entry residual of dI/dt + (1/i)[I, H] at time t, scaled by
// the largest interior entry of I.  dI/dt by centered differencing of the
// coefficient functions over the basis frozen at t.
double invariance_residual(const OscillatorConfig& cfg, const ErmakovSolution& es,
                           double t, double dt, int N);

} // namespace dho::matrices
