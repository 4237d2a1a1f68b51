#pragma once

#include <complex>
#include <map>
#include <vector>

#include "dho/ermakov.hpp"
#include "dho/profiles.hpp"

namespace dho::su11 {

using complexd = std::complex<double>;

// State in the fixed-l radial ladder, expanded over eigenstates psi_n^l:
// coeff[n] multiplies psi_n^l.
struct RadialState {
    int ell = 0; // l >= 0 sector
    std::map<int, complexd> coeff;
};

// Ladder action with positive matrix elements:
//   K- psi_n = sqrt(n (n+l))        psi_{n-1}
//   K+ psi_n = sqrt((n+1)(n+l+1))   psi_{n+1}
//   K0 psi_n = (2n + l + 1)/2       psi_n
// The ladder basis psi_n^l carries the plain Laguerre normalization; it
// differs from the polar invariant eigenfunction by the factor (-1)^n.
RadialState k_minus(const RadialState& s);
RadialState k_plus(const RadialState& s);
RadialState k_zero(const RadialState& s);

// Commutator checks on basis states: [K0,K+-] = +-K+-, [K+,K-] = -2 K0.
// Returns max deviation of the two sides applied to psi_n (floating-point
// ladder maps; bounded by sqrt roundoff).
double commutator_residual(int ell, int n);

// Exact form of the same checks: products of adjacent ladder coefficients
// are integers, so [K-,K+] = 2 K0, [K0,K+-] = +-K+- and the Casimir value
// (scaled by 4) are integer identities.  Returns the max |defect|, which is
// 0 iff the ladder coefficients close the algebra.
long long algebra_defect(int ell, int n);

// Casimir K0^2 - (K+K- + K-K+)/2 = k(k-1), k = (l+1)/2.
double bargmann_index(int ell);   // k
double casimir_eigenvalue(int ell); // k(k-1) = (l+1)(l-1)/4

// chirp parameter of the u-profile: varpi = 1 - i m f^{-1} rho rho_dot / nu.
complexd varpi(const OscillatorConfig& cfg, const ErmakovSolution& es, double t);

// Uniform v-grid (u = v^2) for the first-order differential realization
//   K- = -u d/du + l/2 + n - varpi u / 2
//   K+ = +u d/du + l/2 + n + 1 - (2 - varpi) u / 2
// applied with Fourier differentiation on the parity extension.
struct VGrid {
    double v_max = 13.0;
    int count = 512; // samples at v_j = j v_max / count, j = 0..count-1
};

std::vector<double> u_nodes(const VGrid& grid);

// Radial profile chi_n^l(u) = sqrt(n!/Gamma(n+l+1)) u^{l/2} e^{-varpi u/2}
//   L_n^l(u), the u-dependent factor of psi_n^l.
std::vector<complexd> radial_profile(int ell, int n, complexd varpi,
                                     const VGrid& grid);

// Apply the differential K- (which = '-') or K+ (which = '+') built at level
// n to samples of chi_n^l; compare against the ladder closed forms.
std::vector<complexd> k_differential_apply(int ell, int n, char which,
                                           complexd varpi, const VGrid& grid,
                                           const std::vector<complexd>& samples);

// Max pointwise deviation |K_diff chi_n - coeff * chi_{n+-1}| over nodes with
// u <= u_cut, scaled by max |coeff * chi_{n+-1}|.
double differential_ladder_residual(int ell, int n, char which, complexd varpi,
                                    const VGrid& grid, double u_cut = 60.0);

} // namespace dho::su11
