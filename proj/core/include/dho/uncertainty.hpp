#pragma once

#include "dho/ermakov.hpp"
#include "dho/profiles.hpp"
#include "dho/spectra.hpp"

namespace dho::uncertainty {

// Dispersions and products on the invariant eigenstate (n, l) at time t.
// Canonical p and kinetic p_k = f p carry separate entries.
struct Report {
    int n = 0;
    int ell = 0;
    double t = 0.0;

    double dx1 = 0.0;  // = dx2 by symmetry
    double dp1 = 0.0;  // canonical
    double dpk1 = 0.0; // kinetic f * dp1

    double prod_x1p1 = 0.0;  // dx1 dp1,   bound 1/2
    double prod_x1pk1 = 0.0; // dx1 dpk1,  bound f/2
    double prod_x1x2 = 0.0;  // dx1 dx2,   bound 0
    double prod_p1p2 = 0.0;  // dp1 dp2,   bound 0
    double prod_pk1pk2 = 0.0;

    double bound_canonical = 0.5;
    double bound_kinetic = 0.0; // f(t)/2
};

// Closed forms:
//   dx^2  = rho^2 (2n + |l| + 1) / (2 nu)
//   dp^2  = (2n + |l| + 1) (m^2 f^{-2} rho_dot^2 / nu + nu / rho^2) / 2
Report closed_form(const OscillatorConfig& cfg, const ErmakovSolution& es,
                   int n, int ell, double t);

// Same quantities from the sampled wavefunction on an N x N Cartesian grid
// (momentum moments via Fourier differentiation).
Report quadrature(const OscillatorConfig& cfg, const ErmakovSolution& es,
                  int n, int ell, double t, int grid_points = 256,
                  double extent_radii = 10.0);

// <E_m>(t) = (m rho_dot^2 + f^2 nu^2/(m rho^2) + m omega^2 rho^2)
//            * (2n + |l| + 1) / (2 nu)  = f <H>.
double mechanical_energy_expectation(const OscillatorConfig& cfg,
                                     const ErmakovSolution& es, int n, int ell,
                                     double t);

} // namespace dho::uncertainty
