#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "dho/ermakov.hpp"
#include "dho/profiles.hpp"

namespace dho::coherent {

using complexd = std::complex<double>;

enum class Family { BarutGirardello, Perelomov };

struct StateSpec {
    Family family = Family::BarutGirardello;
    complexd parameter; // z (BG) or eta (Perelomov, |eta| < 1)
    int ell = 0;        // l >= 0 sector
    int truncation = 0; // 0: automatic via certified ratio-test tail bound
};

struct Expansion {
    Family family = Family::BarutGirardello;
    complexd parameter;
    int ell = 0;
    std::vector<complexd> c; // c[n] on psi_n^l, n = 0..N
    double norm_sq = 0.0;    // sum |c_n|^2
    double tail_bound = 0.0; // certified bound on the dropped tail of norm^2
};

// Barut-Girardello: K- eigenstate with eigenvalue z.
//   c_n = sqrt(|z|^l / I_l(2|z|)) z^n / sqrt(n! Gamma(n+l+1))
Expansion bg_expand(const StateSpec& spec);

// Perelomov: displaced lowest state.
//   c_n = (1-|eta|^2)^{(l+1)/2} sqrt(Gamma(n+l+1)/(n! Gamma(l+1))) eta^n
Expansion perelomov_expand(const StateSpec& spec);

// K- eigenvalue residual max_n |sqrt((n+1)(n+l+1)) c_{n+1} - z c_n| over the
// kept range, scaled by max |z c_n|.
double bg_eigen_residual(const Expansion& e);

// <z1|z2> closed forms (left slot conjugated).
complexd bg_overlap(const StateSpec& a, const StateSpec& b);
complexd perelomov_overlap(const StateSpec& a, const StateSpec& b);

// Resolution-of-identity diagonal checks: quadrature over the family measure
// of |<psi_n | state>|^2-type products; returns the (n, m) matrix element,
// which must be delta_nm.
double bg_identity_element(int ell, int n, int m);
// Refused (throws) at l = 0: the Perelomov measure (l/pi)(1-|eta|^2)^{-2}
// ... (1-|eta|^2)^{l-1} carries weight l.
double perelomov_identity_element(int ell, int n, int m);

// Time evolution: each c_n picks the mode phase of psi_n^l.
std::vector<complexd> evolve_coefficients(const Expansion& e,
                                          const OscillatorConfig& cfg,
                                          const ErmakovSolution& es, double t);

// Radial samples of the coherent wavefunction at angle alpha over u-nodes
// (u = nu r^2 / rho^2): truncated series with per-mode phases, and at t = 0
// also the closed form (Bessel-type entire series for BG, binomial for
// Perelomov).
struct Samples {
    std::vector<double> u;
    std::vector<complexd> series;
    std::optional<std::vector<complexd>> closed; // engaged iff t == 0
};
Samples evaluate(const StateSpec& spec, const OscillatorConfig& cfg,
                 const ErmakovSolution& es, const std::vector<double>& u_nodes,
                 double t, double alpha = 0.0, bool require_closed_form = false);

// Analytic-function transforms of an expansion |Phi> = sum c_n psi_n^l:
//   BG:        f(w) = sum c_n w^n / sqrt(n! Gamma(n+l+1))   (entire)
//   Perelomov: f(w) = sum c_n sqrt(Gamma(n+l+1)/(n! Gamma(l+1))) w^n, |w| < 1
// satisfying sqrt(I_l(2|z|)/|z|^l) <psi_z|Phi> = f(conj(z)) and
// (1-|eta|^2)^{-(l+1)/2} <psi_eta|Phi> = f(conj(eta)).
std::function<complexd(complexd)> analytic_transform(Family family, int ell,
                                                     std::vector<complexd> c);

} // namespace dho::coherent
