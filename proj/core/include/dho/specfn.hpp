#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace dho::specfn {

using complexd = std::complex<double>;

// Generalized Laguerre polynomial L_n^l(u) by upward three-term recurrence.
// l may be any real >= 0, u >= 0.
double laguerre(int n, double l, double u);

// Physicists' Hermite polynomial H_n(x) by upward recurrence.
double hermite(int n, double x);

// ln Gamma(x) for x > 0, Lanczos approximation, relative error < 1e-13.
double log_gamma(double x);

// Ordinary Bessel J_nu(x), nu >= 0 real, x >= 0.
// Power series for moderate x, Hankel asymptotic expansion for large x.
double bessel_j(double nu, double x);

// Bessel second kind Y_n(x) for integer n in {0, 1}, x > 0.
// Needed by the exponentially-decaying-frequency classical solution.
double bessel_y(int n, double x);

// Modified Bessel I_nu(x), nu >= 0, x >= 0, by the defining power series.
// Throws on overflow rather than saturating.
double bessel_i(double nu, double x);

// Modified Bessel K_nu(x), nu >= 0, x > 0, from the integral representation
// K_nu(x) = Int_0^inf exp(-x cosh t) cosh(nu t) dt with adaptive refinement.
double bessel_k(double nu, double x);

// Entire functions of w (no branch cuts):
//   bessel_i_ratio(l, w) = I_l(2 sqrt(w)) / w^{l/2} = sum_k w^k / (k! Gamma(k+l+1))
//   bessel_j_ratio(l, w) = J_l(2 sqrt(w)) / w^{l/2} = sum_k (-w)^k / (k! Gamma(k+l+1))
// These carry all complex-argument Bessel uses of the coherent-state overlaps
// and generating-function evaluations; only the product argument w matters.
complexd bessel_i_ratio(double l, complexd w);
complexd bessel_j_ratio(double l, complexd w);

struct QuadratureRule {
    enum class Kind { GaussLaguerre, Trapezoid };
    Kind kind;
    double weight_exponent = 0.0; // l in the weight u^l e^{-u} (GaussLaguerre only)
    std::vector<double> nodes;
    std::vector<double> weights;

    double apply(const std::function<double(double)>& g) const;
};

// Nodes/weights for Int_0^inf u^l e^{-u} g(u) du, exact for polynomials of
// degree <= 2*order - 1. Golub-Welsch on the Jacobi matrix of L_n^l.
QuadratureRule gauss_laguerre_rule(int order, double l);

// Trapezoid rule on an explicit grid (uniform or not).
QuadratureRule trapezoid_rule(const std::vector<double>& grid);

// Adaptive Gauss-Kronrod (G7, K15) on [a, b], absolute error target tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

} // namespace dho::specfn
