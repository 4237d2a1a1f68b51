#include "dho/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dho/errors.hpp"

namespace dho::matrices {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("matrices", msg); }

const complexd kI(0.0, 1.0);

} // namespace

InvariantCoefficients invariant_coefficients(const OscillatorConfig& cfg,
                                             const ErmakovSolution& es, double t) {
    cfg.validate();
    const double rho = es.rho(t), rd = es.rho_dot(t), f = cfg.f(t);
    const double mu = cfg.m * rd / f;
    InvariantCoefficients c;
    c.alpha = cfg.nu * cfg.nu / (rho * rho) + mu * mu;
    c.beta = rho * rho;
    c.delta = -mu * rho;
    return c;
}

double coefficient_system_residual(const OscillatorConfig& cfg,
                                   const ErmakovSolution& es, double t, double h) {
    double tc = t < h ? h : t;
    const auto cp = invariant_coefficients(cfg, es, tc + h);
    const auto cm = invariant_coefficients(cfg, es, tc - h);
    const auto c0 = invariant_coefficients(cfg, es, tc);
    const double f = cfg.f(tc), w = cfg.omega(tc);
    const double mw2f = cfg.m * w * w / f;

    const double da = (cp.alpha - cm.alpha) / (2.0 * h) - 2.0 * mw2f * c0.delta;
    const double db = (cp.beta - cm.beta) / (2.0 * h) + 2.0 * f / cfg.m * c0.delta;
    const double dd = (cp.delta - cm.delta) / (2.0 * h) + f / cfg.m * c0.alpha -
                      mw2f * c0.beta;
    const double scale = std::max({std::abs(c0.alpha), std::abs(c0.beta),
                                   std::abs(c0.delta), 1.0});
    return std::max({std::abs(da), std::abs(db), std::abs(dd)}) / scale;
}

TruncatedBasisRep build_rep(const OscillatorConfig& cfg, const ErmakovSolution& es,
                            double t, int N) {
    cfg.validate();
    if (N < 3) fail("basis cutoff N must be >= 3");
    TruncatedBasisRep rep;
    rep.N = N;
    rep.t = t;
    rep.cfg = cfg;
    rep.coeff = invariant_coefficients(cfg, es, t);

    const int dim = rep.dim();
    rep.a_plus = MatrixXcd::Zero(dim, dim);
    rep.a_minus = MatrixXcd::Zero(dim, dim);
    auto idx = [N](int np, int nm) { return np * (N + 1) + nm; };
    for (int np = 0; np <= N; ++np)
        for (int nm = 0; nm <= N; ++nm) {
            if (np >= 1)
                rep.a_plus(idx(np - 1, nm), idx(np, nm)) = std::sqrt(double(np));
            if (nm >= 1)
                rep.a_minus(idx(np, nm - 1), idx(np, nm)) = std::sqrt(double(nm));
        }

    const double rho = es.rho(t), rd = es.rho_dot(t), f = cfg.f(t);
    const double mu = cfg.m * rd / f; // m f^{-1} rho_dot
    const double sn = std::sqrt(cfg.nu);

    const MatrixXcd ap_d = rep.a_plus.adjoint();
    const MatrixXcd am_d = rep.a_minus.adjoint();

    // Helicity decompositions of the phase-space operators:
    //   x1 + i x2 = (i rho / sqrt(nu)) (am^+ - ap)
    //   x1 - i x2 = (i rho / sqrt(nu)) (ap^+ - am)
    //   p1 + i p2 = (i mu / sqrt(nu)) (am^+ - ap) - (sqrt(nu)/rho)(am^+ + ap)
    //   p1 - i p2 = (i mu / sqrt(nu)) (ap^+ - am) - (sqrt(nu)/rho)(ap^+ + am)
    const MatrixXcd Xp = kI * (rho / sn) * (am_d - rep.a_plus);
    const MatrixXcd Xm = kI * (rho / sn) * (ap_d - rep.a_minus);
    const MatrixXcd Pp =
        kI * (mu / sn) * (am_d - rep.a_plus) - (sn / rho) * (am_d + rep.a_plus);
    const MatrixXcd Pm =
        kI * (mu / sn) * (ap_d - rep.a_minus) - (sn / rho) * (ap_d + rep.a_minus);

    rep.x1 = 0.5 * (Xp + Xm);
    rep.x2 = -0.5 * kI * (Xp - Xm);
    rep.p1 = 0.5 * (Pp + Pm);
    rep.p2 = -0.5 * kI * (Pp - Pm);

    rep.j_plus = 0.5 * (rep.x1 * rep.x1 + rep.x2 * rep.x2);
    rep.j_minus = 0.5 * (rep.p1 * rep.p1 + rep.p2 * rep.p2);
    rep.j_zero = 0.5 * (rep.x1 * rep.p1 + rep.p1 * rep.x1 + rep.x2 * rep.p2 +
                        rep.p2 * rep.x2);

    rep.invariant = rep.coeff.alpha * rep.j_plus + rep.coeff.beta * rep.j_minus +
                    rep.coeff.delta * rep.j_zero;
    const double w = cfg.omega(t);
    rep.hamiltonian =
        (f / cfg.m) * rep.j_minus + (cfg.m * w * w / f) * rep.j_plus;
    rep.angular_momentum = rep.x1 * rep.p2 - rep.x2 * rep.p1;
    return rep;
}

complexd expectation(const TruncatedBasisRep& rep, const MatrixXcd& op,
                     ModeIndex mode) {
    if (!rep.interior(mode))
        fail("expectation mode lies outside the exact interior block");
    const int i = rep.index(mode);
    return op(i, i);
}

InteriorSpectrum interior_invariant_spectrum(const TruncatedBasisRep& rep,
                                             int margin) {
    std::vector<int> keep;
    std::vector<double> expected;
    for (int np = 0; np <= rep.N - margin; ++np)
        for (int nm = 0; nm <= rep.N - margin; ++nm) {
            keep.push_back(np * (rep.N + 1) + nm);
            expected.push_back(rep.cfg.nu * double(np + nm + 1));
        }
    const int d = int(keep.size());
    MatrixXcd sub(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) sub(r, c) = rep.invariant(keep[r], keep[c]);

    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(sub);
    if (solver.info() != Eigen::Success) fail("invariant eigensolve failed");

    InteriorSpectrum out;
    out.computed.assign(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + d);
    out.expected = std::move(expected);
    std::sort(out.expected.begin(), out.expected.end());
    return out;
}

double invariance_residual(const OscillatorConfig& cfg, const ErmakovSolution& es,
                           double t, double dt, int N) {
    if (!(t - dt >= 0.0)) fail("invariance stencil needs t >= dt");
    const TruncatedBasisRep rep = build_rep(cfg, es, t, N);
    const auto cp = invariant_coefficients(cfg, es, t + dt);
    const auto cm = invariant_coefficients(cfg, es, t - dt);

    // The basis (and with it J+-,0) is frozen at t; the invariant's time
    // dependence lives entirely in the coefficient functions.
    const MatrixXcd i_plus = cp.alpha * rep.j_plus + cp.beta * rep.j_minus +
                             cp.delta * rep.j_zero;
    const MatrixXcd i_minus = cm.alpha * rep.j_plus + cm.beta * rep.j_minus +
                              cm.delta * rep.j_zero;
    const MatrixXcd didt = (i_plus - i_minus) / (2.0 * dt);
    const MatrixXcd comm =
        rep.invariant * rep.hamiltonian - rep.hamiltonian * rep.invariant;
    const MatrixXcd res = didt - kI * comm;

    double num = 0.0, den = 0.0;
    for (int np_r = 0; np_r <= N - 2; ++np_r)
        for (int nm_r = 0; nm_r <= N - 2; ++nm_r)
            for (int np_c = 0; np_c <= N - 2; ++np_c)
                for (int nm_c = 0; nm_c <= N - 2; ++nm_c) {
                    const int r = np_r * (N + 1) + nm_r;
                    const int c = np_c * (N + 1) + nm_c;
                    num = std::max(num, std::abs(res(r, c)));
                    den = std::max(den, std::abs(rep.invariant(r, c)));
                }
    if (den == 0.0) fail("invariant vanished on the interior block");
    return num / den;
}

} // namespace dho::matrices
