#include "dho/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "dho/classical.hpp"
#include "dho/coherent.hpp"
#include "dho/ermakov.hpp"
#include "dho/matrices.hpp"
#include "dho/specfn.hpp"
#include "dho/spectra.hpp"
#include "dho/su11.hpp"
#include "dho/uncertainty.hpp"

namespace dho::verify {
namespace {

using complexd = std::complex<double>;

void add(std::vector<Check>& out, std::string name, double value, double tol) {
    Check c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = tol;
    c.pass = std::isfinite(value) && value <= tol;
    out.push_back(std::move(c));
}

// Sentinel-style check: the measured value must EXCEED the floor.
void add_floor(std::vector<Check>& out, std::string name, double value,
               double floor) {
    Check c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = floor;
    c.pass = std::isfinite(value) && value >= floor;
    out.push_back(std::move(c));
}

OscillatorConfig static_config() {
    OscillatorConfig cfg;
    cfg.frequency = FrequencyProfile::constant(1.0);
    return cfg;
}

OscillatorConfig ck_config(double gamma = 1.0, double omega0 = 1.0) {
    OscillatorConfig cfg;
    cfg.friction = FrictionProfile::exponential_decay(gamma);
    cfg.frequency = FrequencyProfile::constant(omega0);
    return cfg;
}

double classical_deviation(const OscillatorConfig& cfg) {
    const auto regime = classical::classify(cfg);
    const auto params = classical::regime_params(cfg);
    const complexd z0(1.0, 0.5), zdot0(-0.25, 0.75);
    const auto sol = classical::fit_constants(regime, params, z0, zdot0);
    const auto traj = classical::integrate_eom(cfg, z0, zdot0, 5.0, 1e-10, 64);
    double dev = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); ++i)
        dev = std::max(dev,
                       std::abs(traj.z[i] - classical::closed_form(sol, traj.t[i])));
    return dev;
}

double max_residual(const ErmakovSolution& es, double t_end) {
    double r = 0.0;
    for (int i = 0; i <= 20; ++i)
        r = std::max(r, es.residual(t_end * double(i) / 20.0));
    return r;
}

void classical_checks(std::vector<Check>& out) {
    {
        auto cfg = ck_config(3.0, 1.0);
        add(out, "classical.overdamped", classical_deviation(cfg), 1e-7);
    }
    {
        auto cfg = ck_config(1.0, 1.0);
        add(out, "classical.underdamped", classical_deviation(cfg), 1e-7);
    }
    {
        auto cfg = ck_config(2.0, 1.0);
        add(out, "classical.critical", classical_deviation(cfg), 1e-7);
    }
    {
        OscillatorConfig cfg;
        cfg.friction = FrictionProfile::exponential_decay(1.0);
        cfg.frequency = FrequencyProfile::exp_half(1.0, 1.0);
        add(out, "classical.exphalf_frequency", classical_deviation(cfg), 1e-7);
    }
    {
        OscillatorConfig cfg;
        cfg.friction = FrictionProfile::exponential_decay(1.0);
        cfg.frequency = FrequencyProfile::exp_full(1.0, 1.0);
        add(out, "classical.exp_frequency", classical_deviation(cfg), 1e-7);
    }
}

void ermakov_checks(std::vector<Check>& out, const OscillatorConfig& user,
                    double user_t_end) {
    add(out, "ermakov.static", max_residual(solve_static(static_config()), 5.0),
        1e-6);
    add(out, "ermakov.caldirola_kanai",
        max_residual(solve_caldirola_kanai(ck_config()), 5.0), 1e-6);

    const char* fric_names[] = {"unit", "exponential"};
    const char* freq_names[] = {"constant", "exphalf", "exp"};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) {
            OscillatorConfig cfg;
            cfg.friction = i == 0 ? FrictionProfile::unit()
                                  : FrictionProfile::exponential_decay(0.4);
            cfg.frequency = j == 0   ? FrequencyProfile::constant(1.3)
                            : j == 1 ? FrequencyProfile::exp_half(1.1, 0.5)
                                     : FrequencyProfile::exp_full(1.2, 0.5);
            const auto ic = default_initial_conditions(cfg);
            const auto es = solve_numeric(cfg, ic.first, ic.second, 5.0, 1e-10);
            add(out,
                std::string("ermakov.numeric.") + fric_names[i] + "_" +
                    freq_names[j],
                max_residual(es, 5.0), 1e-6);
        }
    }

    const double te = std::min(user_t_end, 5.0);
    add(out, "ermakov.config", max_residual(solve_auto(user, te, 1e-10), te),
        1e-6);
}

void matrices_checks(std::vector<Check>& out) {
    const auto stat = static_config();
    const auto ck = ck_config();
    const auto es_stat = solve_static(stat);
    const auto es_ck = solve_caldirola_kanai(ck);

    double codes = 0.0;
    for (double t : {0.3, 1.0, 2.5}) {
        codes = std::max(codes,
                         matrices::coefficient_system_residual(stat, es_stat, t));
        codes = std::max(codes,
                         matrices::coefficient_system_residual(ck, es_ck, t));
    }
    add(out, "matrices.coefficient_odes", codes, 1e-6);

    add(out, "matrices.invariance.static",
        matrices::invariance_residual(stat, es_stat, 1.0, 1e-4, 8), 1e-6);
    add(out, "matrices.invariance.caldirola_kanai",
        matrices::invariance_residual(ck, es_ck, 1.0, 1e-4, 8), 1e-6);

    const auto wrong = ErmakovSolution::constant_trial(ck, 1.0);
    add_floor(out, "matrices.sentinel_wrong_rho",
              matrices::invariance_residual(ck, wrong, 1.0, 1e-4, 8), 1e-2);
}

void spectra_checks(std::vector<Check>& out) {
    const auto stat = static_config();
    const auto ck = ck_config();
    const auto es_stat = solve_static(stat);
    const auto es_ck = solve_caldirola_kanai(ck);

    double eig = 0.0, lz_closed = 0.0, lz_matrix = 0.0, hrel = 0.0;
    for (int which = 0; which < 2; ++which) {
        const auto& cfg = which == 0 ? stat : ck;
        const auto& es = which == 0 ? es_stat : es_ck;
        const double t = which == 0 ? 0.0 : 0.7;
        const auto rep = matrices::build_rep(cfg, es, t, 8);
        const auto spec = matrices::interior_invariant_spectrum(rep);
        for (std::size_t i = 0; i < spec.computed.size(); ++i)
            eig = std::max(eig, std::abs(spec.computed[i] - spec.expected[i]));
        for (int np = 0; np <= 6; ++np) {
            for (int nm = 0; nm <= 6; ++nm) {
                const ModeIndex mode{np, nm};
                lz_closed = std::max(
                    lz_closed,
                    std::abs(double(spectra::angular_momentum_eigenvalue(mode)) -
                             double(nm - np)));
                lz_matrix = std::max(
                    lz_matrix,
                    std::abs(matrices::expectation(rep, rep.angular_momentum,
                                                   mode) -
                             complexd(double(nm - np))));
                const double closed =
                    spectra::hamiltonian_expectation(cfg, es, mode, t);
                const auto mat =
                    matrices::expectation(rep, rep.hamiltonian, mode);
                hrel = std::max(hrel, std::abs(mat - closed) / std::abs(closed));
            }
        }
    }
    add(out, "spectra.invariant_eigenvalues", eig, 1e-10);
    add(out, "spectra.angular_momentum_closed", lz_closed, 0.0);
    add(out, "spectra.angular_momentum_matrix", lz_matrix, 1e-12);
    add(out, "spectra.hamiltonian_expectation", hrel, 1e-9);

    const auto gs = spectra::gram_matrix(stat, es_stat, 4, 0.0);
    add(out, "spectra.orthonormality.static",
        std::max(gs.max_diag_error, gs.max_offdiag), 1e-7);
    const auto gc = spectra::gram_matrix(ck, es_ck, 4, 0.5);
    add(out, "spectra.orthonormality.caldirola_kanai",
        std::max(gc.max_diag_error, gc.max_offdiag), 1e-7);

    for (int which = 0; which < 2; ++which) {
        const auto& cfg = which == 0 ? stat : ck;
        const auto& es = which == 0 ? es_stat : es_ck;
        const char* tag = which == 0 ? "static" : "caldirola_kanai";
        add(out, std::string("spectra.schrodinger.") + tag + ".n00",
            spectra::schrodinger_residual(cfg, es, ModeIndex{0, 0}, 0.5), 1e-4);
        add(out, std::string("spectra.schrodinger.") + tag + ".n10",
            spectra::schrodinger_residual(cfg, es, ModeIndex{1, 0}, 0.5), 1e-4);
    }

    // Phase closed forms vs the quadrature path (numeric Ermakov source).
    double ph = 0.0;
    {
        const auto ic = default_initial_conditions(stat);
        const auto es = solve_numeric(stat, ic.first, ic.second, 3.0, 1e-12);
        for (const auto mode : {ModeIndex{0, 0}, ModeIndex{1, 2}}) {
            const double want =
                -1.0 * double(mode.n_plus + mode.n_minus + 1) * 2.0;
            ph = std::max(ph,
                          std::abs(spectra::lr_phase(stat, es, mode, 2.0) - want));
        }
    }
    add(out, "spectra.phase.static", ph, 1e-9);
    {
        const double gamma = 1.0, omega0 = 1.0;
        const double cap = std::sqrt(omega0 * omega0 - 0.25 * gamma * gamma);
        // Start on the exact Caldirola-Kanai amplitude (not the generic
        // default rho0), so the numeric rho follows the closed branch and the
        // quadrature phase can be compared against -(Omega)(N+1) t.
        const double rho0 = std::sqrt(1.0 / cap);
        const auto es = solve_numeric(ck, rho0, -0.5 * gamma * rho0, 3.0, 1e-12);
        double phc = 0.0;
        for (const auto mode : {ModeIndex{0, 0}, ModeIndex{1, 2}}) {
            const double want =
                -cap * double(mode.n_plus + mode.n_minus + 1) * 2.0;
            phc = std::max(
                phc, std::abs(spectra::lr_phase(ck, es, mode, 2.0) - want));
        }
        add(out, "spectra.phase.caldirola_kanai", phc, 1e-9);
    }
}

void uncertainty_checks(std::vector<Check>& out) {
    const auto stat = static_config();
    const auto ck = ck_config();
    const auto es_stat = solve_static(stat);
    const auto es_ck = solve_caldirola_kanai(ck);

    double rel = 0.0, scaling = 0.0;
    double min_floor_gap = 0.0; // max(0, 1/2 - dx dp)
    for (int which = 0; which < 2; ++which) {
        const auto& cfg = which == 0 ? stat : ck;
        const auto& es = which == 0 ? es_stat : es_ck;
        const double t = which == 0 ? 0.0 : 0.6;
        const double f = cfg.f(t);
        for (int n = 0; n <= 4; ++n) {
            for (int ell = -(4 - n); ell <= 4 - n; ++ell) {
                const auto closed = uncertainty::closed_form(cfg, es, n, ell, t);
                const auto quad = uncertainty::quadrature(cfg, es, n, ell, t);
                rel = std::max(rel, std::abs(quad.dx1 - closed.dx1) /
                                        closed.dx1);
                rel = std::max(rel, std::abs(quad.dp1 - closed.dp1) /
                                        closed.dp1);
                rel = std::max(rel,
                               std::abs(quad.prod_x1p1 - closed.prod_x1p1) /
                                   closed.prod_x1p1);
                scaling = std::max(scaling,
                                   std::abs(closed.prod_x1pk1 -
                                            f * closed.prod_x1p1));
                min_floor_gap = std::max(
                    min_floor_gap, std::max(0.0, 0.5 - closed.prod_x1p1));
            }
        }
    }
    add(out, "uncertainty.moments", rel, 1e-6);
    add(out, "uncertainty.kinetic_scaling", scaling, 0.0);
    add(out, "uncertainty.canonical_floor_gap", min_floor_gap, 1e-12);

    const auto ground = uncertainty::closed_form(stat, es_stat, 0, 0, 0.0);
    add(out, "uncertainty.saturation_static_ground",
        std::abs(ground.prod_x1p1 - 0.5), 1e-12);
}

void su11_checks(std::vector<Check>& out) {
    long long defect = 0;
    double roundoff = 0.0;
    for (int ell = 0; ell <= 5; ++ell) {
        for (int n = 0; n <= 10; ++n) {
            defect = std::max(defect, su11::algebra_defect(ell, n));
            roundoff = std::max(roundoff, su11::commutator_residual(ell, n));
        }
    }
    add(out, "su11.algebra_exact", double(defect), 0.0);
    add(out, "su11.ladder_roundoff", roundoff, 1e-12);

    const auto ck = ck_config();
    const auto es = solve_caldirola_kanai(ck);
    const su11::VGrid grid;
    double diff = 0.0;
    for (const complexd vp :
         {complexd(1.0, 0.0), su11::varpi(ck, es, 0.4)}) {
        for (const auto [ell, n] :
             {std::pair{0, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 4}, {5, 6}}) {
            diff = std::max(diff, su11::differential_ladder_residual(
                                      ell, n, '+', vp, grid));
            diff = std::max(diff, su11::differential_ladder_residual(
                                      ell, n, '-', vp, grid));
        }
    }
    add(out, "su11.differential_realization", diff, 1e-7);
}

void coherent_checks(std::vector<Check>& out) {
    using coherent::Family;
    using coherent::StateSpec;

    double eig = 0.0, norm_dev = 0.0;
    const complexd zs[] = {complexd(0.5, 0.0), complexd(1.0, 0.8),
                           complexd(-2.0, 0.1), complexd(0.0, 3.0)};
    for (const complexd z : zs) {
        for (int ell : {0, 2, 5}) {
            StateSpec s;
            s.family = Family::BarutGirardello;
            s.parameter = z;
            s.ell = ell;
            const auto e = coherent::bg_expand(s);
            eig = std::max(eig, coherent::bg_eigen_residual(e));
            norm_dev = std::max(norm_dev, std::abs(e.norm_sq - 1.0));
        }
    }
    const complexd etas[] = {complexd(0.5, 0.0), complexd(0.3, 0.2),
                             complexd(-0.5, 0.0), complexd(0.0, 0.7)};
    for (const complexd eta : etas) {
        for (int ell : {0, 1, 3}) {
            StateSpec s;
            s.family = Family::Perelomov;
            s.parameter = eta;
            s.ell = ell;
            const auto e = coherent::perelomov_expand(s);
            norm_dev = std::max(norm_dev, std::abs(e.norm_sq - 1.0));
        }
    }
    add(out, "coherent.bg_eigenproperty", eig, 1e-10);
    add(out, "coherent.normalization", norm_dev, 1e-10);

    auto series_overlap = [](const coherent::Expansion& a,
                             const coherent::Expansion& b) {
        complexd acc(0.0);
        const std::size_t n = std::min(a.c.size(), b.c.size());
        for (std::size_t i = 0; i < n; ++i)
            acc += std::conj(a.c[i]) * b.c[i];
        return acc;
    };

    double bg_ov = 0.0, bg_max_abs = 0.0;
    {
        const complexd pair_a[] = {complexd(1.0, 0.0), complexd(1.0, 1.0)};
        const complexd pair_b[] = {complexd(0.5, 0.0), complexd(0.7, -0.3)};
        for (int k = 0; k < 2; ++k) {
            for (int ell : {0, 2}) {
                StateSpec a, b;
                a.family = b.family = Family::BarutGirardello;
                a.parameter = pair_a[k];
                b.parameter = pair_b[k];
                a.ell = b.ell = ell;
                const complexd closed = coherent::bg_overlap(a, b);
                const complexd series = series_overlap(coherent::bg_expand(a),
                                                       coherent::bg_expand(b));
                bg_ov = std::max(bg_ov, std::abs(closed - series));
                bg_max_abs = std::max(bg_max_abs, std::abs(closed));
            }
        }
    }
    add(out, "coherent.bg_overlap", bg_ov, 1e-9);
    add(out, "coherent.bg_nonorthogonal", bg_max_abs, 0.9999);

    double p_ov = 0.0;
    {
        const complexd pair_a[] = {complexd(0.5, 0.0), complexd(0.3, 0.2)};
        const complexd pair_b[] = {complexd(-0.5, 0.0), complexd(0.4, 0.0)};
        for (int k = 0; k < 2; ++k) {
            for (int ell : {0, 1, 3}) {
                StateSpec a, b;
                a.family = b.family = Family::Perelomov;
                a.parameter = pair_a[k];
                b.parameter = pair_b[k];
                a.ell = b.ell = ell;
                const complexd closed = coherent::perelomov_overlap(a, b);
                const complexd series = series_overlap(
                    coherent::perelomov_expand(a), coherent::perelomov_expand(b));
                p_ov = std::max(p_ov, std::abs(closed - series));
            }
        }
    }
    add(out, "coherent.perelomov_overlap", p_ov, 1e-9);

    double bg_id = 0.0;
    for (int ell = 0; ell <= 4; ++ell)
        for (int n = 0; n <= 10; ++n)
            bg_id = std::max(bg_id,
                             std::abs(coherent::bg_identity_element(ell, n, n) -
                                      1.0));
    add(out, "coherent.bg_identity_diagonal", bg_id, 1e-7);

    double p_id = 0.0;
    for (int ell = 1; ell <= 4; ++ell)
        for (int n = 0; n <= 10; ++n)
            p_id = std::max(
                p_id, std::abs(coherent::perelomov_identity_element(ell, n, n) -
                               1.0));
    add(out, "coherent.perelomov_identity_diagonal", p_id, 1e-7);

    // Series vs generating-function closed forms at t = 0.
    const auto stat = static_config();
    const auto es = solve_static(stat);
    std::vector<double> u(50);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = 25.0 * double(i) / 49.0;
    double cf = 0.0;
    {
        StateSpec s;
        s.family = Family::BarutGirardello;
        s.parameter = complexd(0.5, 0.0);
        s.ell = 0;
        const auto w = coherent::evaluate(s, stat, es, u, 0.0);
        double scale = 0.0, dev = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            scale = std::max(scale, std::abs((*w.closed)[i]));
            dev = std::max(dev, std::abs(w.series[i] - (*w.closed)[i]));
        }
        cf = std::max(cf, dev / scale);
    }
    {
        StateSpec s;
        s.family = Family::Perelomov;
        s.parameter = complexd(0.3, 0.0);
        s.ell = 1;
        const auto w = coherent::evaluate(s, stat, es, u, 0.0);
        double scale = 0.0, dev = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            scale = std::max(scale, std::abs((*w.closed)[i]));
            dev = std::max(dev, std::abs(w.series[i] - (*w.closed)[i]));
        }
        cf = std::max(cf, dev / scale);
    }
    add(out, "coherent.closed_form_consistency", cf, 1e-9);
}

void specfn_checks(std::vector<Check>& out) {
    // Orthogonality under the exact Gauss-Laguerre rule.
    double ortho = 0.0;
    for (double ell : {0.0, 1.0, 3.0}) {
        const auto rule = specfn::gauss_laguerre_rule(64, ell);
        for (int n = 0; n <= 6; ++n) {
            for (int m = 0; m <= n; ++m) {
                const double got = rule.apply([&](double x) {
                    return specfn::laguerre(n, ell, x) *
                           specfn::laguerre(m, ell, x);
                });
                const double want =
                    n == m ? std::exp(specfn::log_gamma(double(n) + ell + 1.0) -
                                      specfn::log_gamma(double(n) + 1.0))
                           : 0.0;
                ortho = std::max(ortho, std::abs(got - want) /
                                            std::max(1.0, std::abs(want)));
            }
        }
    }
    add(out, "specfn.laguerre_orthogonality", ortho, 1e-10);

    // Ordinary generating function sum_n L_n^l(u) z^n.
    double gen_g = 0.0;
    for (int ell : {0, 1, 2}) {
        for (const auto [u, z] : {std::pair{0.7, 0.3}, {2.0, -0.4}}) {
            double series = 0.0, zn = 1.0;
            for (int n = 0; n <= 140; ++n) {
                series += specfn::laguerre(n, double(ell), u) * zn;
                zn *= z;
            }
            const double closed = std::pow(1.0 - z, -double(ell) - 1.0) *
                                  std::exp(u * z / (z - 1.0));
            gen_g = std::max(gen_g, std::abs(series - closed));
        }
    }
    add(out, "specfn.generating_ordinary", gen_g, 1e-10);

    // Bessel-type generating function sum_n z^n L_n^l(u)/Gamma(n+l+1).
    double gen_j = 0.0;
    for (int ell : {0, 1, 2}) {
        const double u = 1.3, z = 0.8;
        double series = 0.0, zn = 1.0;
        for (int n = 0; n <= 60; ++n) {
            series += zn * specfn::laguerre(n, double(ell), u) /
                      std::exp(specfn::log_gamma(double(n + ell) + 1.0));
            zn *= z;
        }
        const complexd closed =
            std::exp(z) * specfn::bessel_j_ratio(double(ell), complexd(u * z));
        gen_j = std::max(gen_j, std::abs(complexd(series) - closed));
    }
    add(out, "specfn.generating_bessel", gen_j, 1e-10);

    // sum_n x^{2n} / (n! Gamma(n+mu+1)) = I_mu(2x)/x^mu.
    double bsum = 0.0;
    for (double mu : {0.0, 1.0, 2.0}) {
        const double x = 1.7;
        const complexd lhs = specfn::bessel_i_ratio(mu, complexd(x * x));
        const double rhs = specfn::bessel_i(mu, 2.0 * x) / std::pow(x, mu);
        bsum = std::max(bsum, std::abs(lhs - complexd(rhs)));
    }
    add(out, "specfn.bessel_sum_identity", bsum, 1e-12);
}

} // namespace

std::vector<Check> run_suite(const RunConfig& cfg) {
    std::vector<Check> out;
    classical_checks(out);
    ermakov_checks(out, cfg.oscillator, cfg.t_end);
    matrices_checks(out);
    spectra_checks(out);
    uncertainty_checks(out);
    su11_checks(out);
    coherent_checks(out);
    specfn_checks(out);
    return out;
}

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
}

} // namespace dho::verify
