// Acceptance gate: twelve numbered criteria, one PASS/FAIL line each,
// exit status 0 iff every criterion passes.  Criterion 12 drives the
// installed CLI binary (path via --cli).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dho/classical.hpp"
#include "dho/coherent.hpp"
#include "dho/ermakov.hpp"
#include "dho/matrices.hpp"
#include "dho/specfn.hpp"
#include "dho/spectra.hpp"
#include "dho/su11.hpp"
#include "dho/uncertainty.hpp"

namespace {

using dho::complexd;
using dho::ErmakovSolution;
using dho::ModeIndex;
using dho::OscillatorConfig;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Accumulates named bounds; a criterion passes iff every bound holds.
struct Metrics {
    std::string text;
    bool ok = true;

    void append(const char* name, double value, const char* rel, double limit) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s=%.3e (%s %.1e)",
                      text.empty() ? "" : " ", name, value, rel, limit);
        text += buf;
    }
    void le(const char* name, double value, double tol) {
        ok = ok && std::isfinite(value) && value <= tol;
        append(name, value, "<=", tol);
    }
    void ge(const char* name, double value, double floor) {
        ok = ok && std::isfinite(value) && value >= floor;
        append(name, value, ">=", floor);
    }
    void zero(const char* name, long long defect) {
        ok = ok && defect == 0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s%s=%lld (== 0)",
                      text.empty() ? "" : " ", name, defect);
        text += buf;
    }
    void note(const std::string& s) {
        if (!text.empty()) text += " ";
        text += s;
    }
    void fail(const std::string& why) {
        ok = false;
        note(why);
    }
};

struct Gate {
    bool all_ok = true;

    void run(int number, const char* label, double budget_s,
             const std::function<Metrics()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        Metrics m;
        try {
            m = body();
        } catch (const std::exception& e) {
            m.ok = false;
            m.text = std::string("exception: ") + e.what();
        }
        const double dt = seconds_since(t0);
        if (dt > budget_s) {
            m.ok = false;
            m.text += " RUNTIME OVER BUDGET";
        }
        std::printf("%s criterion %2d (%s): %s [%.2f s / %.0f s]\n",
                    m.ok ? "PASS" : "FAIL", number, label, m.text.c_str(), dt,
                    budget_s);
        std::fflush(stdout);
        all_ok = all_ok && m.ok;
    }
};

OscillatorConfig static_config() {
    OscillatorConfig cfg;
    cfg.frequency = dho::FrequencyProfile::constant(1.0);
    return cfg;
}

OscillatorConfig ck_config(double gamma = 1.0, double omega0 = 1.0) {
    OscillatorConfig cfg;
    cfg.friction = dho::FrictionProfile::exponential_decay(gamma);
    cfg.frequency = dho::FrequencyProfile::constant(omega0);
    return cfg;
}

// --- criterion 1: classical closed forms vs adaptive integrator -------------

Metrics criterion_classical() {
    Metrics m;
    std::vector<std::pair<const char*, OscillatorConfig>> cases;
    cases.emplace_back("overdamped", ck_config(3.0, 1.0));
    cases.emplace_back("underdamped", ck_config(1.0, 1.0));
    cases.emplace_back("critical", ck_config(2.0, 1.0));
    {
        OscillatorConfig cfg;
        cfg.friction = dho::FrictionProfile::exponential_decay(1.0);
        cfg.frequency = dho::FrequencyProfile::exp_half(1.0, 1.0);
        cases.emplace_back("exphalf", cfg);
    }
    {
        OscillatorConfig cfg;
        cfg.friction = dho::FrictionProfile::exponential_decay(1.0);
        cfg.frequency = dho::FrequencyProfile::exp_full(1.0, 1.0);
        cases.emplace_back("expfull", cfg);
    }

    double worst = 0.0, slowest = 0.0;
    for (const auto& [name, cfg] : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto regime = dho::classical::classify(cfg);
        const auto params = dho::classical::regime_params(cfg);
        const complexd z0(1.0, 0.5), zdot0(-0.25, 0.75);
        const auto sol = dho::classical::fit_constants(regime, params, z0, zdot0);
        const auto traj =
            dho::classical::integrate_eom(cfg, z0, zdot0, 5.0, 1e-10, 201);
        double dev = 0.0;
        for (std::size_t i = 0; i < traj.t.size(); ++i)
            dev = std::max(dev, std::abs(traj.z[i] -
                                         dho::classical::closed_form(sol,
                                                                     traj.t[i])));
        worst = std::max(worst, dev);
        slowest = std::max(slowest, seconds_since(t0));
    }
    m.le("max_dev_5_regimes", worst, 1e-7);
    m.le("slowest_regime_s", slowest, 1.0);
    return m;
}

// --- criterion 2: Ermakov residuals -----------------------------------------

double max_residual(const ErmakovSolution& es, double t_end) {
    double r = 0.0;
    for (int i = 0; i <= 20; ++i)
        r = std::max(r, es.residual(t_end * double(i) / 20.0));
    return r;
}

Metrics criterion_ermakov() {
    Metrics m;
    m.le("static_closed", max_residual(dho::solve_static(static_config()), 5.0),
         1e-6);
    m.le("ck_exact_ansatz",
         max_residual(dho::solve_caldirola_kanai(ck_config()), 5.0), 1e-6);

    double numeric = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) {
            OscillatorConfig cfg;
            cfg.friction = i == 0 ? dho::FrictionProfile::unit()
                                  : dho::FrictionProfile::exponential_decay(0.4);
            cfg.frequency = j == 0   ? dho::FrequencyProfile::constant(1.3)
                            : j == 1 ? dho::FrequencyProfile::exp_half(1.1, 0.5)
                                     : dho::FrequencyProfile::exp_full(1.2, 0.5);
            const auto ic = dho::default_initial_conditions(cfg);
            const auto es =
                dho::solve_numeric(cfg, ic.first, ic.second, 5.0, 1e-10);
            numeric = std::max(numeric, max_residual(es, 5.0));
        }
    }
    m.le("numeric_2x3", numeric, 1e-6);
    return m;
}

// --- criterion 3: invariance + sentinel --------------------------------------

Metrics criterion_invariance() {
    Metrics m;
    const auto stat = static_config();
    const auto ck = ck_config();
    const double r_static = dho::matrices::invariance_residual(
        stat, dho::solve_static(stat), 1.0, 1e-4, 8);
    const double r_ck = dho::matrices::invariance_residual(
        ck, dho::solve_caldirola_kanai(ck), 1.0, 1e-4, 8);
    m.le("residual_N8", std::max(r_static, r_ck), 1e-6);
    const auto wrong = ErmakovSolution::constant_trial(ck, 1.0);
    m.ge("sentinel_rho1", dho::matrices::invariance_residual(ck, wrong, 1.0,
                                                             1e-4, 8),
         1e-2);
    return m;
}

// --- criterion 4: spectra ----------------------------------------------------

Metrics criterion_spectra() {
    Metrics m;
    const auto stat = static_config();
    const auto ck = ck_config();
    const auto es_stat = dho::solve_static(stat);
    const auto es_ck = dho::solve_caldirola_kanai(ck);

    double eig = 0.0, lz = 0.0, hrel = 0.0;
    long long lz_closed_defect = 0;
    for (int which = 0; which < 2; ++which) {
        const auto& cfg = which == 0 ? stat : ck;
        const auto& es = which == 0 ? es_stat : es_ck;
        const double t = which == 0 ? 0.0 : 0.7;
        const auto rep = dho::matrices::build_rep(cfg, es, t, 8);
        const auto spec = dho::matrices::interior_invariant_spectrum(rep);
        for (std::size_t i = 0; i < spec.computed.size(); ++i)
            eig = std::max(eig, std::abs(spec.computed[i] - spec.expected[i]));
        for (int np = 0; np <= 6; ++np) {
            for (int nm = 0; nm <= 6; ++nm) {
                const ModeIndex mode{np, nm};
                lz_closed_defect = std::max(
                    lz_closed_defect,
                    std::llabs(dho::spectra::angular_momentum_eigenvalue(mode) -
                               (nm - np)));
                lz = std::max(
                    lz, std::abs(dho::matrices::expectation(
                                     rep, rep.angular_momentum, mode) -
                                 complexd(double(nm - np))));
                const double closed =
                    dho::spectra::hamiltonian_expectation(cfg, es, mode, t);
                const auto mat =
                    dho::matrices::expectation(rep, rep.hamiltonian, mode);
                hrel = std::max(hrel, std::abs(mat - closed) / std::abs(closed));
            }
        }
    }
    m.le("eigenvalue_multiset", eig, 1e-10);
    m.zero("lz_closed", lz_closed_defect);
    m.le("lz_matrix", lz, 1e-12);
    m.le("hamiltonian_rel", hrel, 1e-9);
    return m;
}

// --- criterion 5: orthonormality ---------------------------------------------

Metrics criterion_gram() {
    Metrics m;
    const auto stat = static_config();
    const auto ck = ck_config();
    const auto gs =
        dho::spectra::gram_matrix(stat, dho::solve_static(stat), 4, 0.0, 64);
    const auto gc = dho::spectra::gram_matrix(
        ck, dho::solve_caldirola_kanai(ck), 4, 0.5, 64);
    m.le("identity_dev",
         std::max(std::max(gs.max_diag_error, gs.max_offdiag),
                  std::max(gc.max_diag_error, gc.max_offdiag)),
         1e-7);
    return m;
}

// --- criterion 6: Schrodinger residual ---------------------------------------

Metrics criterion_schrodinger() {
    Metrics m;
    const auto stat = static_config();
    const auto ck = ck_config();
    const auto es_stat = dho::solve_static(stat);
    const auto es_ck = dho::solve_caldirola_kanai(ck);
    double worst = 0.0;
    for (int which = 0; which < 2; ++which) {
        const auto& cfg = which == 0 ? stat : ck;
        const auto& es = which == 0 ? es_stat : es_ck;
        for (const ModeIndex mode : {ModeIndex{0, 0}, ModeIndex{1, 0}})
            worst = std::max(worst, dho::spectra::schrodinger_residual(
                                        cfg, es, mode, 0.5, 256));
    }
    m.le("residual_256", worst, 1e-4);
    return m;
}

// --- criterion 7: evolution-phase closed forms --------------------------------

Metrics criterion_phase() {
    Metrics m;
    const auto stat = static_config();
    const auto ck = ck_config();
    const auto es_stat = dho::solve_static(stat);
    const auto es_ck = dho::solve_caldirola_kanai(ck);
    const double w0 = 1.0;
    const double cap = std::sqrt(w0 * w0 - 0.25); // gamma = 1

    double dev_static = 0.0, dev_ck = 0.0;
    for (const ModeIndex mode : {ModeIndex{0, 0}, ModeIndex{1, 2}, ModeIndex{0, 3}}) {
        const double quanta = double(mode.n_plus + mode.n_minus + 1);
        for (double t : {0.5, 2.0, 4.0}) {
            dev_static = std::max(
                dev_static, std::abs(dho::spectra::lr_phase(stat, es_stat, mode,
                                                            t) -
                                     (-w0 * quanta * t)));
            dev_ck = std::max(dev_ck,
                              std::abs(dho::spectra::lr_phase(ck, es_ck, mode,
                                                              t) -
                                       (-cap * quanta * t)));
        }
    }
    m.le("static_dev", dev_static, 1e-9);
    m.le("ck_dev", dev_ck, 1e-9);
    return m;
}

// --- criterion 8: uncertainty relations ---------------------------------------

Metrics criterion_uncertainty() {
    Metrics m;
    const auto stat = static_config();
    const auto ck = ck_config();
    const auto es_stat = dho::solve_static(stat);
    const auto es_ck = dho::solve_caldirola_kanai(ck);

    double rel = 0.0, scaling = 0.0, floor_gap = 0.0;
    for (int which = 0; which < 2; ++which) {
        const auto& cfg = which == 0 ? stat : ck;
        const auto& es = which == 0 ? es_stat : es_ck;
        const double t = which == 0 ? 0.0 : 0.6;
        const double f = cfg.f(t);
        for (int n = 0; n <= 4; ++n) {
            for (int ell = -(4 - n); ell <= 4 - n; ++ell) {
                const auto closed =
                    dho::uncertainty::closed_form(cfg, es, n, ell, t);
                const auto quad =
                    dho::uncertainty::quadrature(cfg, es, n, ell, t);
                rel = std::max(rel,
                               std::abs(quad.dx1 - closed.dx1) / closed.dx1);
                rel = std::max(rel,
                               std::abs(quad.dp1 - closed.dp1) / closed.dp1);
                rel = std::max(rel, std::abs(quad.prod_x1p1 - closed.prod_x1p1) /
                                        closed.prod_x1p1);
                scaling = std::max(scaling, std::abs(closed.prod_x1pk1 -
                                                     f * closed.prod_x1p1));
            }
        }
    }
    // Canonical floor swept over time as well as mode.
    for (double t = 0.0; t <= 3.5; t += 0.25) {
        for (int n = 0; n <= 3; ++n)
            for (int ell = -3; ell <= 3; ++ell) {
                const auto r = dho::uncertainty::closed_form(ck, es_ck, n, ell, t);
                floor_gap = std::max(floor_gap,
                                     std::max(0.0, 0.5 - r.prod_x1p1));
            }
    }
    m.le("closed_vs_quadrature_rel", rel, 1e-6);
    m.le("kinetic_scaling_dev", scaling, 0.0);
    m.le("canonical_floor_gap", floor_gap, 1e-12);
    const auto ground = dho::uncertainty::closed_form(stat, es_stat, 0, 0, 0.0);
    m.le("static_ground_saturation", std::abs(ground.prod_x1p1 - 0.5), 1e-12);
    return m;
}

// --- criterion 9: su(1,1) ------------------------------------------------------

Metrics criterion_su11() {
    Metrics m;
    long long defect = 0;
    double roundoff = 0.0, casimir = 0.0;
    for (int ell = 0; ell <= 5; ++ell) {
        for (int n = 0; n <= 10; ++n) {
            defect = std::max(defect, dho::su11::algebra_defect(ell, n));
            roundoff = std::max(roundoff, dho::su11::commutator_residual(ell, n));
        }
        casimir = std::max(
            casimir,
            std::abs(dho::su11::casimir_eigenvalue(ell) -
                     (double(ell) + 1.0) * (double(ell) - 1.0) / 4.0));
    }
    m.zero("algebra_defect", defect);
    m.le("ladder_roundoff", roundoff, 1e-12);
    m.le("casimir_dev", casimir, 0.0);

    const auto ck = ck_config();
    const auto es = dho::solve_caldirola_kanai(ck);
    const dho::su11::VGrid grid;
    double diff = 0.0;
    for (const complexd vp : {complexd(1.0, 0.0), dho::su11::varpi(ck, es, 0.4)}) {
        for (const auto [ell, n] :
             {std::pair{0, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 4}, {5, 6}}) {
            diff = std::max(diff, dho::su11::differential_ladder_residual(
                                      ell, n, '+', vp, grid));
            diff = std::max(diff, dho::su11::differential_ladder_residual(
                                      ell, n, '-', vp, grid));
        }
    }
    m.le("differential_vs_ladder", diff, 1e-7);
    return m;
}

// --- criterion 10: coherent states ---------------------------------------------

Metrics criterion_coherent() {
    using dho::coherent::Family;
    using dho::coherent::StateSpec;
    Metrics m;

    double eig = 0.0, norm_dev = 0.0;
    for (const complexd z : {complexd(0.5, 0.0), complexd(1.0, 0.8),
                             complexd(-2.0, 0.1), complexd(0.0, 3.0)}) {
        for (int ell : {0, 2, 5}) {
            StateSpec s;
            s.family = Family::BarutGirardello;
            s.parameter = z;
            s.ell = ell;
            const auto e = dho::coherent::bg_expand(s);
            eig = std::max(eig, dho::coherent::bg_eigen_residual(e));
            norm_dev = std::max(norm_dev, std::abs(e.norm_sq - 1.0));
        }
    }
    for (const complexd eta : {complexd(0.5, 0.0), complexd(0.3, 0.2),
                               complexd(-0.5, 0.0), complexd(0.0, 0.7)}) {
        for (int ell : {0, 1, 3}) {
            StateSpec s;
            s.family = Family::Perelomov;
            s.parameter = eta;
            s.ell = ell;
            norm_dev = std::max(
                norm_dev,
                std::abs(dho::coherent::perelomov_expand(s).norm_sq - 1.0));
        }
    }
    m.le("bg_eigenproperty", eig, 1e-10);
    m.le("norms", norm_dev, 1e-10);

    const auto series_overlap = [](const dho::coherent::Expansion& a,
                                   const dho::coherent::Expansion& b) {
        complexd acc(0.0);
        const std::size_t n = std::min(a.c.size(), b.c.size());
        for (std::size_t i = 0; i < n; ++i) acc += std::conj(a.c[i]) * b.c[i];
        return acc;
    };

    double overlap_dev = 0.0;
    for (int ell : {0, 2}) {
        StateSpec a, b;
        a.family = b.family = Family::BarutGirardello;
        a.parameter = complexd(1.0, 1.0);
        b.parameter = complexd(0.7, -0.3);
        a.ell = b.ell = ell;
        overlap_dev = std::max(
            overlap_dev,
            std::abs(dho::coherent::bg_overlap(a, b) -
                     series_overlap(dho::coherent::bg_expand(a),
                                    dho::coherent::bg_expand(b))));
    }
    for (int ell : {0, 1, 3}) {
        StateSpec a, b;
        a.family = b.family = Family::Perelomov;
        a.parameter = complexd(0.3, 0.2);
        b.parameter = complexd(-0.5, 0.0);
        a.ell = b.ell = ell;
        overlap_dev = std::max(
            overlap_dev,
            std::abs(dho::coherent::perelomov_overlap(a, b) -
                     series_overlap(dho::coherent::perelomov_expand(a),
                                    dho::coherent::perelomov_expand(b))));
    }
    m.le("overlap_closed_vs_series", overlap_dev, 1e-9);

    double bg_id = 0.0;
    for (int ell : {0, 2, 4})
        for (int n = 0; n <= 10; ++n)
            bg_id = std::max(
                bg_id,
                std::abs(dho::coherent::bg_identity_element(ell, n, n) - 1.0));
    m.le("bg_identity_diag", bg_id, 1e-7);

    double p_id = 0.0;
    for (int ell : {1, 3})
        for (int n = 0; n <= 10; ++n)
            p_id = std::max(
                p_id, std::abs(dho::coherent::perelomov_identity_element(
                                   ell, n, n) -
                               1.0));
    m.le("perelomov_identity_diag", p_id, 1e-7);
    return m;
}

// --- criterion 11: special-function identities ----------------------------------

Metrics criterion_specfn() {
    Metrics m;
    double ortho = 0.0;
    for (double ell : {0.0, 1.0, 3.0}) {
        const auto rule = dho::specfn::gauss_laguerre_rule(64, ell);
        for (int n = 0; n <= 6; ++n) {
            for (int k = 0; k <= n; ++k) {
                const double got = rule.apply([&](double x) {
                    return dho::specfn::laguerre(n, ell, x) *
                           dho::specfn::laguerre(k, ell, x);
                });
                const double want =
                    n == k ? std::exp(dho::specfn::log_gamma(double(n) + ell +
                                                             1.0) -
                                      dho::specfn::log_gamma(double(n) + 1.0))
                           : 0.0;
                ortho = std::max(ortho, std::abs(got - want) /
                                            std::max(1.0, std::abs(want)));
            }
        }
    }
    m.le("laguerre_orthogonality", ortho, 1e-10);

    double gen_g = 0.0;
    for (int ell : {0, 1, 2}) {
        for (const auto [u, z] : {std::pair{0.7, 0.3}, {2.0, -0.4}}) {
            double series = 0.0, zn = 1.0;
            for (int n = 0; n <= 140; ++n) {
                series += dho::specfn::laguerre(n, double(ell), u) * zn;
                zn *= z;
            }
            const double closed = std::pow(1.0 - z, -double(ell) - 1.0) *
                                  std::exp(u * z / (z - 1.0));
            gen_g = std::max(gen_g, std::abs(series - closed));
        }
    }
    m.le("generating_ordinary", gen_g, 1e-10);

    double gen_j = 0.0;
    for (int ell : {0, 1, 2}) {
        const double u = 1.3, z = 0.8;
        double series = 0.0, zn = 1.0;
        for (int n = 0; n <= 60; ++n) {
            series += zn * dho::specfn::laguerre(n, double(ell), u) /
                      std::exp(dho::specfn::log_gamma(double(n + ell) + 1.0));
            zn *= z;
        }
        const complexd closed =
            std::exp(z) *
            dho::specfn::bessel_j_ratio(double(ell), complexd(u * z));
        gen_j = std::max(gen_j, std::abs(complexd(series) - closed));
    }
    m.le("generating_bessel", gen_j, 1e-10);

    double bsum = 0.0;
    for (double mu : {0.0, 1.0, 2.0}) {
        const double x = 1.7;
        const complexd lhs = dho::specfn::bessel_i_ratio(mu, complexd(x * x));
        const double rhs =
            dho::specfn::bessel_i(mu, 2.0 * x) / std::pow(x, mu);
        bsum = std::max(bsum, std::abs(lhs - complexd(rhs)));
    }
    m.le("bessel_sum_identity", bsum, 1e-12);
    return m;
}

// --- criterion 12: CLI verify + determinism --------------------------------------

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Metrics criterion_cli(const std::string& cli) {
    namespace fs = std::filesystem;
    Metrics m;
    if (cli.empty()) {
        m.fail("no --cli <path> given");
        return m;
    }
    if (!fs::exists(cli)) {
        m.fail("cli binary not found: " + cli);
        return m;
    }

    const fs::path dir =
        fs::temp_directory_path() /
        ("dho-acceptance-" +
         std::to_string(std::chrono::steady_clock::now().time_since_epoch()
                            .count()));
    fs::create_directories(dir);
    const fs::path cfg_path = dir / "static.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"oscillator":{"frequency":{"kind":"constant","omega0":1.0}}})"
            << "\n";
    }
    const fs::path log = dir / "run.log";
    const auto run = [&](const std::string& sub, const fs::path& out) {
        const std::string cmd = "\"" + cli + "\" " + sub + " --config \"" +
                                cfg_path.string() + "\" --out \"" +
                                out.string() + "\" >> \"" + log.string() +
                                "\" 2>&1";
        return std::system(cmd.c_str());
    };

    const int v1 = run("verify", dir / "verify1.csv");
    const int v2 = run("verify", dir / "verify2.csv");
    if (v1 != 0 || v2 != 0) m.fail("verify exited nonzero");
    else m.note("verify_exit=0");

    const int c1 = run("classical", dir / "classical1.csv");
    const int c2 = run("classical", dir / "classical2.csv");
    if (c1 != 0 || c2 != 0) m.fail("classical exited nonzero");

    const std::string va = slurp(dir / "verify1.csv");
    const std::string vb = slurp(dir / "verify2.csv");
    const std::string ca = slurp(dir / "classical1.csv");
    const std::string cb = slurp(dir / "classical2.csv");
    if (va.empty() || ca.empty()) m.fail("empty CSV output");
    if (va != vb || ca != cb) m.fail("CSV outputs differ between runs");
    else m.note("csv_byte_identical=yes");

    if (m.ok) fs::remove_all(dir);
    else m.note("artifacts kept in " + dir.string());
    return m;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--cli" && i + 1 < argc) cli = argv[++i];
    }

    const auto t0 = std::chrono::steady_clock::now();
    Gate gate;
    gate.run(1, "classical closed form vs integrator", 5.0, criterion_classical);
    gate.run(2, "Ermakov residuals", 2.0, criterion_ermakov);
    gate.run(3, "invariance + sentinel", 5.0, criterion_invariance);
    gate.run(4, "invariant spectra and expectations", 5.0, criterion_spectra);
    gate.run(5, "eigenfunction orthonormality", 1.0, criterion_gram);
    gate.run(6, "Schrodinger residual", 30.0, criterion_schrodinger);
    gate.run(7, "evolution-phase closed forms", 1.0, criterion_phase);
    gate.run(8, "uncertainty relations", 10.0, criterion_uncertainty);
    gate.run(9, "su(1,1) structure", 2.0, criterion_su11);
    gate.run(10, "coherent states", 20.0, criterion_coherent);
    gate.run(11, "special-function identities", 2.0, criterion_specfn);
    gate.run(12, "CLI verify + determinism", 60.0,
             [&cli] { return criterion_cli(cli); });

    std::printf("%s: 12 criteria evaluated in %.2f s\n",
                gate.all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                seconds_since(t0));
    return gate.all_ok ? 0 : 1;
}
