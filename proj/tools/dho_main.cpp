#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dho/classical.hpp"
#include "dho/coherent.hpp"
#include "dho/config.hpp"
#include "dho/csv.hpp"
#include "dho/ermakov.hpp"
#include "dho/errors.hpp"
#include "dho/ode.hpp"
#include "dho/specfn.hpp"
#include "dho/spectra.hpp"
#include "dho/uncertainty.hpp"
#include "dho/verify.hpp"

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

struct Options {
    std::string config;
    std::string out;
    std::string mode; // "n+,n-"
    double t_end = -1.0;
    double tol = -1.0;
};

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--config", opt.config, "configuration file (JSON)");
    sub->add_option("--out", opt.out, "output CSV path ('-' for stdout)");
    sub->add_option("--t-end", opt.t_end, "override time horizon");
    sub->add_option("--mode", opt.mode, "override mode as n+,n-");
    sub->add_option("--tol", opt.tol, "override integration tolerance");
}

dho::RunConfig effective_config(const Options& opt) {
    dho::RunConfig rc =
        opt.config.empty()
            ? dho::parse_config(
                  R"({"oscillator":{"frequency":{"kind":"constant","omega0":1.0}}})")
            : dho::load_config(opt.config);
    std::string overrides;
    if (opt.t_end >= 0.0) {
        if (!(opt.t_end > 0.0))
            throw dho::Error("cli", "range error: '--t-end' must be > 0");
        rc.t_end = opt.t_end;
        overrides += "|t_end=" + dho::csv::format_double(rc.t_end);
    }
    if (opt.tol >= 0.0) {
        if (!(opt.tol > 0.0 && opt.tol <= 0.1))
            throw dho::Error("cli", "range error: '--tol' must lie in (0, 0.1]");
        rc.tol = opt.tol;
        overrides += "|tol=" + dho::csv::format_double(rc.tol);
    }
    if (!opt.mode.empty()) {
        int np = -1, nm = -1;
        char extra = 0;
        if (std::sscanf(opt.mode.c_str(), "%d,%d%c", &np, &nm, &extra) != 2 ||
            np < 0 || nm < 0)
            throw dho::Error("cli",
                             "schema error: '--mode' expects n+,n- with n+- >= 0");
        rc.mode = dho::ModeIndex{np, nm};
        overrides += "|mode=" + std::to_string(np) + "," + std::to_string(nm);
    }
    if (!overrides.empty()) rc.canonical_text += overrides;
    return rc;
}

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = nullptr;
};

Output open_output(const Options& opt, const dho::RunConfig& rc,
                   const std::string& fallback) {
    std::string path = !opt.out.empty() ? opt.out
                       : !rc.output.empty() ? rc.output
                                            : fallback;
    Output o;
    if (path == "-") {
        o.os = &std::cout;
        return o;
    }
    o.file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*o.file) throw dho::Error("cli", "cannot open output file '" + path + "'");
    o.os = o.file.get();
    return o;
}

void preamble(dho::csv::Writer& w, const dho::RunConfig& rc, const char* sub) {
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(
                      dho::csv::fnv1a(rc.canonical_text)));
    w.comment(std::string(sub) + " config=fnv1a:" + hash +
              " tol=" + dho::csv::format_double(rc.tol) +
              " t_end=" + dho::csv::format_double(rc.t_end));
}

dho::ErmakovSolution solve_amplitude(const dho::RunConfig& rc) {
    if (rc.ermakov_ic)
        return dho::solve_numeric(rc.oscillator, rc.ermakov_ic->first,
                                  rc.ermakov_ic->second, rc.t_end, rc.tol);
    return dho::solve_auto(rc.oscillator, rc.t_end, rc.tol);
}

int run_classical(const Options& opt) {
    const auto rc = effective_config(opt);
    const auto out = open_output(opt, rc, "classical.csv");
    dho::csv::Writer w(*out.os);
    preamble(w, rc, "classical");
    w.header({"t", "re_z", "im_z", "re_zdot", "im_zdot", "E_m"});

    const dho::complexd z0(1.0, 0.0), zdot0(0.0, 0.0);
    const auto traj = dho::classical::integrate_eom(rc.oscillator, z0, zdot0,
                                                    rc.t_end, rc.tol, rc.samples);
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        // z = x2 + i x1.
        const std::array<double, 2> x{traj.z[i].imag(), traj.z[i].real()};
        const std::array<double, 2> xd{traj.zdot[i].imag(), traj.zdot[i].real()};
        const double em =
            dho::classical::mechanical_energy(rc.oscillator, x, xd, traj.t[i]);
        w.field(traj.t[i])
            .field(traj.z[i].real())
            .field(traj.z[i].imag())
            .field(traj.zdot[i].real())
            .field(traj.zdot[i].imag())
            .field(em);
        w.end_row();
    }
    return 0;
}

int run_ermakov(const Options& opt) {
    const auto rc = effective_config(opt);
    const auto out = open_output(opt, rc, "ermakov.csv");
    dho::csv::Writer w(*out.os);
    preamble(w, rc, "ermakov");
    w.header({"t", "rho", "rho_dot", "residual"});

    const auto es = solve_amplitude(rc);
    for (double t : dho::ode::uniform_times(0.0, rc.t_end, rc.samples)) {
        w.field(t).field(es.rho(t)).field(es.rho_dot(t)).field(es.residual(t));
        w.end_row();
    }
    return 0;
}

int run_spectrum(const Options& opt) {
    const auto rc = effective_config(opt);
    const auto out = open_output(opt, rc, "spectrum.csv");
    dho::csv::Writer w(*out.os);
    preamble(w, rc, "spectrum");
    w.header({"n_plus", "n_minus", "E_invariant", "l_z", "E_H", "theta"});

    const auto es = solve_amplitude(rc);
    const int total =
        std::max(4, rc.mode.n_plus + rc.mode.n_minus);
    const double t = rc.t_end;
    for (int np = 0; np <= total; ++np) {
        for (int nm = 0; nm + np <= total; ++nm) {
            const dho::ModeIndex mode{np, nm};
            w.field(np)
                .field(nm)
                .field(dho::spectra::invariant_eigenvalue(rc.oscillator, mode))
                .field(dho::spectra::angular_momentum_eigenvalue(mode))
                .field(dho::spectra::hamiltonian_expectation(rc.oscillator, es,
                                                             mode, t))
                .field(dho::spectra::lr_phase(rc.oscillator, es, mode, t));
            w.end_row();
        }
    }
    return 0;
}

int run_wavefunction(const Options& opt) {
    const auto rc = effective_config(opt);
    const auto out = open_output(opt, rc, "wavefunction.csv");
    dho::csv::Writer w(*out.os);
    preamble(w, rc, "wavefunction");
    w.header({"r", "alpha", "re_psi", "im_psi", "abs2_psi"});

    const auto es = solve_amplitude(rc);
    const double t = rc.t_end;
    const int quanta = rc.mode.n_plus + rc.mode.n_minus + 1;
    // Uniform polar grid sized so the Gaussian tail is negligible; suitable
    // for trapezoid post-processing.
    const double umax = 40.0 + 10.0 * double(quanta);
    const double rmax = es.rho(t) * std::sqrt(umax / rc.oscillator.nu);
    const int nr = 256, na = 128;
    for (int i = 0; i < nr; ++i) {
        const double r = rmax * double(i) / double(nr - 1);
        for (int j = 0; j < na; ++j) {
            const double alpha = kTwoPi * double(j) / double(na);
            const auto psi = dho::spectra::schrodinger_solution(
                rc.oscillator, es, rc.mode, r, alpha, t);
            w.field(r).field(alpha).field(psi.real()).field(psi.imag()).field(
                std::norm(psi));
            w.end_row();
        }
    }
    return 0;
}

int run_uncertainty(const Options& opt) {
    const auto rc = effective_config(opt);
    const auto out = open_output(opt, rc, "uncertainty.csv");
    dho::csv::Writer w(*out.os);
    preamble(w, rc, "uncertainty");
    w.header({"t", "n", "ell", "dx1", "dp1", "dpk1", "prod_x1p1", "prod_x1pk1",
              "bound_canonical", "bound_kinetic"});

    const auto es = solve_amplitude(rc);
    const int n = rc.mode.radial_n();
    const int ell = rc.mode.ell();
    for (double t : dho::ode::uniform_times(0.0, rc.t_end, rc.samples)) {
        const auto rep =
            dho::uncertainty::closed_form(rc.oscillator, es, n, ell, t);
        w.field(t)
            .field(n)
            .field(ell)
            .field(rep.dx1)
            .field(rep.dp1)
            .field(rep.dpk1)
            .field(rep.prod_x1p1)
            .field(rep.prod_x1pk1)
            .field(rep.bound_canonical)
            .field(rep.bound_kinetic);
        w.end_row();
    }
    return 0;
}

int run_coherent(const Options& opt, dho::coherent::Family family,
                 const char* name) {
    auto rc = effective_config(opt);
    rc.coherent_state.family = family;
    const auto out = open_output(opt, rc, std::string(name) + ".csv");
    dho::csv::Writer w(*out.os);
    preamble(w, rc, name);

    const auto es = solve_amplitude(rc);
    const auto& spec = rc.coherent_state;

    std::vector<double> u(201);
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = 40.0 * double(i) / double(u.size() - 1);

    const auto at_t = dho::coherent::evaluate(spec, rc.oscillator, es, u,
                                              rc.t_end);
    const auto at_0 = dho::coherent::evaluate(spec, rc.oscillator, es, u, 0.0);

    // Summary block: plane norm 2 pi (rho^2/2nu) Int |psi(u)|^2 du over a
    // de-weighted Gauss-Laguerre rule (|psi|^2 = e^{-u} u^l |poly|^2 times
    // the plane Jacobian, so the rule is exact), truncation certificate,
    // family diagnostics.
    const double rho = es.rho(rc.t_end);
    const auto rule = dho::specfn::gauss_laguerre_rule(320, 0.0);
    const auto at_nodes = dho::coherent::evaluate(spec, rc.oscillator, es,
                                                  rule.nodes, rc.t_end);
    double norm = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (rule.nodes[i] > 700.0) break;
        norm += rule.weights[i] * std::exp(rule.nodes[i]) *
                std::norm(at_nodes.series[i]);
    }
    norm *= kTwoPi * rho * rho / (2.0 * rc.oscillator.nu);

    double closed_err = 0.0, closed_scale = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        closed_err =
            std::max(closed_err, std::abs(at_0.series[i] - (*at_0.closed)[i]));
        closed_scale = std::max(closed_scale, std::abs((*at_0.closed)[i]));
    }

    const auto expansion = family == dho::coherent::Family::BarutGirardello
                               ? dho::coherent::bg_expand(spec)
                               : dho::coherent::perelomov_expand(spec);

    w.comment("summary norm=" + dho::csv::format_double(norm) +
              " norm_sq_series=" + dho::csv::format_double(expansion.norm_sq) +
              " tail_bound=" + dho::csv::format_double(expansion.tail_bound));
    w.comment("summary closed_vs_series_t0=" +
              dho::csv::format_double(closed_err / closed_scale));
    if (family == dho::coherent::Family::BarutGirardello) {
        w.comment("summary eigen_residual=" +
                  dho::csv::format_double(dho::coherent::bg_eigen_residual(
                      expansion)));
        std::string diag = "summary identity_diag";
        for (int k = 0; k <= 3; ++k)
            diag += " n" + std::to_string(k) + "=" +
                    dho::csv::format_double(
                        dho::coherent::bg_identity_element(spec.ell, k, k));
        w.comment(diag);
    } else if (spec.ell >= 1) {
        std::string diag = "summary identity_diag";
        for (int k = 0; k <= 3; ++k)
            diag += " n" + std::to_string(k) + "=" +
                    dho::csv::format_double(
                        dho::coherent::perelomov_identity_element(spec.ell, k, k));
        w.comment(diag);
    } else {
        w.comment("summary identity_diag=refused (measure degenerates at ell=0)");
    }

    w.header({"u", "re_psi", "im_psi", "abs2_psi"});
    for (std::size_t i = 0; i < u.size(); ++i) {
        w.field(u[i])
            .field(at_t.series[i].real())
            .field(at_t.series[i].imag())
            .field(std::norm(at_t.series[i]));
        w.end_row();
    }
    return 0;
}

int run_verify(const Options& opt) {
    const auto rc = effective_config(opt);
    const auto out = open_output(opt, rc, "verify.csv");
    dho::csv::Writer w(*out.os);
    preamble(w, rc, "verify");
    w.header({"check", "value", "tolerance", "status"});

    const auto checks = dho::verify::run_suite(rc);
    int failed = 0;
    for (const auto& c : checks) {
        w.field(c.name).field(c.value).field(c.tolerance).field(
            std::string(c.pass ? "pass" : "FAIL"));
        w.end_row();
        if (!c.pass) ++failed;
    }
    std::cout << "verify: " << checks.size() << " checks, " << failed
              << " failed\n";
    if (failed > 0) {
        std::cerr << "ERROR verify: " << failed << " of " << checks.size()
                  << " checks failed\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lewis-Riesenfeld invariant toolkit for the planar "
                 "time-dependent damped harmonic oscillator"};
    app.require_subcommand(1);

    Options opt;
    auto* classical = app.add_subcommand(
        "classical", "closed-form/numeric classical trajectories");
    auto* ermakov =
        app.add_subcommand("ermakov", "auxiliary amplitude rho(t) and residual");
    auto* spectrum = app.add_subcommand(
        "spectrum", "invariant/Hamiltonian spectra and evolution phases");
    auto* wavefunction = app.add_subcommand(
        "wavefunction", "polar-grid samples of the evolving eigenfunction");
    auto* uncertainty = app.add_subcommand(
        "uncertainty", "dispersion products against their floors");
    auto* coherent_bg = app.add_subcommand(
        "coherent-bg", "Barut-Girardello coherent-state profile");
    auto* coherent_p = app.add_subcommand(
        "coherent-perelomov", "Perelomov coherent-state profile");
    auto* verify =
        app.add_subcommand("verify", "run the full invariant check suite");
    for (auto* sub : {classical, ermakov, spectrum, wavefunction, uncertainty,
                      coherent_bg, coherent_p, verify})
        add_common(sub, opt);

    try {
        app.parse(argc, argv);
        if (classical->parsed()) return run_classical(opt);
        if (ermakov->parsed()) return run_ermakov(opt);
        if (spectrum->parsed()) return run_spectrum(opt);
        if (wavefunction->parsed()) return run_wavefunction(opt);
        if (uncertainty->parsed()) return run_uncertainty(opt);
        if (coherent_bg->parsed())
            return run_coherent(opt, dho::coherent::Family::BarutGirardello,
                                "coherent-bg");
        if (coherent_p->parsed())
            return run_coherent(opt, dho::coherent::Family::Perelomov,
                                "coherent-perelomov");
        if (verify->parsed()) return run_verify(opt);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const dho::Error& e) {
        std::cerr << e.prefixed() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ERROR cli: " << e.what() << "\n";
        return 1;
    }
}
