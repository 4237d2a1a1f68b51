#include "dho/coherent.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dho/errors.hpp"
#include "dho/specfn.hpp"
#include "dho/spectra.hpp"

namespace dho::coherent {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("coherent", msg); }

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxTruncation = 512;
constexpr double kTailFraction = 1e-14;

double lgam(double x) { return specfn::log_gamma(x); }

// sqrt(n! / Gamma(n+l+1))
double basis_norm(int n, int ell) {
    return std::exp(0.5 * (lgam(double(n) + 1.0) - lgam(double(n + ell) + 1.0)));
}

void check_spec(const StateSpec& spec) {
    if (spec.ell < 0) fail("coherent sector needs ell >= 0");
    if (spec.truncation < 0 || spec.truncation > kMaxTruncation)
        fail("truncation must lie in [0, 512] (0 = automatic)");
}

// Shared truncation driver: |c_n| = exp(logmag(n)), squared ratio r2(n) =
// |c_{n+1}|^2/|c_n|^2.  Extends until the certified geometric tail bound
// drops below kTailFraction of the accumulated norm.
template <typename LogMag, typename Ratio2>
Expansion expand_with(const StateSpec& spec, const LogMag& logmag,
                      const Ratio2& r2) {
    Expansion e;
    e.family = spec.family;
    e.parameter = spec.parameter;
    e.ell = spec.ell;

    const double ph = std::arg(spec.parameter);
    auto coeff_at = [&](int n) {
        return std::polar(std::exp(logmag(n)), ph * double(n));
    };

    const int fixed = spec.truncation;
    double acc = 0.0;
    int n = 0;
    for (;; ++n) {
        if (n > kMaxTruncation)
            fail("coherent expansion does not certify its tail within N = 512");
        e.c.push_back(coeff_at(n));
        acc += std::norm(e.c.back());
        if (fixed > 0) {
            if (n == fixed) break;
            continue;
        }
        if (n < 4) continue;
        const double rq = r2(n + 1);
        if (rq < 1.0) {
            const double head = std::norm(coeff_at(n + 1));
            if (head / (1.0 - rq) <= kTailFraction * acc) break;
        }
    }
    const double rq = r2(n + 1);
    if (!(rq < 1.0))
        fail("coherent expansion tail is not geometrically bounded at the cutoff");
    e.tail_bound = std::norm(coeff_at(n + 1)) / (1.0 - rq);
    if (fixed > 0 && e.tail_bound > 1e-10)
        fail("requested truncation leaves an uncertified tail");
    e.norm_sq = acc;
    return e;
}

} // namespace

Expansion bg_expand(const StateSpec& spec) {
    check_spec(spec);
    if (spec.family != Family::BarutGirardello)
        fail("bg_expand needs a Barut-Girardello StateSpec");
    const double az = std::abs(spec.parameter);
    const int ell = spec.ell;
    if (az == 0.0) {
        Expansion e;
        e.family = spec.family;
        e.parameter = spec.parameter;
        e.ell = ell;
        e.c = {complexd(1.0)};
        e.norm_sq = 1.0;
        e.tail_bound = 0.0;
        return e;
    }
    const double logc =
        0.5 * (double(ell) * std::log(az) -
               std::log(specfn::bessel_i(double(ell), 2.0 * az)));
    auto logmag = [=](int n) {
        return logc + double(n) * std::log(az) -
               0.5 * (lgam(double(n) + 1.0) + lgam(double(n + ell) + 1.0));
    };
    auto r2 = [=](int n) {
        return az * az / (double(n + 1) * double(n + ell + 1));
    };
    return expand_with(spec, logmag, r2);
}

Expansion perelomov_expand(const StateSpec& spec) {
    check_spec(spec);
    if (spec.family != Family::Perelomov)
        fail("perelomov_expand needs a Perelomov StateSpec");
    const double ae = std::abs(spec.parameter);
    const int ell = spec.ell;
    if (!(ae < 1.0)) fail("Perelomov parameter needs |eta| < 1");
    if (ae == 0.0) {
        Expansion e;
        e.family = spec.family;
        e.parameter = spec.parameter;
        e.ell = ell;
        e.c = {complexd(1.0)};
        e.norm_sq = 1.0;
        e.tail_bound = 0.0;
        return e;
    }
    const double logp = 0.5 * double(ell + 1) * std::log1p(-ae * ae);
    auto logmag = [=](int n) {
        return logp +
               0.5 * (lgam(double(n + ell) + 1.0) - lgam(double(n) + 1.0) -
                      lgam(double(ell) + 1.0)) +
               double(n) * std::log(ae);
    };
    auto r2 = [=](int n) {
        return ae * ae * double(n + ell + 1) / double(n + 1);
    };
    return expand_with(spec, logmag, r2);
}

double bg_eigen_residual(const Expansion& e) {
    if (e.family != Family::BarutGirardello)
        fail("eigen residual applies to Barut-Girardello expansions");
    const complexd z = e.parameter;
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n + 1 < e.c.size(); ++n) {
        const double step =
            std::sqrt(double(n + 1) * double(n + 1 + std::size_t(e.ell)));
        num = std::max(num, std::abs(step * e.c[n + 1] - z * e.c[n]));
        den = std::max(den, std::abs(z * e.c[n]));
    }
    return den == 0.0 ? num : num / den;
}

complexd bg_overlap(const StateSpec& a, const StateSpec& b) {
    check_spec(a);
    check_spec(b);
    if (a.ell != b.ell) fail("overlap needs matching ell sectors");
    const double aa = std::abs(a.parameter), ab = std::abs(b.parameter);
    const int ell = a.ell;
    const complexd w = std::conj(a.parameter) * b.parameter;
    const complexd ir = specfn::bessel_i_ratio(double(ell), w);
    double logpref = 0.0;
    // |z|^l / I_l(2|z|) -> Gamma(l+1) as z -> 0.
    auto half_log = [&](double az) {
        if (az == 0.0) return 0.5 * lgam(double(ell) + 1.0);
        return 0.5 * (double(ell) * std::log(az) -
                      std::log(specfn::bessel_i(double(ell), 2.0 * az)));
    };
    logpref += half_log(aa) + half_log(ab);
    return std::exp(logpref) * ir;
}

complexd perelomov_overlap(const StateSpec& a, const StateSpec& b) {
    check_spec(a);
    check_spec(b);
    if (a.ell != b.ell) fail("overlap needs matching ell sectors");
    const double aa = std::abs(a.parameter), ab = std::abs(b.parameter);
    if (!(aa < 1.0) || !(ab < 1.0)) fail("Perelomov parameters need |eta| < 1");
    const double p = 0.5 * double(a.ell + 1);
    const double pref =
        std::exp(p * (std::log1p(-aa * aa) + std::log1p(-ab * ab)));
    const complexd core =
        std::pow(complexd(1.0) - std::conj(a.parameter) * b.parameter,
                 -double(a.ell + 1));
    return pref * core;
}

double bg_identity_element(int ell, int n, int m) {
    if (ell < 0) fail("identity check needs ell >= 0");
    if (n < 0 || m < 0) fail("identity check needs n, m >= 0");
    if (n > 20 || m > 20) fail("identity check supports n, m <= 20");
    if (n != m) return 0.0; // angular integral of e^{i(n-m) arg z} vanishes

    // Diagonal: 4 / (n! Gamma(n+l+1)) * int_0^inf r^{2n+l+1} K_l(2r) dr.
    const double p = double(2 * n + ell) + 1.0;
    const double logscale = lgam(double(n) + 1.0) + lgam(double(n + ell) + 1.0);
    auto g = [&](double r) {
        if (r <= 0.0) return 0.0;
        const double k = specfn::bessel_k(double(ell), 2.0 * r);
        if (k <= 0.0) return 0.0;
        return std::exp(p * std::log(r) + std::log(k) - logscale);
    };
    // March the upper limit until the integrand is negligible relative to
    // its peak near r = p/2.
    const double rpeak = 0.5 * p;
    const double gpeak = g(std::max(rpeak, 0.5));
    double upper = rpeak + 10.0;
    while (upper < 400.0 && g(upper) > 1e-19 * gpeak) upper *= 1.35;
    const double integral = specfn::integrate(g, 0.0, upper, 1e-12 * gpeak);
    return 4.0 * integral;
}

double perelomov_identity_element(int ell, int n, int m) {
    if (ell == 0)
        fail("Perelomov identity measure (l/pi)(1-|eta|^2)^{-2} d^2eta "
             "degenerates at ell = 0; the check is defined for ell >= 1");
    if (ell < 0) fail("identity check needs ell >= 0");
    if (n < 0 || m < 0) fail("identity check needs n, m >= 0");
    if (n != m) return 0.0; // angular integral vanishes

    // Diagonal: l Gamma(n+l+1)/(n! Gamma(l+1)) * Beta(n+1, l).
    const double factor = double(ell) *
                          std::exp(lgam(double(n + ell) + 1.0) -
                                   lgam(double(n) + 1.0) - lgam(double(ell) + 1.0));
    auto g = [&](double s) {
        return std::pow(1.0 - s, double(ell) - 1.0) * std::pow(s, double(n));
    };
    const double integral = specfn::integrate(g, 0.0, 1.0, 1e-13);
    return factor * integral;
}

std::vector<complexd> evolve_coefficients(const Expansion& e,
                                          const OscillatorConfig& cfg,
                                          const ErmakovSolution& es, double t) {
    std::vector<complexd> out(e.c.size());
    for (std::size_t n = 0; n < e.c.size(); ++n) {
        const double theta = spectra::lr_phase(
            cfg, es, ModeIndex::from_radial(int(n), e.ell), t);
        out[n] = e.c[n] * std::polar(1.0, theta);
    }
    return out;
}

namespace {

// Pointwise truncation for function evaluation: |L_n^l(u)| <= binom(n+l, n)
// e^{u/2}, and e^{u/2} cancels the profile's e^{-u/2}, so the dropped series
// tail is bounded u-independently by sum_{n>N} |c_n| sqrt(Gamma(n+l+1)/n!) /
// Gamma(l+1).  The norm-certified cutoff alone does not control this at
// large u, where L_n grows.
int function_cutoff(const StateSpec& spec) {
    const int ell = spec.ell;
    const double a = std::abs(spec.parameter);
    if (a == 0.0) return 0;
    auto log_bt = [&](int n) {
        if (spec.family == Family::BarutGirardello)
            return double(n) * std::log(a) - lgam(double(n) + 1.0);
        return lgam(double(n + ell) + 1.0) - lgam(double(n) + 1.0) -
               lgam(double(ell) + 1.0) + double(n) * std::log(a);
    };
    auto ratio = [&](int n) {
        if (spec.family == Family::BarutGirardello) return a / double(n + 1);
        return a * double(n + ell + 1) / double(n + 1);
    };
    double acc = 0.0;
    for (int n = 0;; ++n) {
        if (n > kMaxTruncation)
            fail("coherent evaluation does not certify its pointwise tail "
                 "within N = 512");
        acc += std::exp(log_bt(n));
        const double r = ratio(n + 1);
        if (n >= 4 && r < 1.0 &&
            std::exp(log_bt(n + 1)) / (1.0 - r) <= 1e-14 * acc)
            return n;
    }
}

} // namespace

Samples evaluate(const StateSpec& spec, const OscillatorConfig& cfg,
                 const ErmakovSolution& es, const std::vector<double>& u_nodes,
                 double t, double alpha, bool require_closed_form) {
    check_spec(spec);
    cfg.validate();
    if (require_closed_form && t != 0.0)
        fail("closed-form evaluation is defined only at t = 0; the per-mode "
             "evolution phases deform the series elsewhere");

    const bool is_bg = spec.family == Family::BarutGirardello;
    Expansion e = is_bg ? bg_expand(spec) : perelomov_expand(spec);
    const int cutoff = function_cutoff(spec);
    if (cutoff > int(e.c.size()) - 1) {
        StateSpec wide = spec;
        wide.truncation = cutoff;
        e = is_bg ? bg_expand(wide) : perelomov_expand(wide);
    }
    const auto ct = evolve_coefficients(e, cfg, es, t);

    const double rho = es.rho(t), f = cfg.f(t), rd = es.rho_dot(t);
    const complexd vp(1.0, -cfg.m * rho * rd / (f * cfg.nu));
    const complexd npref = std::sqrt(cfg.nu / kPi) / rho *
                           std::polar(1.0, double(spec.ell) * alpha);

    Samples out;
    out.u = u_nodes;
    out.series.resize(u_nodes.size());
    for (std::size_t j = 0; j < u_nodes.size(); ++j) {
        const double u = u_nodes[j];
        if (!(u >= 0.0)) fail("u nodes must be >= 0");
        const complexd common =
            npref * std::pow(std::sqrt(u), spec.ell) * std::exp(-0.5 * vp * u);
        complexd acc(0.0);
        for (std::size_t n = 0; n < ct.size(); ++n)
            acc += ct[n] * basis_norm(int(n), spec.ell) *
                   specfn::laguerre(int(n), double(spec.ell), u);
        out.series[j] = common * acc;
    }

    if (t == 0.0) {
        std::vector<complexd> closed(u_nodes.size());
        if (spec.family == Family::BarutGirardello) {
            const double az = std::abs(spec.parameter);
            const double logc =
                az > 0.0 ? 0.5 * (double(spec.ell) * std::log(az) -
                                  std::log(specfn::bessel_i(double(spec.ell),
                                                            2.0 * az)))
                         : -0.5 * lgam(double(spec.ell) + 1.0);
            const complexd pre = std::exp(logc) * std::exp(spec.parameter);
            for (std::size_t j = 0; j < u_nodes.size(); ++j) {
                const double u = u_nodes[j];
                const complexd common = npref * std::pow(std::sqrt(u), spec.ell) *
                                        std::exp(-0.5 * vp * u);
                closed[j] = common * pre *
                            specfn::bessel_j_ratio(double(spec.ell),
                                                   u * spec.parameter);
            }
        } else {
            const double ae = std::abs(spec.parameter);
            const double logp = 0.5 * double(spec.ell + 1) * std::log1p(-ae * ae) -
                                0.5 * lgam(double(spec.ell) + 1.0);
            const complexd one(1.0);
            const complexd gen_pref =
                std::pow(one - spec.parameter, -double(spec.ell + 1));
            for (std::size_t j = 0; j < u_nodes.size(); ++j) {
                const double u = u_nodes[j];
                const complexd common = npref * std::pow(std::sqrt(u), spec.ell) *
                                        std::exp(-0.5 * vp * u);
                closed[j] = common * std::exp(logp) * gen_pref *
                            std::exp(u * spec.parameter /
                                     (spec.parameter - one));
            }
        }
        out.closed = std::move(closed);
    }
    return out;
}

std::function<complexd(complexd)> analytic_transform(Family family, int ell,
                                                     std::vector<complexd> c) {
    if (ell < 0) fail("transform needs ell >= 0");
    if (family == Family::BarutGirardello) {
        return [ell, c = std::move(c)](complexd w) {
            complexd acc(0.0);
            complexd wn(1.0);
            for (std::size_t m = 0; m < c.size(); ++m) {
                acc += c[m] * wn *
                       std::exp(-0.5 * (lgam(double(m) + 1.0) +
                                        lgam(double(m + std::size_t(ell)) + 1.0)));
                wn *= w;
            }
            return acc;
        };
    }
    return [ell, c = std::move(c)](complexd w) {
        if (!(std::abs(w) < 1.0))
            fail("Perelomov transform is defined on the open unit disk");
        complexd acc(0.0);
        complexd wn(1.0);
        for (std::size_t n = 0; n < c.size(); ++n) {
            acc += c[n] * wn *
                   std::exp(0.5 * (lgam(double(n + std::size_t(ell)) + 1.0) -
                                   lgam(double(n) + 1.0) -
                                   lgam(double(ell) + 1.0)));
            wn *= w;
        }
        return acc;
    };
}

} // namespace dho::coherent
