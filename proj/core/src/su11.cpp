#include "dho/su11.hpp"

#include <cmath>
#include <string>

#include "dho/errors.hpp"
#include "dho/fourier.hpp"
#include "dho/specfn.hpp"

namespace dho::su11 {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("su11", msg); }

void check_sector(int ell) {
    if (ell < 0) fail("ladder sector needs ell >= 0");
}

double kminus_coef(int ell, int n) { return std::sqrt(double(n) * double(n + ell)); }
double kplus_coef(int ell, int n) {
    return std::sqrt(double(n + 1) * double(n + ell + 1));
}

} // namespace

RadialState k_minus(const RadialState& s) {
    check_sector(s.ell);
    RadialState out;
    out.ell = s.ell;
    for (const auto& [n, c] : s.coeff)
        if (n >= 1) out.coeff[n - 1] += kminus_coef(s.ell, n) * c;
    return out;
}

RadialState k_plus(const RadialState& s) {
    check_sector(s.ell);
    RadialState out;
    out.ell = s.ell;
    for (const auto& [n, c] : s.coeff)
        out.coeff[n + 1] += kplus_coef(s.ell, n) * c;
    return out;
}

RadialState k_zero(const RadialState& s) {
    check_sector(s.ell);
    RadialState out;
    out.ell = s.ell;
    for (const auto& [n, c] : s.coeff)
        out.coeff[n] += 0.5 * double(2 * n + s.ell + 1) * c;
    return out;
}

double commutator_residual(int ell, int n) {
    check_sector(ell);
    if (n < 0) fail("level index must be >= 0");
    RadialState e;
    e.ell = ell;
    e.coeff[n] = 1.0;

    auto diff = [](const RadialState& a, const RadialState& b) {
        double d = 0.0;
        for (const auto& [n2, c] : a.coeff) {
            const auto it = b.coeff.find(n2);
            const complexd other = it == b.coeff.end() ? complexd(0.0) : it->second;
            d = std::max(d, std::abs(c - other));
        }
        for (const auto& [n2, c] : b.coeff)
            if (a.coeff.find(n2) == a.coeff.end()) d = std::max(d, std::abs(c));
        return d;
    };
    auto scale = [](RadialState s, complexd factor) {
        for (auto& [n2, c] : s.coeff) c *= factor;
        return s;
    };
    auto add = [](RadialState a, const RadialState& b) {
        for (const auto& [n2, c] : b.coeff) a.coeff[n2] += c;
        return a;
    };

    // [K-, K+] = 2 K0
    const RadialState lhs1 =
        add(k_minus(k_plus(e)), scale(k_plus(k_minus(e)), -1.0));
    const RadialState rhs1 = scale(k_zero(e), 2.0);
    // [K0, K+] = K+
    const RadialState lhs2 =
        add(k_zero(k_plus(e)), scale(k_plus(k_zero(e)), -1.0));
    const RadialState rhs2 = k_plus(e);
    // [K0, K-] = -K-
    const RadialState lhs3 =
        add(k_zero(k_minus(e)), scale(k_minus(k_zero(e)), -1.0));
    const RadialState rhs3 = scale(k_minus(e), -1.0);

    double r = std::max({diff(lhs1, rhs1), diff(lhs2, rhs2), diff(lhs3, rhs3)});

    // Casimir on the same state.
    const RadialState kk =
        add(k_plus(k_minus(e)), k_minus(k_plus(e)));
    const RadialState cas = add(k_zero(k_zero(e)), scale(kk, -0.5));
    RadialState expect;
    expect.ell = ell;
    expect.coeff[n] = casimir_eigenvalue(ell);
    r = std::max(r, diff(cas, expect));
    return r;
}

long long algebra_defect(int ell, int n) {
    check_sector(ell);
    if (n < 0) fail("level index must be >= 0");
    const long long L = ell, N = n;
    const long long up = (N + 1) * (N + L + 1); // K- K+ coefficient product
    const long long down = N * (N + L);         // K+ K- coefficient product
    const long long twok0 = 2 * N + L + 1;      // 2 K0 eigenvalue

    long long defect = std::llabs(up - down - twok0); // [K-,K+] = 2K0
    // [K0, K+-] = +-K+-: doubled K0 eigenvalues shift by exactly +-2.
    defect = std::max(defect, std::llabs((2 * (N + 1) + L + 1) - twok0 - 2));
    if (n > 0)
        defect = std::max(defect, std::llabs((2 * (N - 1) + L + 1) - twok0 + 2));
    // 4 Casimir: (2K0)^2 - 2(K+K- + K-K+) = (l+1)(l-1).
    defect = std::max(defect,
                      std::llabs(twok0 * twok0 - 2 * (up + down) - (L * L - 1)));
    return defect;
}

double bargmann_index(int ell) {
    check_sector(ell);
    return 0.5 * double(ell + 1);
}

double casimir_eigenvalue(int ell) {
    check_sector(ell);
    return 0.25 * double(ell + 1) * double(ell - 1);
}

complexd varpi(const OscillatorConfig& cfg, const ErmakovSolution& es, double t) {
    cfg.validate();
    const double rho = es.rho(t), rd = es.rho_dot(t), f = cfg.f(t);
    return complexd(1.0, -cfg.m * rho * rd / (f * cfg.nu));
}

std::vector<double> u_nodes(const VGrid& grid) {
    if (grid.count < 8 || !(grid.v_max > 0.0)) fail("invalid v-grid");
    std::vector<double> u(grid.count);
    const double dv = grid.v_max / double(grid.count);
    for (int j = 0; j < grid.count; ++j) {
        const double v = dv * j;
        u[j] = v * v;
    }
    return u;
}

std::vector<complexd> radial_profile(int ell, int n, complexd varpi,
                                     const VGrid& grid) {
    check_sector(ell);
    if (n < 0) fail("level index must be >= 0");
    const double logn = 0.5 * (specfn::log_gamma(double(n) + 1.0) -
                               specfn::log_gamma(double(n + ell) + 1.0));
    const double dv = grid.v_max / double(grid.count);
    std::vector<complexd> out(grid.count);
    for (int j = 0; j < grid.count; ++j) {
        const double v = dv * j;
        const double u = v * v;
        out[j] = std::exp(logn) * std::pow(v, ell) *
                 std::exp(-0.5 * varpi * u) * specfn::laguerre(n, double(ell), u);
    }
    return out;
}

std::vector<complexd> k_differential_apply(int ell, int n, char which,
                                           complexd varpi, const VGrid& grid,
                                           const std::vector<complexd>& samples) {
    check_sector(ell);
    if (n < 0) fail("level index must be >= 0");
    if (which != '+' && which != '-') fail("ladder selector must be '+' or '-'");
    if (int(samples.size()) != grid.count) fail("sample count mismatch");

    // Even/odd continuation through v = 0: u^{l/2} = v^l continues as a
    // polynomial, so the parity is (-1)^l; the decayed outer edge closes the
    // periodic extension.
    const int m = grid.count;
    const double parity = (ell % 2 == 0) ? 1.0 : -1.0;
    std::vector<complexd> ext(2 * m, complexd(0.0));
    for (int j = 0; j < m; ++j) ext[j] = samples[j];
    for (int j = 1; j < m; ++j) ext[2 * m - j] = parity * samples[j];

    const auto dext = fourier::derivative_periodic(ext, 2.0 * grid.v_max);

    const double dv = grid.v_max / double(m);
    std::vector<complexd> out(m);
    for (int j = 0; j < m; ++j) {
        const double v = dv * j;
        const double u = v * v;
        const complexd ududu = 0.5 * v * dext[j]; // u d/du = (v/2) d/dv
        if (which == '-') {
            out[j] = -ududu + (0.5 * ell + double(n)) * samples[j] -
                     0.5 * varpi * u * samples[j];
        } else {
            const complexd vt = 2.0 - varpi;
            out[j] = ududu + (0.5 * ell + double(n) + 1.0) * samples[j] -
                     0.5 * vt * u * samples[j];
        }
    }
    return out;
}

double differential_ladder_residual(int ell, int n, char which, complexd varpi,
                                    const VGrid& grid, double u_cut) {
    const auto chi = radial_profile(ell, n, varpi, grid);
    const auto applied = k_differential_apply(ell, n, which, varpi, grid, chi);

    double coef;
    std::vector<complexd> target;
    if (which == '-') {
        coef = kminus_coef(ell, n);
        target = n == 0 ? std::vector<complexd>(grid.count, complexd(0.0))
                        : radial_profile(ell, n - 1, varpi, grid);
    } else {
        coef = kplus_coef(ell, n);
        target = radial_profile(ell, n + 1, varpi, grid);
    }

    const auto u = u_nodes(grid);
    double num = 0.0, scale = 0.0;
    for (int j = 0; j < grid.count; ++j) {
        if (u[j] > u_cut) continue;
        num = std::max(num, std::abs(applied[j] - coef * target[j]));
        scale = std::max({scale, std::abs(coef * target[j]), std::abs(chi[j])});
    }
    if (scale == 0.0) fail("empty comparison window");
    return num / scale;
}

} // namespace dho::su11
