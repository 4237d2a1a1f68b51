#include "dho/specfn.hpp"
#include "dho/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dho::specfn {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

[[noreturn]] void fail(const std::string& msg) { throw Error("specfn", msg); }

} // namespace

double laguerre(int n, double l, double u) {
    if (n < 0) fail("laguerre: n must be >= 0");
    if (l < 0.0) fail("laguerre: weight exponent must be >= 0");
    if (u < 0.0) fail("laguerre: argument must be >= 0");
    if (n == 0) return 1.0;
    // (k+1) L_{k+1} = (2k+l+1-u) L_k - (k+l) L_{k-1}
    double prev = 1.0;
    double cur = 1.0 + l - u;
    for (int k = 1; k < n; ++k) {
        double next = ((2.0 * k + l + 1.0 - u) * cur - (k + l) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite(int n, double x) {
    if (n < 0) fail("hermite: n must be >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double log_gamma(double x) {
    if (!(x > 0.0)) fail("log_gamma: argument must be > 0");
    // Lanczos, g = 7, 9 terms.
    static const double c[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    }
    double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
    double t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(a);
}

namespace {

// J_nu by the defining alternating series; fine while cancellation
// (max term ~ e^x / sqrt(2 pi x)) stays well under 1/eps.
double bessel_j_series(double nu, double x) {
    double h = 0.5 * x;
    double term = std::exp(nu * std::log(h) - log_gamma(nu + 1.0));
    double sum = term;
    double h2 = h * h;
    for (int k = 0; k < 2000; ++k) {
        term *= -h2 / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300) && k > h) return sum;
    }
    fail("bessel_j: series did not converge");
}

// Hankel asymptotic amplitude/phase pieces, truncated at the smallest term.
void hankel_pq(double nu, double x, double& p, double& q) {
    double mu = 4.0 * nu * nu;
    double t = 1.0; // a_0
    p = 1.0;
    q = 0.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 60; ++k) {
        double odd = 2.0 * k - 1.0;
        t *= (mu - odd * odd) / (k * 8.0 * x);
        if (std::abs(t) > prev) break; // divergent tail reached
        prev = std::abs(t);
        int phase = (k / 2) % 2 ? -1 : 1;
        if (k % 2 == 1)
            q += phase * t;
        else
            p += phase * t;
        if (std::abs(t) < 1e-17) break;
    }
}

double bessel_j_asymptotic(double nu, double x) {
    double p, q;
    hankel_pq(nu, x, p, q);
    double chi = x - (0.5 * nu + 0.25) * M_PI;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_y_asymptotic(double nu, double x) {
    double p, q;
    hankel_pq(nu, x, p, q);
    double chi = x - (0.5 * nu + 0.25) * M_PI;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

} // namespace

double bessel_j(double nu, double x) {
    if (nu < 0.0) fail("bessel_j: order must be >= 0");
    if (x < 0.0) fail("bessel_j: argument must be >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= 13.0 + 0.5 * nu) return bessel_j_series(nu, x);
    return bessel_j_asymptotic(nu, x);
}

double bessel_y(int n, double x) {
    if (n != 0 && n != 1) fail("bessel_y: only orders 0 and 1 supported");
    if (!(x > 0.0)) fail("bessel_y: argument must be > 0");
    if (x > 13.0) return bessel_y_asymptotic(n, x);
    double lg = std::log(0.5 * x) + kEulerGamma;
    double q = 0.25 * x * x;
    if (n == 0) {
        // (2/pi)[(ln(x/2)+g) J0 + sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2]
        double term = 1.0, hk = 0.0, sum = 0.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (k * k);
            hk += 1.0 / k;
            double add = (k % 2 ? 1.0 : -1.0) * hk * term;
            sum += add;
            if (std::abs(add) < 1e-18 * (std::abs(sum) + 1.0)) break;
        }
        return (2.0 / M_PI) * (lg * bessel_j(0, x) + sum);
    }
    // n = 1:
    // (2/pi)(ln(x/2)+g) J1 - 2/(pi x) - (x/(2 pi)) sum (H_k+H_{k+1}) (-q)^k/(k!(k+1)!)
    double term = 1.0, hk = 0.0, hk1 = 1.0, sum = hk + hk1;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (k * (k + 1.0));
        hk += 1.0 / k;
        hk1 += 1.0 / (k + 1.0);
        double add = (hk + hk1) * term;
        sum += add;
        if (std::abs(add) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return (2.0 / M_PI) * lg * bessel_j(1, x) - 2.0 / (M_PI * x) -
           x / (2.0 * M_PI) * sum;
}

double bessel_i(double nu, double x) {
    if (nu < 0.0) fail("bessel_i: order must be >= 0");
    if (x < 0.0) fail("bessel_i: argument must be >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    double h = 0.5 * x;
    double lt0 = nu * std::log(h) - log_gamma(nu + 1.0);
    if (x > 707.0 || lt0 > 707.0)
        fail("bessel_i: overflow for order " + std::to_string(nu) + ", argument " +
             std::to_string(x));
    double term = std::exp(lt0);
    double sum = term;
    double h2 = h * h;
    for (int k = 0; k < 4000; ++k) {
        term *= h2 / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (!std::isfinite(sum)) fail("bessel_i: overflow during summation");
        if (term < 1e-17 * sum) return sum;
    }
    fail("bessel_i: series did not converge");
}

double bessel_k(double nu, double x) {
    if (nu < 0.0) fail("bessel_k: order must be >= 0");
    if (!(x > 0.0)) fail("bessel_k: argument must be > 0 (logarithmic singularity)");
    // Integrand g(t) = exp(-x cosh t) cosh(nu t), written in log form to keep
    // the nu t growth from overflowing before the cosh decay wins.
    auto g = [&](double t) {
        double lead = -x * std::cosh(t) + nu * t;
        if (lead < -745.0) return 0.0;
        return std::exp(lead) * 0.5 * (1.0 + std::exp(-2.0 * nu * t));
    };
    // Truncation point: integrand negligible relative to g(0) >= e^{-x}.
    double t_end = 1.0;
    while ((-x * std::cosh(t_end) + nu * t_end) > (-x - 46.0) && t_end < 80.0)
        t_end += 0.5;
    // Trapezoid in t; the integrand is even, so odd-derivative boundary terms
    // vanish at 0 and convergence under h-halving is super-algebraic.
    double h = 0.5;
    auto sweep = [&](double step) {
        double s = 0.5 * g(0.0);
        for (double t = step; t <= t_end; t += step) s += g(t);
        return s * step;
    };
    double prev = sweep(h);
    for (int it = 0; it < 10; ++it) {
        h *= 0.5;
        double cur = sweep(h);
        if (std::abs(cur - prev) <= 1e-13 * std::abs(cur)) return cur;
        prev = cur;
    }
    fail("bessel_k: quadrature did not converge (order " + std::to_string(nu) +
         ", argument " + std::to_string(x) + ")");
}

namespace {

complexd ratio_series(double l, complexd w, bool alternating) {
    if (l < 0.0) fail("bessel ratio series: order must be >= 0");
    complexd term = std::exp(-log_gamma(l + 1.0));
    complexd sum = term;
    complexd f = alternating ? -w : w;
    for (int k = 0; k < 800; ++k) {
        term *= f / ((k + 1.0) * (l + k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) return sum;
    }
    fail("bessel ratio series did not converge");
}

} // namespace

complexd bessel_i_ratio(double l, complexd w) { return ratio_series(l, w, false); }
complexd bessel_j_ratio(double l, complexd w) { return ratio_series(l, w, true); }

double QuadratureRule::apply(const std::function<double(double)>& g) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * g(nodes[i]);
    return s;
}

QuadratureRule gauss_laguerre_rule(int order, double l) {
    if (order < 1) fail("gauss_laguerre_rule: order must be >= 1");
    if (l < 0.0) fail("gauss_laguerre_rule: weight exponent must be >= 0");
    int n = order;
    // Jacobi matrix of the monic L_n^l recurrence.
    std::vector<double> d(n), e(n, 0.0), w(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = 2.0 * i + l + 1.0;
    for (int i = 1; i < n; ++i) e[i - 1] = std::sqrt(i * (i + l));
    w[0] = 1.0;
    // Implicit-shift QL on the symmetric tridiagonal, tracking only the first
    // row of the accumulated eigenvector matrix (that is all weights need).
    auto pythag = [](double a, double b) { return std::hypot(a, b); };
    for (int low = 0; low < n; ++low) {
        for (int iter = 0;; ++iter) {
            int m = low;
            for (; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m == low) break;
            if (iter >= 50)
                fail("gauss_laguerre_rule: eigen solver failed to converge (order=" +
                     std::to_string(order) + ", l=" + std::to_string(l) + ")");
            double g = (d[low + 1] - d[low]) / (2.0 * e[low]);
            double r = pythag(g, 1.0);
            g = d[m] - d[low] + e[low] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= low; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = pythag(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                double wi = w[i], wi1 = w[i + 1];
                w[i + 1] = s * wi + c * wi1;
                w[i] = c * wi - s * wi1;
            }
            if (underflow) continue;
            d[low] -= p;
            e[low] = g;
            e[m] = 0.0;
        }
    }
    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::GaussLaguerre;
    rule.weight_exponent = l;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    double mu0 = std::exp(log_gamma(l + 1.0)); // total weight Gamma(l+1)
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = mu0 * w[idx[i]] * w[idx[i]];
        // Far-tail weights underflow to 0 at high order; those nodes carry
        // no measure, so only reject a vanishing weight where it matters.
        const bool underflow_ok = rule.weights[i] == 0.0 && rule.nodes[i] > 600.0;
        if (!((rule.weights[i] > 0.0 || underflow_ok) && rule.nodes[i] >= 0.0))
            fail("gauss_laguerre_rule: invalid node/weight (order=" +
                 std::to_string(order) + ", l=" + std::to_string(l) + ")");
    }
    return rule;
}

QuadratureRule trapezoid_rule(const std::vector<double>& grid) {
    if (grid.size() < 2) fail("trapezoid_rule: need at least two grid points");
    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::Trapezoid;
    rule.nodes = grid;
    rule.weights.assign(grid.size(), 0.0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double h = grid[i + 1] - grid[i];
        if (!(h > 0.0)) fail("trapezoid_rule: grid must be strictly increasing");
        rule.weights[i] += 0.5 * h;
        rule.weights[i + 1] += 0.5 * h;
    }
    return rule;
}

namespace {

// QUADPACK 7-15 Gauss-Kronrod pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

void gk15(const std::function<double(double)>& f, double a, double b,
          double& result, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resg = 0.0, resk = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fv;
        if (i == 7) {
            fv = f(c);
        } else {
            fv = f(c - h * kXgk[i]) + f(c + h * kXgk[i]);
        }
        resk += kWgk[i] * fv;
        if (i % 2 == 1) resg += kWg[i / 2] * fv; // odd Kronrod indices = Gauss nodes
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

void gk_adaptive(const std::function<double(double)>& f, double a, double b,
                 double tol, int depth, double& acc, long& budget) {
    double r, e;
    gk15(f, a, b, r, e);
    budget -= 15;
    if (budget < 0) fail("integrate: adaptive quadrature did not converge");
    if (e <= tol || depth >= 48) {
        acc += r;
        return;
    }
    double c = 0.5 * (a + b);
    gk_adaptive(f, a, c, 0.5 * tol, depth + 1, acc, budget);
    gk_adaptive(f, c, b, 0.5 * tol, depth + 1, acc, budget);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(tol > 0.0)) fail("integrate: tolerance must be > 0");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    double acc = 0.0;
    long budget = 4000000;
    gk_adaptive(f, a, b, tol, 0, acc, budget);
    return sign * acc;
}

} // namespace dho::specfn
