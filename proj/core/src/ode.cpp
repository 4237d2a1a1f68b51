#include "dho/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "dho/errors.hpp"

namespace dho::ode {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5.0},
    {3.0 / 40.0, 9.0 / 40.0},
    {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
    {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
    {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0,
     -5103.0 / 18656.0},
    {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0,
     11.0 / 84.0},
};
// b (order 5) equals the last A row (FSAL); bhat is order 4.
constexpr double kBhat[7] = {5179.0 / 57600.0,    0.0,
                             7571.0 / 16695.0,    393.0 / 640.0,
                             -92097.0 / 339200.0, 187.0 / 2100.0,
                             1.0 / 40.0};
// Order-4 dense-output weights.
constexpr double kD[7] = {-12715105075.0 / 11282082432.0,
                          0.0,
                          87487479700.0 / 32700410799.0,
                          -10690763975.0 / 1880347072.0,
                          701980252875.0 / 199316789632.0,
                          -1453857185.0 / 822651844.0,
                          69997945.0 / 29380423.0};

struct Interpolant {
    // u(theta) = r1 + th (r2 + (1-th)(r3 + th (r4 + (1-th) r5)))
    std::vector<double> r1, r2, r3, r4, r5;

    void build(const std::vector<double>& y0, const std::vector<double>& y1,
               const std::vector<double> k[7], double h) {
        const std::size_t dim = y0.size();
        r1 = y0;
        r2.resize(dim);
        r3.resize(dim);
        r4.resize(dim);
        r5.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const double ydiff = y1[i] - y0[i];
            const double bspl = h * k[0][i] - ydiff;
            r2[i] = ydiff;
            r3[i] = bspl;
            r4[i] = ydiff - h * k[6][i] - bspl;
            double acc = 0.0;
            for (int s = 0; s < 7; ++s) acc += kD[s] * k[s][i];
            r5[i] = h * acc;
        }
    }

    void eval(double theta, std::vector<double>& out) const {
        const double th = theta, th1 = 1.0 - theta;
        out.resize(r1.size());
        for (std::size_t i = 0; i < r1.size(); ++i)
            out[i] = r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
    }
};

} // namespace

std::vector<double> uniform_times(double t0, double t1, std::size_t n) {
    if (n < 2) throw Error("ode", "uniform grid needs at least 2 points");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = t0 + (t1 - t0) * double(i) / double(n - 1);
    out.back() = t1;
    return out;
}

Samples solve(const Rhs& rhs, std::vector<double> y0, double t0, double t1,
              double tol, const std::vector<double>& sample_times,
              const char* module, const Monitor& monitor) {
    if (!(tol > 0.0)) throw Error(module, "integration tolerance must be > 0");
    if (!(t1 > t0)) throw Error(module, "integration span must be forward");
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        const bool ordered = i == 0 || sample_times[i] >= sample_times[i - 1];
        if (!ordered || sample_times[i] < t0 - 1e-12 ||
            sample_times[i] > t1 + 1e-12)
            throw Error(module, "sample times must be ascending within the span");
    }

    const std::size_t dim = y0.size();
    Samples out;
    out.t.reserve(sample_times.size());
    out.y.reserve(sample_times.size());

    std::size_t next_sample = 0;
    auto emit_exact = [&](double t, const std::vector<double>& y) {
        while (next_sample < sample_times.size() &&
               sample_times[next_sample] <= t + 1e-14 * std::max(1.0, std::abs(t))) {
            out.t.push_back(sample_times[next_sample]);
            out.y.push_back(y);
            ++next_sample;
        }
    };

    std::vector<double> k[7];
    for (auto& v : k) v.resize(dim);
    std::vector<double> y = std::move(y0), y1(dim), ywork(dim), err(dim);

    rhs(t0, y.data(), k[0].data());
    emit_exact(t0, y);

    // Initial step from the classic |y| / |f| scale heuristic.
    double h;
    {
        double ny = 0.0, nf = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double sc = tol + tol * std::abs(y[i]);
            ny += (y[i] / sc) * (y[i] / sc);
            nf += (k[0][i] / sc) * (k[0][i] / sc);
        }
        h = (ny > 0.0 && nf > 0.0) ? 0.01 * std::sqrt(ny / nf) : 1e-6;
        h = std::min(h, (t1 - t0) / 10.0);
    }

    double t = t0;
    const double t_edge = t1 - 1e-14 * std::max(1.0, std::abs(t1));
    Interpolant dense;
    while (t < t_edge) {
        if (h < 1e-14 * std::max(1.0, std::abs(t))) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "step-size underflow at t = %.12g", t);
            throw Error(module, buf);
        }
        if (t + h > t1) h = t1 - t;

        for (int s = 1; s < 7; ++s) {
            for (std::size_t i = 0; i < dim; ++i) {
                double acc = 0.0;
                for (int j = 0; j < s; ++j) acc += kA[s][j] * k[j][i];
                ywork[i] = y[i] + h * acc;
            }
            rhs(t + kC[s] * h, ywork.data(), k[s].data());
        }
        y1 = ywork; // stage 7 state is the order-5 solution (FSAL)

        double errnorm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            // (b - bhat) contracted over stages; b is the last A row.
            double eacc = (kA[6][0] - kBhat[0]) * k[0][i];
            for (int s = 1; s < 6; ++s) eacc += (kA[6][s] - kBhat[s]) * k[s][i];
            eacc -= kBhat[6] * k[6][i];
            err[i] = h * eacc;
            const double sc = tol + tol * std::max(std::abs(y[i]), std::abs(y1[i]));
            errnorm += (err[i] / sc) * (err[i] / sc);
        }
        errnorm = std::sqrt(errnorm / double(dim));
        if (!std::isfinite(errnorm)) {
            ++out.rejected;
            h *= 0.2;
            continue;
        }

        if (errnorm <= 1.0) {
            ++out.accepted;
            dense.build(y, y1, k, h);
            while (next_sample < sample_times.size() &&
                   sample_times[next_sample] <= t + h + 1e-14 * std::max(1.0, std::abs(t + h))) {
                const double theta = (sample_times[next_sample] - t) / h;
                dense.eval(std::min(std::max(theta, 0.0), 1.0), ywork);
                out.t.push_back(sample_times[next_sample]);
                out.y.push_back(ywork);
                ++next_sample;
            }
            t += h;
            y = y1;
            k[0] = k[6]; // FSAL
            if (monitor) monitor(t, y.data());
        } else {
            ++out.rejected;
        }
        const double factor =
            errnorm > 0.0 ? 0.9 * std::pow(errnorm, -0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, factor));
    }
    // Rounding-leftover samples at the right edge take the final state.
    while (next_sample < sample_times.size()) {
        out.t.push_back(sample_times[next_sample]);
        out.y.push_back(y);
        ++next_sample;
    }
    return out;
}

} // namespace dho::ode
