#include "dho/profiles.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "dho/errors.hpp"

namespace dho {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("profiles", msg); }

std::string fmt_t(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", t);
    return buf;
}

} // namespace

namespace detail {

void MonotoneCubic::build(double start, double step, std::vector<double> values) {
    if (values.size() < 4) fail("tabulated profile needs at least 4 samples");
    if (!(step > 0.0)) fail("tabulated profile needs positive sample spacing");
    t0 = start;
    dt = step;
    y = std::move(values);
    const std::size_t n = y.size();
    std::vector<double> s(n - 1); // secants
    for (std::size_t i = 0; i + 1 < n; ++i) s[i] = (y[i + 1] - y[i]) / dt;
    slope.assign(n, 0.0);
    slope[0] = s[0];
    slope[n - 1] = s[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) slope[i] = 0.5 * (s[i - 1] + s[i]);
    // Fritsch-Carlson limiter: clamp tangents so each cubic piece is monotone.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s[i] == 0.0) {
            slope[i] = slope[i + 1] = 0.0;
            continue;
        }
        const double a = slope[i] / s[i];
        const double b = slope[i + 1] / s[i];
        if (a < 0.0) slope[i] = 0.0;
        if (b < 0.0) slope[i + 1] = 0.0;
        const double r = a * a + b * b;
        if (r > 9.0) {
            const double tau = 3.0 / std::sqrt(r);
            slope[i] = tau * a * s[i];
            slope[i + 1] = tau * b * s[i];
        }
    }
}

double MonotoneCubic::value(double t) const {
    const std::size_t n = y.size();
    double s = (t - t0) / dt;
    std::size_t i = s <= 0.0 ? 0 : static_cast<std::size_t>(s);
    if (i > n - 2) i = n - 2;
    const double u = s - double(i); // in [0,1] inside the domain
    const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const double h10 = u * (1.0 - u) * (1.0 - u);
    const double h01 = u * u * (3.0 - 2.0 * u);
    const double h11 = u * u * (u - 1.0);
    return h00 * y[i] + h10 * dt * slope[i] + h01 * y[i + 1] + h11 * dt * slope[i + 1];
}

double MonotoneCubic::derivative(double t) const {
    const std::size_t n = y.size();
    double s = (t - t0) / dt;
    std::size_t i = s <= 0.0 ? 0 : static_cast<std::size_t>(s);
    if (i > n - 2) i = n - 2;
    const double u = s - double(i);
    const double g00 = 6.0 * u * (u - 1.0);
    const double g10 = (3.0 * u - 1.0) * (u - 1.0);
    const double g01 = -g00;
    const double g11 = u * (3.0 * u - 2.0);
    return (g00 * y[i] + g01 * y[i + 1]) / dt + g10 * slope[i] + g11 * slope[i + 1];
}

} // namespace detail

FrictionProfile FrictionProfile::unit() {
    FrictionProfile p;
    p.kind_ = Kind::Unit;
    return p;
}

FrictionProfile FrictionProfile::exponential_decay(double gamma) {
    if (!(gamma > 0.0)) fail("exponential friction needs gamma > 0, got " + fmt_t(gamma));
    FrictionProfile p;
    p.kind_ = Kind::ExponentialDecay;
    p.gamma_ = gamma;
    return p;
}

FrictionProfile FrictionProfile::tabulated(double dt, std::vector<double> f_samples) {
    for (double v : f_samples)
        if (!(v > 0.0)) fail("tabulated friction must keep f > 0, got " + fmt_t(v));
    if (f_samples.empty() || std::abs(f_samples.front() - 1.0) > 1e-9)
        fail("tabulated friction must start at f(0) = 1");
    FrictionProfile p;
    p.kind_ = Kind::Tabulated;
    // Interpolate ln f: positivity is automatic and eta = -(ln f)' comes from
    // the same interpolant's derivative.
    std::vector<double> logf(f_samples.size());
    for (std::size_t i = 0; i < f_samples.size(); ++i) logf[i] = std::log(f_samples[i]);
    p.table_.build(0.0, dt, std::move(logf));
    return p;
}

void FrictionProfile::check_domain(double t) const {
    if (!(t >= 0.0)) fail("friction profile queried at t = " + fmt_t(t) + " < 0");
    if (kind_ == Kind::Tabulated && t > table_.t_end() * (1.0 + 1e-12))
        fail("friction profile queried at t = " + fmt_t(t) + " beyond tabulated end " +
             fmt_t(table_.t_end()));
}

double FrictionProfile::value(double t) const {
    check_domain(t);
    switch (kind_) {
        case Kind::Unit: return 1.0;
        case Kind::ExponentialDecay: return std::exp(-gamma_ * t);
        case Kind::Tabulated: return std::exp(table_.value(t));
    }
    fail("unreachable friction kind");
}

double FrictionProfile::coefficient(double t) const {
    check_domain(t);
    switch (kind_) {
        case Kind::Unit: return 0.0;
        case Kind::ExponentialDecay: return gamma_;
        case Kind::Tabulated: return -table_.derivative(t);
    }
    fail("unreachable friction kind");
}

FrequencyProfile FrequencyProfile::constant(double omega0) {
    if (!(omega0 > 0.0)) fail("constant frequency needs omega0 > 0, got " + fmt_t(omega0));
    FrequencyProfile p;
    p.kind_ = Kind::Constant;
    p.omega0_ = omega0;
    return p;
}

FrequencyProfile FrequencyProfile::exp_half(double omega0, double gamma) {
    if (!(omega0 > 0.0)) fail("exp-half frequency needs omega0 > 0, got " + fmt_t(omega0));
    if (!(gamma > 0.0)) fail("exp-half frequency needs gamma > 0, got " + fmt_t(gamma));
    FrequencyProfile p;
    p.kind_ = Kind::ExpHalf;
    p.omega0_ = omega0;
    p.gamma_ = gamma;
    return p;
}

FrequencyProfile FrequencyProfile::exp_full(double omega0, double gamma) {
    if (!(omega0 > 0.0)) fail("exp frequency needs omega0 > 0, got " + fmt_t(omega0));
    if (!(gamma > 0.0)) fail("exp frequency needs gamma > 0, got " + fmt_t(gamma));
    FrequencyProfile p;
    p.kind_ = Kind::Exp;
    p.omega0_ = omega0;
    p.gamma_ = gamma;
    return p;
}

FrequencyProfile FrequencyProfile::tabulated(double dt, std::vector<double> omega_samples) {
    for (double v : omega_samples)
        if (!(v >= 0.0)) fail("tabulated frequency must keep omega >= 0, got " + fmt_t(v));
    FrequencyProfile p;
    p.kind_ = Kind::Tabulated;
    p.table_.build(0.0, dt, std::move(omega_samples));
    return p;
}

void FrequencyProfile::check_domain(double t) const {
    if (!(t >= 0.0)) fail("frequency profile queried at t = " + fmt_t(t) + " < 0");
    if (kind_ == Kind::Tabulated && t > table_.t_end() * (1.0 + 1e-12))
        fail("frequency profile queried at t = " + fmt_t(t) + " beyond tabulated end " +
             fmt_t(table_.t_end()));
}

double FrequencyProfile::value(double t) const {
    check_domain(t);
    switch (kind_) {
        case Kind::Constant: return omega0_;
        case Kind::ExpHalf: return omega0_ * std::exp(-0.5 * gamma_ * t);
        case Kind::Exp: return omega0_ * std::exp(-gamma_ * t);
        case Kind::Tabulated: return table_.value(t);
    }
    fail("unreachable frequency kind");
}

void OscillatorConfig::validate() const {
    if (!(m > 0.0)) fail("mass must be > 0, got " + fmt_t(m));
    if (!(nu > 0.0)) fail("invariant scale nu must be > 0, got " + fmt_t(nu));
}

bool OscillatorConfig::is_static() const {
    return friction.kind() == FrictionProfile::Kind::Unit &&
           frequency.kind() == FrequencyProfile::Kind::Constant;
}

bool OscillatorConfig::is_caldirola_kanai() const {
    return friction.kind() == FrictionProfile::Kind::ExponentialDecay &&
           frequency.kind() == FrequencyProfile::Kind::Constant;
}

double friction_value(const FrictionProfile& p, double t) { return p.value(t); }
double friction_coefficient(const FrictionProfile& p, double t) { return p.coefficient(t); }
double frequency_value(const FrequencyProfile& p, double t) { return p.value(t); }

} // namespace dho
