#pragma once

#include <vector>

namespace dho {

namespace detail {

// Monotone (Fritsch-Carlson) cubic interpolant on a uniform grid.
// Overshoot-free, C1; smooth enough for the second derivatives taken
// of tabulated profiles downstream.
struct MonotoneCubic {
    double t0 = 0.0, dt = 0.0;
    std::vector<double> y;
    std::vector<double> slope;

    void build(double start, double step, std::vector<double> values);
    double value(double t) const;
    double derivative(double t) const;
    double t_end() const { return t0 + dt * (double(y.size()) - 1.0); }
};

} // namespace detail

// Friction declared through f(t) = exp(-int_0^t eta); eta(t) = -d/dt ln f(t).
class FrictionProfile {
public:
    enum class Kind { Unit, ExponentialDecay, Tabulated };

    static FrictionProfile unit();
    static FrictionProfile exponential_decay(double gamma);
    // Samples of f itself on a uniform grid starting at t=0; f[0] must be 1.
    static FrictionProfile tabulated(double dt, std::vector<double> f_samples);

    Kind kind() const { return kind_; }
    double gamma() const { return gamma_; }

    double value(double t) const;       // f(t) > 0
    double coefficient(double t) const; // eta(t)

private:
    FrictionProfile() = default;
    void check_domain(double t) const;

    Kind kind_ = Kind::Unit;
    double gamma_ = 0.0;
    detail::MonotoneCubic table_;
};

class FrequencyProfile {
public:
    enum class Kind { Constant, ExpHalf, Exp, Tabulated };

    static FrequencyProfile constant(double omega0);
    static FrequencyProfile exp_half(double omega0, double gamma); // w0 e^{-g t/2}
    static FrequencyProfile exp_full(double omega0, double gamma); // w0 e^{-g t}
    static FrequencyProfile tabulated(double dt, std::vector<double> omega_samples);

    Kind kind() const { return kind_; }
    double omega0() const { return omega0_; }
    double gamma() const { return gamma_; }

    double value(double t) const; // omega(t) >= 0

private:
    FrequencyProfile() = default;
    void check_domain(double t) const;

    Kind kind_ = Kind::Constant;
    double omega0_ = 1.0;
    double gamma_ = 0.0;
    detail::MonotoneCubic table_;
};

// hbar = 1 throughout.
struct OscillatorConfig {
    double m = 1.0;  // mass
    double nu = 1.0; // invariant scale
    FrictionProfile friction = FrictionProfile::unit();
    FrequencyProfile frequency = FrequencyProfile::constant(1.0);

    void validate() const; // throws on m <= 0 or nu <= 0

    double f(double t) const { return friction.value(t); }
    double eta(double t) const { return friction.coefficient(t); }
    double omega(double t) const { return frequency.value(t); }

    bool is_static() const;          // f = 1, omega constant
    bool is_caldirola_kanai() const; // f = e^{-g t}, omega constant
};

// Free-function forms of the profile queries.
double friction_value(const FrictionProfile& p, double t);
double friction_coefficient(const FrictionProfile& p, double t);
double frequency_value(const FrequencyProfile& p, double t);

} // namespace dho
