#pragma once

#include <functional>
#include <vector>

namespace dho::ode {

// Right-hand side y' = f(t, y); writes dydt[0..dim).
using Rhs = std::function<void(double t, const double* y, double* dydt)>;
// Optional monitor invoked on every accepted step end state; may throw to
// abort the integration (used for singularity guards).
using Monitor = std::function<void(double t, const double* y)>;

struct Samples {
    std::vector<double> t;
    std::vector<std::vector<double>> y; // y[i] is the state at t[i]
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

// Dormand-Prince 5(4) with mixed abs/rel error control at `tol` and the
// order-4 dense interpolant for off-step sampling.  `sample_times` must be
// ascending and contained in [t0, t1].  Throws dho::Error tagged with
// `module` on step-size underflow.
Samples solve(const Rhs& rhs, std::vector<double> y0, double t0, double t1,
              double tol, const std::vector<double>& sample_times,
              const char* module, const Monitor& monitor = {});

// Uniform grid helper: n points from t0 to t1 inclusive (n >= 2).
std::vector<double> uniform_times(double t0, double t1, std::size_t n);

} // namespace dho::ode
