#pragma once

#include <string>
#include <vector>

#include "dho/config.hpp"

namespace dho::verify {

struct Check {
    std::string name;
    double value = 0.0;     // measured quantity (residual, deviation, ...)
    double tolerance = 0.0; // pass iff value <= tolerance (or exact flags)
    bool pass = false;
};

// Full invariant suite: classical closed forms vs integrator, Ermakov
// residuals, matrix invariance + sentinel, spectra, orthonormality,
// Schrodinger residual, phases, uncertainty, su(1,1), coherent states,
// special-function identities.  `cfg` supplies the base configuration for
// the config-dependent checks; the damped comparisons always use the
// canonical Caldirola-Kanai setup.
std::vector<Check> run_suite(const RunConfig& cfg);

bool all_pass(const std::vector<Check>& checks);

} // namespace dho::verify
