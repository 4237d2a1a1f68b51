#pragma once

#include <optional>
#include <string>

#include "dho/coherent.hpp"
#include "dho/profiles.hpp"
#include "dho/spectra.hpp"

namespace dho {

// Parsed run configuration (JSON document; see README for the schema).
struct RunConfig {
    OscillatorConfig oscillator;

    double t_end = 5.0;
    std::size_t samples = 512;
    double tol = 1e-10;

    ModeIndex mode;

    coherent::StateSpec coherent_state;

    // Optional explicit Ermakov initial conditions; defaults are the
    // equilibrium values sqrt(nu/(m omega(0))), 0.
    std::optional<std::pair<double, double>> ermakov_ic;

    std::string output; // empty: subcommand default

    // Canonical reproducible dump of every effective value (defaults filled);
    // hashed into CSV headers.
    std::string canonical_text;
};

// Parse + validate; throws dho::Error("cli", ...) with the offending key
// path on schema or range violations.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

} // namespace dho
