// Run configuration: a JSON document with sections chain, layout, state,
// observation, time, pattern, physics and output.
//
// Physical quantities are either bare numbers in SI units or strings
// "<value> <unit>", e.g. "1 eV", "1000 angstrom", "1 e*angstrom", "0 deg".
// Lengths in the observation and pattern sections may use "a" (lattice
// constants). The dipole angle also accepts the keyword "magic".

#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "exciton/chain_spectrum.hpp"
#include "exciton/segments.hpp"
#include "exciton/vec3.hpp"

namespace exciton {

enum class OutputFormat { csv, json };

const char* to_string(OutputFormat f);

struct StateEntry {
    std::string occupation;  // one '0'/'1' per segment
    std::complex<double> amplitude;
};

struct RunConfig {
    ChainSpec chain = ChainSpec::reference();
    std::string occupancy = "1011";
    std::vector<StateEntry> state;          // normalised; empty means symmetric superposition
    std::vector<Vec3> observation_points;   // [m]
    int time_points = 2000;
    double time_span_lifetimes = 5.0;       // in units of 1 / Gamma_A
    int pattern_mode = 1;
    double pattern_radius = 0;              // [m]
    int pattern_angles = 181;
    double far_field_ratio = 10.0;
    double linewidth_scale = 1.0;
    std::string output_dir = "out";
    OutputFormat format = OutputFormat::csv;

    /// Non-fatal messages produced while loading (not serialised).
    std::vector<std::string> notices;

    InitialState initial_state() const;
};

/// Defaults: reference chain, layout "1011", symmetric state, observation at
/// (0, 0, 100 a), 2000 samples over 5 lifetimes, pattern radius 1000 a.
RunConfig default_config();

/// Throws ConfigError with the offending key path.
RunConfig parse_config(const std::string& text);

/// Throws IoError if the file cannot be read, ConfigError otherwise.
RunConfig load_config(const std::filesystem::path& path);

/// Canonical form: every key present, SI numbers, angles in radians.
nlohmann::ordered_json to_json(const RunConfig& config);

std::string serialize_config(const RunConfig& config);

}  // namespace exciton
