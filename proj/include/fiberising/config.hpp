// config.hpp — run configuration: flat key=value or JSON, same keys either way

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiberising/cavity_model.hpp"
#include "fiberising/spin_dynamics.hpp"

namespace fiberising {

// "a:b:n" — n points from a to b inclusive.
struct AxisRange {
    double lo = 1.0;
    double hi = 30.0;
    int n = 200;

    std::vector<double> expand() const;
    static AxisRange parse(const std::string& text);
};

struct RunConfig {
    double g = 1.0;

    // Physical-parameter mode (cavity model). Presence of any of these keys
    // marks the mode; unset fields fall back to the SystemParams defaults.
    std::optional<double> delta, gamma0;
    std::optional<double> eps1, eps2, eps3;
    double phi12 = SystemParams::kQuarterPi;
    double phi21 = SystemParams::kQuarterPi;
    double phi23 = SystemParams::kQuarterPi;
    double phi32 = SystemParams::kQuarterPi;
    double nu = 0.0, l12 = 0.0, l23 = 0.0;
    bool literal_dissipation = false;

    // Direct-J mode. Presence of any j key marks the mode; the two modes are
    // mutually exclusive for a dynamics run.
    std::optional<double> j12, j23, j31;

    // Local drives, used by both modes.
    double gamma_local1 = 0.0, gamma_local2 = 0.0, gamma_local3 = 0.0;

    // Run controls.
    double t_max = 50.0;
    double dt = 0.01;
    std::string out;
    AxisRange delta_range{};
    AxisRange gamma_range{};
    double pole_guard = tol::kPoleGuard;
    double detuning_threshold = tol::kDetuningMin;
    double adiabatic_threshold = tol::kAdiabaticMin;

    bool direct_mode() const { return j12 || j23 || j31; }
    bool physical_keys_present() const { return delta || gamma0 || eps1 || eps2 || eps3; }

    // Throws std::invalid_argument when both modes are marked.
    void check_single_mode() const;

    SystemParams system_params() const;
    HamiltonianSpec hamiltonian_spec() const;  // direct-J mode only
};

// Applies one key=value pair; throws std::invalid_argument on unknown keys or
// unparsable values.
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Auto-detects JSON (first non-space byte '{') vs flat key=value with '#'
// comments. Throws std::invalid_argument on any parse problem.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace fiberising
