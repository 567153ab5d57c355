#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "shellrr/extfield.hpp"
#include "shellrr/integrator.hpp"
#include "shellrr/particle.hpp"

namespace shellrr {

struct OutputOptions {
    bool trajectory = true;
    bool diagnostics = true;
    bool summary = true;
    bool comparison = false;              ///< exact-vs-LAD comparison CSV
    std::size_t comparison_samples = 50;  ///< evenly spaced over the tail window
    double comparison_window = 0.5;       ///< fraction of the run, counted from the end

    friend bool operator==(const OutputOptions&, const OutputOptions&) = default;
};

/// Everything a run depends on. No randomness: the same scenario always
/// produces the same artifacts.
struct Scenario {
    std::string name = "scenario";
    ShellParticle particle;
    ParticleState initial;
    ExternalFieldModel field = ZeroField{};
    RampSchedule ramp;
    IntegratorConfig integrator;
    OutputOptions outputs;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ConfigInvalid naming the violated invariant: initial state valid at
/// 1e-10, step <= sigma/kappa, ramp not before the initial time, field model
/// and ramp well formed.
void validate_scenario(const Scenario& scenario);

/// Parses the JSON scenario document. Unknown keys anywhere are rejected.
/// Throws ConfigInvalid (including on any failure of validate_scenario).
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical JSON form; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

RunResult integrate(const Scenario& scenario);

/// `key = value` lines: the scenario echo, then the run results.
void write_run_summary(const Scenario& scenario, const RunSummary& summary, std::ostream& out);

}  // namespace shellrr
