#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shellrr/extfield.hpp"
#include "shellrr/history.hpp"
#include "shellrr/particle.hpp"
#include "shellrr/selffield.hpp"

namespace shellrr {

struct IntegratorConfig {
    double step = 0.01;  ///< proper-time step h
    double kappa = 2.0;  ///< safety factor, h <= sigma / kappa
    double s_end = 1.0;
    bool renormalize_u = false;
    double drift_tolerance = 1e-8;
    int quad_order = SphereQuadrature::kDefaultOrder;

    friend bool operator==(const IntegratorConfig&, const IntegratorConfig&) = default;
};

/// Throws ConfigInvalid naming the first violated constraint.
void validate_config(const IntegratorConfig& config, const ShellParticle& particle, double s0);

struct StepDiagnostics {
    double s = 0.0;
    double u_norm_residual = 0.0;
    double s_ret = 0.0;
    double delay_residual = 0.0;
    double self_force_norm = 0.0;
    double ext_force_norm = 0.0;
};

struct RhsResult {
    FourVector drds;
    FourVector duds;
    CoVector self_force;
    CoVector ext_force;
    DelaySolution delay;
};

/// Right-hand side of the shell equation of motion (c = 1):
///   dr/ds = u,  m0 du_mu/ds = q (ramp(s) Fbar_ext + Fbar_self)_{mu k} u^k.
/// The self field reads only `past`; the present position and velocity come
/// from `state`, which may be an RK stage that is not stored anywhere.
RhsResult rhs(const ParticleState& state, const Worldline& past, const ShellParticle& particle,
              const ExternalFieldModel& field, const RampSchedule& schedule, const SphereQuadrature& quadrature,
              std::optional<double> warm_start = std::nullopt);

enum class RunStatus { Completed, DriftExceeded, StepTooLarge, NumericalFailure };

std::string to_string(RunStatus status);

struct RunSummary {
    RunStatus status = RunStatus::Completed;
    std::string message;
    std::size_t steps = 0;
    ParticleState final_state;
    double final_u_norm_residual = 0.0;
    double max_u_norm_residual = 0.0;
    double min_s_ret = 0.0;
    double max_s_ret = 0.0;
    double max_delay_residual = 0.0;
    double max_self_force_norm = 0.0;
    double max_ext_force_norm = 0.0;
    double max_acceleration_norm = 0.0;
    double max_gamma = 0.0;
    std::size_t renormalizations = 0;
    bool hard_ramp = false;
    double wall_seconds = 0.0;
};

struct RunResult {
    TrajectoryHistory history;
    std::vector<StepDiagnostics> diagnostics;
    RunSummary summary;
};

/// Method-of-steps integration with classic fixed-step RK4 in proper time.
///
/// The history starts as the inertial prehistory through (s0, r0, u0). Since
/// h <= sigma/kappa is below every worldline delay, each stage's retarded
/// lookup lands in already accepted history, so the scheme is explicit.
/// After a step, a = du/ds is evaluated at the new state (reused as the next
/// k1) and stored with the sample.
///
/// Errors during the run do not throw: the run stops and the summary carries
/// the status (StepTooLarge for a retarded lookup past the history,
/// DriftExceeded when |u.u - 1| > drift_tolerance) with everything accepted
/// so far. Configuration errors throw ConfigInvalid before any step.
RunResult integrate(const ShellParticle& particle, const ParticleState& initial, const ExternalFieldModel& field,
                    const RampSchedule& schedule, const IntegratorConfig& config);

/// Diagnostics CSV: `s,u_norm_residual,s_ret,delay_residual,self_force_norm,ext_force_norm`.
void write_diagnostics_csv(const std::vector<StepDiagnostics>& diagnostics, std::ostream& out);

}  // namespace shellrr
