#include "shellrr/integrator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "shellrr/csv.hpp"
#include "shellrr/errors.hpp"

namespace shellrr {

void validate_config(const IntegratorConfig& config, const ShellParticle& particle, double s0) {
    std::ostringstream os;
    if (!std::isfinite(config.step) || config.step <= 0.0) {
        os << "integrator.step must be positive";
    } else if (!std::isfinite(config.kappa) || config.kappa < 2.0) {
        os << "integrator.kappa must be at least 2";
    } else if (config.step > particle.sigma() / config.kappa) {
        os << "step bound violated: integrator.step = " << config.step << " exceeds sigma/kappa = "
           << particle.sigma() / config.kappa;
    } else if (!std::isfinite(config.s_end) || config.s_end <= s0) {
        os << "integrator.s_end must exceed the initial proper time";
    } else if (!std::isfinite(config.drift_tolerance) || config.drift_tolerance <= 0.0) {
        os << "integrator.drift_tolerance must be positive";
    } else if (config.quad_order < 2) {
        os << "integrator.quad_order must be at least 2";
    }
    if (!os.str().empty()) throw Error(ErrorCode::ConfigInvalid, os.str());
}

RhsResult rhs(const ParticleState& state, const Worldline& past, const ShellParticle& particle,
              const ExternalFieldModel& field, const RampSchedule& schedule, const SphereQuadrature& quadrature,
              std::optional<double> warm_start) {
    RhsResult out;
    const SelfFieldEvaluation self = self_faraday(past, state, particle, warm_start);
    out.delay = self.delay;
    out.self_force = self_force(state, self, particle);

    const double envelope = ramp(schedule, state.s);
    if (envelope != 0.0) {
        const FaradayTensor ext = surface_average_faraday(field, state, particle.sigma(), quadrature) * envelope;
        out.ext_force = ext.contract(state.u) * particle.charge();
    }
    out.drds = state.u;
    out.duds = raise(out.ext_force + out.self_force) / particle.rest_mass();
    return out;
}

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::Completed: return "completed";
        case RunStatus::DriftExceeded: return "drift_exceeded";
        case RunStatus::StepTooLarge: return "step_too_large";
        case RunStatus::NumericalFailure: return "numerical_failure";
    }
    return "unknown";
}

namespace {

struct Stage {
    FourVector dr;
    FourVector du;
};

}  // namespace

RunResult integrate(const ShellParticle& particle, const ParticleState& initial, const ExternalFieldModel& field,
                    const RampSchedule& schedule, const IntegratorConfig& config) {
    validate_config(config, particle, initial.s);
    validate_field_model(field);
    validate_ramp(schedule);
    if (const StateReport report = validate_state(initial, config.drift_tolerance); !report.valid) {
        throw Error(ErrorCode::ConfigInvalid, "initial state: " + report.reason);
    }

    const auto clock_start = std::chrono::steady_clock::now();
    RunResult result{TrajectoryHistory(initial.s, initial.r, initial.u), {}, {}};
    RunSummary& summary = result.summary;
    summary.hard_ramp = has_hard_edge(schedule);
    summary.final_state = initial;
    summary.max_gamma = initial.u[0];
    summary.final_u_norm_residual = std::abs(dot(initial.u, initial.u) - 1.0);
    summary.max_u_norm_residual = summary.final_u_norm_residual;
    summary.min_s_ret = std::numeric_limits<double>::infinity();

    const SphereQuadrature quadrature(config.quad_order);
    const double s0 = initial.s;
    const double h_nominal = config.step;
    const double span = config.s_end - s0;
    auto n_steps = static_cast<std::size_t>(std::ceil(span / h_nominal - 1e-9));
    n_steps = std::max<std::size_t>(n_steps, 1);
    result.diagnostics.reserve(n_steps);

    ParticleState state = initial;
    FourVector accel{};  // a(s0) = 0: the field is off at s0 and the prehistory is inertial
    double warm = particle.sigma();

    auto evaluate = [&](const ParticleState& st) {
        RhsResult r = rhs(st, result.history, particle, field, schedule, quadrature, warm);
        warm = r.delay.s_ret;
        return r;
    };

    try {
        for (std::size_t n = 0; n < n_steps; ++n) {
            const double s_next = (n + 1 == n_steps) ? config.s_end : s0 + static_cast<double>(n + 1) * h_nominal;
            const double h = s_next - state.s;
            const double half = 0.5 * h;

            const Stage k1{state.u, accel};
            const RhsResult r2 = evaluate({state.s + half, state.r + k1.dr * half, state.u + k1.du * half});
            const Stage k2{r2.drds, r2.duds};
            const RhsResult r3 = evaluate({state.s + half, state.r + k2.dr * half, state.u + k2.du * half});
            const Stage k3{r3.drds, r3.duds};
            const RhsResult r4 = evaluate({s_next, state.r + k3.dr * h, state.u + k3.du * h});
            const Stage k4{r4.drds, r4.duds};

            ParticleState next;
            next.s = s_next;
            next.r = state.r + (k1.dr + k2.dr * 2.0 + k3.dr * 2.0 + k4.dr) / 6.0 * h;
            next.u = state.u + (k1.du + k2.du * 2.0 + k3.du * 2.0 + k4.du) / 6.0 * h;
            if (config.renormalize_u) {
                const double norm2 = dot(next.u, next.u);
                if (norm2 != 1.0) {
                    next.u = next.u / std::sqrt(norm2);
                    ++summary.renormalizations;
                }
            }

            const double residual = std::abs(dot(next.u, next.u) - 1.0);
            if (!(residual <= config.drift_tolerance)) {
                std::ostringstream os;
                os.precision(17);
                os << "|u.u - 1| = " << residual << " at s = " << s_next << " exceeds drift tolerance "
                   << config.drift_tolerance;
                summary.status = RunStatus::DriftExceeded;
                summary.message = os.str();
                summary.max_u_norm_residual = std::max(summary.max_u_norm_residual, residual);
                break;
            }

            const RhsResult at_next = evaluate(next);
            result.history.append(HistorySample{next.s, next.r, next.u, at_next.duds});

            StepDiagnostics d;
            d.s = next.s;
            d.u_norm_residual = residual;
            d.s_ret = at_next.delay.s_ret;
            d.delay_residual = at_next.delay.residual;
            d.self_force_norm = minkowski_norm(at_next.self_force);
            d.ext_force_norm = minkowski_norm(at_next.ext_force);
            result.diagnostics.push_back(d);

            summary.steps = n + 1;
            summary.final_state = next;
            summary.final_u_norm_residual = residual;
            summary.max_u_norm_residual = std::max(summary.max_u_norm_residual, residual);
            summary.min_s_ret = std::min(summary.min_s_ret, d.s_ret);
            summary.max_s_ret = std::max(summary.max_s_ret, d.s_ret);
            summary.max_delay_residual = std::max(summary.max_delay_residual, d.delay_residual);
            summary.max_self_force_norm = std::max(summary.max_self_force_norm, d.self_force_norm);
            summary.max_ext_force_norm = std::max(summary.max_ext_force_norm, d.ext_force_norm);
            summary.max_acceleration_norm = std::max(summary.max_acceleration_norm, minkowski_norm(at_next.duds));
            summary.max_gamma = std::max(summary.max_gamma, next.u[0]);

            state = next;
            accel = at_next.duds;
        }
    } catch (const Error& e) {
        summary.message = e.what();
        summary.status = (e.code() == ErrorCode::QueryBeyondHistory) ? RunStatus::StepTooLarge
                                                                      : RunStatus::NumericalFailure;
    }
    if (result.diagnostics.empty()) summary.min_s_ret = 0.0;

    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
    return result;
}

void write_diagnostics_csv(const std::vector<StepDiagnostics>& diagnostics, std::ostream& out) {
    out << "s,u_norm_residual,s_ret,delay_residual,self_force_norm,ext_force_norm\n";
    for (const auto& d : diagnostics) {
        CsvRow(out) << d.s << d.u_norm_residual << d.s_ret << d.delay_residual << d.self_force_norm
                    << d.ext_force_norm;
    }
}

}  // namespace shellrr
