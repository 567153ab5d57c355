#include "shellrr/selffield.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

#include "shellrr/errors.hpp"

namespace shellrr {

SelfFieldEvaluation self_faraday(const Worldline& past, const ParticleState& present, const ShellParticle& particle,
                                 std::optional<double> warm_start) {
    const double sigma = particle.sigma();
    const double q = particle.charge();

    SelfFieldEvaluation out;
    out.delay = proper_delay(past, present.r, present.s, sigma, warm_start);
    out.retarded = past.at(out.delay.s_emit);

    const FourVector chord = present.r - out.retarded.r;
    const double d = dot(chord, out.retarded.u);
    out.denominator = d;
    if (!(std::abs(d) >= 1e-10 * sigma)) {
        std::ostringstream os;
        os << "|R.u(s')| = " << std::abs(d) << " at s = " << present.s;
        throw Error(ErrorCode::DegenerateDenominator, os.str());
    }

    if (const auto v = past.inertial_velocity_on(out.delay.s_emit); v && *v == present.u) {
        out.inertial_shortcut = true;
        return out;
    }

    const CoVector chord_l = lower(chord);
    const CoVector u_l = lower(out.retarded.u);
    const CoVector a_l = lower(out.retarded.a);
    const double chord_dot_a = dot(chord, out.retarded.a);

    const FaradayTensor bracket = FaradayTensor::wedge(a_l, chord_l) * (1.0 / d) -
                                  FaradayTensor::wedge(u_l, chord_l) * ((chord_dot_a - 1.0) / (d * d));
    out.field = bracket * (-2.0 * q / std::abs(d));
    return out;
}

SelfFieldEvaluation self_faraday(const Worldline& worldline, double s, const ShellParticle& particle) {
    const Kinematics k = worldline.at(s);
    return self_faraday(worldline, ParticleState{s, k.r, k.u}, particle);
}

CoVector self_force(const ParticleState& state, const SelfFieldEvaluation& eval, const ShellParticle& particle) {
    CoVector f = eval.field.contract(state.u) * particle.charge();
    assert(std::abs(contract(f, state.u)) <= 1e-10 * (1.0 + f.euclidean_norm() * state.u.euclidean_norm()));
    return f;
}

SelfPotential self_potential(const Worldline& worldline, const FourVector& field_point,
                             const ShellParticle& particle) {
    SelfPotential out;
    out.geometry = classify_field_point(worldline, field_point, particle.sigma());
    out.delay = fieldpoint_retarded_root(worldline, field_point, out.geometry.s1, out.geometry.rho2,
                                         particle.sigma());
    const Kinematics k = worldline.at(out.delay.s_emit);
    const double d = dot(field_point - k.r, k.u);
    if (!(std::abs(d) > 0.0)) {
        throw Error(ErrorCode::DegenerateDenominator, "field point on the retarded light cone apex");
    }
    out.potential = lower(k.u) * (particle.charge() / d);
    return out;
}

}  // namespace shellrr
