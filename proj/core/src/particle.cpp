#include "shellrr/particle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "shellrr/errors.hpp"

namespace shellrr {

ShellParticle::ShellParticle(double rest_mass, double charge, double sigma, MassSupport support)
    : m0_(rest_mass), q_(charge), sigma_(sigma), support_(support) {
    std::ostringstream os;
    if (!std::isfinite(rest_mass) || rest_mass <= 0.0) {
        os << "rest mass must be finite and positive (got " << rest_mass << ")";
    } else if (!std::isfinite(charge) || charge == 0.0) {
        os << "charge must be finite and nonzero (got " << charge << ")";
    } else if (!std::isfinite(sigma) || sigma <= 0.0) {
        os << "shell radius sigma must be finite and positive (got " << sigma
           << "); the point-charge limit is not defined";
    }
    if (!os.str().empty()) throw Error(ErrorCode::InvalidParticle, os.str());
}

std::string to_string(MassSupport support) {
    return support == MassSupport::Shell ? "shell" : "point";
}

StateReport validate_state(const ParticleState& state, double tol) {
    StateReport report;
    if (!state.r.finite() || !state.u.finite() || !std::isfinite(state.s)) {
        report.residual = std::numeric_limits<double>::infinity();
        report.reason = "non-finite state component";
        return report;
    }
    report.residual = std::abs(dot(state.u, state.u) - 1.0);
    if (report.residual > tol) {
        std::ostringstream os;
        os << "|u.u - 1| = " << report.residual << " exceeds " << tol;
        report.reason = os.str();
    } else if (state.u[0] < 1.0 - tol) {
        std::ostringstream os;
        os << "u^0 = " << state.u[0] << " is not future-directed";
        report.reason = os.str();
    }
    report.valid = report.reason.empty();
    return report;
}

}  // namespace shellrr
