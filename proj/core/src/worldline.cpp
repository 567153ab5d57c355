#include "shellrr/worldline.hpp"

#include <cmath>

#include "shellrr/errors.hpp"

namespace shellrr {

InertialWorldline::InertialWorldline(const FourVector& r0, const FourVector& u, double s0)
    : r0_(r0), u_(u), s0_(s0) {
    if (!r0.finite() || !u.finite() || !std::isfinite(s0)) {
        throw Error(ErrorCode::NonFiniteInput, "inertial worldline with non-finite data");
    }
    if (std::abs(dot(u, u) - 1.0) > 1e-9 || u[0] < 1.0 - 1e-9) {
        throw Error(ErrorCode::NonTimelikeVelocity, "inertial worldline velocity is not unit timelike");
    }
}

Kinematics InertialWorldline::at(double s) const {
    return {r0_ + u_ * (s - s0_), u_, FourVector{}};
}

HyperbolicWorldline::HyperbolicWorldline(double g) : g_(g) {
    if (!std::isfinite(g) || g <= 0.0) {
        throw Error(ErrorCode::NonFiniteInput, "hyperbolic worldline needs g > 0");
    }
}

Kinematics HyperbolicWorldline::at(double s) const {
    const double ch = std::cosh(g_ * s);
    const double sh = std::sinh(g_ * s);
    return {FourVector{sh / g_, ch / g_, 0.0, 0.0}, FourVector{ch, sh, 0.0, 0.0},
            FourVector{g_ * sh, g_ * ch, 0.0, 0.0}};
}

FourVector HyperbolicWorldline::jerk(double s) const {
    return FourVector{std::cosh(g_ * s), std::sinh(g_ * s), 0.0, 0.0} * (g_ * g_);
}

CircularWorldline::CircularWorldline(double radius, double omega) : radius_(radius) {
    const double v = radius * omega;
    if (!std::isfinite(v) || radius <= 0.0 || omega <= 0.0 || v >= 1.0) {
        throw Error(ErrorCode::NonTimelikeVelocity, "circular worldline needs 0 < R*Omega < 1");
    }
    gamma_ = 1.0 / std::sqrt(1.0 - v * v);
    w_ = omega * gamma_;
}

Kinematics CircularWorldline::at(double s) const {
    const double c = std::cos(w_ * s);
    const double sn = std::sin(w_ * s);
    const double rw = radius_ * w_;
    return {FourVector{gamma_ * s, radius_ * c, radius_ * sn, 0.0},
            FourVector{gamma_, -rw * sn, rw * c, 0.0},
            FourVector{0.0, -rw * w_ * c, -rw * w_ * sn, 0.0}};
}

FourVector CircularWorldline::jerk(double s) const {
    const double rw3 = radius_ * w_ * w_ * w_;
    return FourVector{0.0, rw3 * std::sin(w_ * s), -rw3 * std::cos(w_ * s), 0.0};
}

}  // namespace shellrr
