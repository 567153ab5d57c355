#pragma once

#include <limits>
#include <optional>

#include "shellrr/minkowski.hpp"

namespace shellrr {

/// Position, velocity and acceleration of the center of symmetry at one s.
struct Kinematics {
    FourVector r;
    FourVector u{1.0, 0.0, 0.0, 0.0};
    FourVector a;
};

/// Read-only access to a timelike worldline parameterized by proper time.
/// The retardation solvers and the self-field evaluator only see this.
class Worldline {
public:
    virtual ~Worldline() = default;

    /// Throws QueryBeyondHistory for s > horizon().
    [[nodiscard]] virtual Kinematics at(double s) const = 0;

    /// Latest proper time that may be queried.
    [[nodiscard]] virtual double horizon() const noexcept = 0;

    /// If the worldline is exactly force-free (a == 0, u constant, bit for
    /// bit) on [s_from, horizon()], returns that constant velocity.
    [[nodiscard]] virtual std::optional<FourVector> inertial_velocity_on(double s_from) const noexcept {
        (void)s_from;
        return std::nullopt;
    }
};

/// r(s) = r0 + u (s - s0).
class InertialWorldline final : public Worldline {
public:
    /// Throws NonTimelikeVelocity if u is not unit timelike within 1e-9.
    InertialWorldline(const FourVector& r0, const FourVector& u, double s0 = 0.0);

    [[nodiscard]] Kinematics at(double s) const override;
    [[nodiscard]] double horizon() const noexcept override { return std::numeric_limits<double>::infinity(); }
    [[nodiscard]] std::optional<FourVector> inertial_velocity_on(double) const noexcept override { return u_; }

private:
    FourVector r0_;
    FourVector u_;
    double s0_;
};

/// Uniform proper acceleration g along x:
/// r(s) = (sinh(g s)/g, cosh(g s)/g, 0, 0).
class HyperbolicWorldline final : public Worldline {
public:
    explicit HyperbolicWorldline(double g);

    [[nodiscard]] Kinematics at(double s) const override;
    [[nodiscard]] FourVector jerk(double s) const;  ///< da/ds
    [[nodiscard]] double horizon() const noexcept override { return std::numeric_limits<double>::infinity(); }
    [[nodiscard]] double acceleration() const noexcept { return g_; }

private:
    double g_;
};

/// Uniform circular motion in the x-y plane: radius R, lab angular frequency Omega
/// (R Omega < 1). Proper angular frequency is gamma Omega.
class CircularWorldline final : public Worldline {
public:
    CircularWorldline(double radius, double omega);

    [[nodiscard]] Kinematics at(double s) const override;
    [[nodiscard]] FourVector jerk(double s) const;  ///< da/ds
    [[nodiscard]] double horizon() const noexcept override { return std::numeric_limits<double>::infinity(); }
    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double proper_frequency() const noexcept { return w_; }

private:
    double radius_;
    double gamma_;
    double w_;
};

}  // namespace shellrr
