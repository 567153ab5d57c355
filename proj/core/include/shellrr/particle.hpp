#pragma once

#include <string>

#include "shellrr/minkowski.hpp"

namespace shellrr {

/// Where the rest mass lives. Both variants obey the same equation of motion;
/// the flag is carried for reporting.
enum class MassSupport {
    Shell,  ///< mass on the charge shell, sigma_m = sigma
    Point,  ///< Lorentzian particle, sigma_m = 0
};

/// Spherical-shell charge of radius sigma (in its instantaneous rest frame),
/// non-rotating. sigma > 0 always: the point-charge limit does not exist.
class ShellParticle {
public:
    /// Throws InvalidParticle unless m0 > 0, q != 0, sigma > 0, all finite.
    ShellParticle(double rest_mass, double charge, double sigma, MassSupport support = MassSupport::Shell);

    static ShellParticle finite_size(double rest_mass, double charge, double sigma) {
        return {rest_mass, charge, sigma, MassSupport::Shell};
    }
    static ShellParticle lorentzian(double rest_mass, double charge, double sigma) {
        return {rest_mass, charge, sigma, MassSupport::Point};
    }

    [[nodiscard]] double rest_mass() const noexcept { return m0_; }
    [[nodiscard]] double charge() const noexcept { return q_; }
    [[nodiscard]] double sigma() const noexcept { return sigma_; }
    [[nodiscard]] double mass_radius() const noexcept { return support_ == MassSupport::Shell ? sigma_ : 0.0; }
    [[nodiscard]] MassSupport support() const noexcept { return support_; }
    [[nodiscard]] bool is_lorentzian() const noexcept { return support_ == MassSupport::Point; }

    friend bool operator==(const ShellParticle&, const ShellParticle&) = default;

private:
    double m0_;
    double q_;
    double sigma_;
    MassSupport support_;
};

std::string to_string(MassSupport support);

/// Center-of-symmetry state at proper time s.
struct ParticleState {
    double s = 0.0;
    FourVector r;
    FourVector u{1.0, 0.0, 0.0, 0.0};

    friend bool operator==(const ParticleState&, const ParticleState&) = default;
};

struct StateReport {
    bool valid = false;
    double residual = 0.0;  ///< |u.u - 1|
    std::string reason;     ///< empty when valid
};

inline constexpr double kDefaultStateTolerance = 1e-8;

/// Checks the mass-shell constraint u.u = 1 and future orientation u^0 >= 1.
StateReport validate_state(const ParticleState& state, double tol = kDefaultStateTolerance);

}  // namespace shellrr
