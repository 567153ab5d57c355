#pragma once

#include <optional>

#include "shellrr/particle.hpp"
#include "shellrr/retardation.hpp"

namespace shellrr {

struct SelfFieldEvaluation {
    FaradayTensor field;    ///< surface-averaged self Faraday tensor, covariant
    DelaySolution delay;    ///< worldline delay s_ret and emission time s'
    Kinematics retarded;    ///< r', u', a' at s'
    double denominator = 0.0;  ///< D = R.u(s') with R = r(s) - r(s')
    bool inertial_shortcut = false;  ///< true when the exact force-free branch was taken
};

/// Self field of the shell at the present state, from the retarded data on
/// `past`:
///
///   F_{mu k} = -(2q/|D|) d/ds' [ (u_mu(s') R_k - u_k(s') R_mu) / D ],
///   D = R.u(s'),  R = r(s) - r(s'),  (r(s) - r(s'))^2 = sigma^2.
///
/// The s'-derivative is expanded analytically with dR/ds' = -u(s') and
/// dD/ds' = R.a(s') - 1:
///
///   d/ds'[N/D] = (a' ^ R)/D - (u' ^ R) (R.a' - 1)/D^2.
///
/// When the past is exactly force-free from s' onward and the present
/// velocity equals that constant velocity, the zero tensor is returned
/// without arithmetic (u' ^ R vanishes identically there).
///
/// Throws DegenerateDenominator if |D| < 1e-10 sigma; propagates root errors.
SelfFieldEvaluation self_faraday(const Worldline& past, const ParticleState& present, const ShellParticle& particle,
                                 std::optional<double> warm_start = std::nullopt);

/// Present state taken from the worldline itself at s.
SelfFieldEvaluation self_faraday(const Worldline& worldline, double s, const ShellParticle& particle);

/// f_mu = q F_{mu k} u^k. Orthogonal to u by antisymmetry.
CoVector self_force(const ParticleState& state, const SelfFieldEvaluation& eval, const ShellParticle& particle);

struct SelfPotential {
    CoVector potential;  ///< A_mu = q u_mu(s') / (R.u(s')) with R = r - r(s')
    FieldPointGeometry geometry;
    DelaySolution delay;
};

/// Retarded self 4-potential of the shell at a field point: simultaneity
/// root, internal/external classification, field-point retardation with
/// rho^2, then the covariant potential.
SelfPotential self_potential(const Worldline& worldline, const FourVector& field_point,
                             const ShellParticle& particle);

}  // namespace shellrr
