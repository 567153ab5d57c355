#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "shellrr/minkowski.hpp"
#include "shellrr/particle.hpp"

namespace shellrr {

struct ZeroField {
    friend bool operator==(const ZeroField&, const ZeroField&) = default;
};

struct UniformStaticField {
    Vec3 electric;
    Vec3 magnetic;
    friend bool operator==(const UniformStaticField&, const UniformStaticField&) = default;
};

/// Linearly polarized vacuum wave A = amplitude * polarization * cos(k.x - |k| ct).
/// polarization must be a unit vector orthogonal to the wavevector.
struct PlaneWaveField {
    double amplitude = 0.0;
    Vec3 wavevector;
    Vec3 polarization;
    friend bool operator==(const PlaneWaveField&, const PlaneWaveField&) = default;
};

using ExternalFieldModel = std::variant<ZeroField, UniformStaticField, PlaneWaveField>;

/// Throws InvalidFieldModel for non-finite parameters or a polarization that
/// is not unit length and transverse (tolerance 1e-12).
void validate_field_model(const ExternalFieldModel& model);

/// Same model with every field amplitude multiplied by `factor`.
ExternalFieldModel scaled(const ExternalFieldModel& model, double factor);

/// Contravariant potential A^mu = (Phi, A). Uniform fields use the symmetric
/// gauge Phi = -E.x, A = (B x x)/2.
FourVector potential(const ExternalFieldModel& model, const FourVector& r);

/// Covariant F_{mu nu} = d_mu A_nu - d_nu A_mu in closed form.
FaradayTensor faraday(const ExternalFieldModel& model, const FourVector& r);

/// Product rule on the rest-frame sphere: `order` Gauss-Legendre nodes in
/// cos(theta) times 2*order trapezoid nodes in phi. Weights sum to one.
/// Exact for integrands polynomial of degree <= 2*order - 1 in cos(theta) and
/// trigonometric of degree < 2*order in phi.
class SphereQuadrature {
public:
    struct Node {
        Vec3 direction;
        double weight;
    };

    static constexpr int kDefaultOrder = 8;

    /// Throws InvalidFieldModel for order < 2.
    explicit SphereQuadrature(int order = kDefaultOrder);

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }

private:
    int order_;
    std::vector<Node> nodes_;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Average of the lab-frame Faraday tensor over the shell of radius sigma
/// centered on state.r, the shell being a sphere in the rest frame of state.u.
FaradayTensor surface_average_faraday(const ExternalFieldModel& model, const ParticleState& state, double sigma,
                                      const SphereQuadrature& quadrature);
FaradayTensor surface_average_faraday(const ExternalFieldModel& model, const ParticleState& state, double sigma,
                                      int quad_order = SphereQuadrature::kDefaultOrder);

/// The same average applied to the potential A^mu.
FourVector surface_average_potential(const ExternalFieldModel& model, const ParticleState& state, double sigma,
                                     const SphereQuadrature& quadrature);

/// Turn-on (and optional turn-off) envelope for the external field.
/// On: 0 for s <= s0, 1 for s >= s0 + width, quintic smoothstep between
/// (C2). width == 0 is a hard step. Off: the mirror image starting at
/// off_start over off_width.
struct RampSchedule {
    double s0 = 0.0;
    double width = 0.0;
    std::optional<double> off_start;
    double off_width = 0.0;

    friend bool operator==(const RampSchedule&, const RampSchedule&) = default;
};

/// 6t^5 - 15t^4 + 10t^3 clamped to [0, 1].
double smoothstep5(double t) noexcept;

double ramp(const RampSchedule& schedule, double s) noexcept;

/// True when any edge of the envelope is a hard step.
bool has_hard_edge(const RampSchedule& schedule) noexcept;

/// Throws ConfigInvalid for negative widths or an off edge before the on edge.
void validate_ramp(const RampSchedule& schedule);

}  // namespace shellrr
