#pragma once

#include <optional>

#include "shellrr/worldline.hpp"

namespace shellrr {

/// Root of a retardation condition. For the worldline delay s_ret is the
/// proper-time gap s - s_emit; for a field point it is s1 - s_emit, measured
/// from the simultaneity proper time s1 of that point.
struct DelaySolution {
    double s_ret = 0.0;
    double s_emit = 0.0;
    double residual = 0.0;  ///< |R.R - target| at the accepted root
    int iterations = 0;
};

inline constexpr int kMaxRootIterations = 200;

/// 1e-12 * max(1, sigma^2).
double root_tolerance(double sigma) noexcept;

/// Smallest positive delta with (r_present - r(s - delta))^2 = sigma^2, the
/// worldline delay of the shell self-interaction. `r_present` is the COS
/// position at s; the worldline only supplies the past.
///
/// Bracket [max(0, s - horizon), sigma] (the chord of a timelike path is never
/// shorter than its proper time, so phi(sigma) >= 0), widened by doubling if
/// interpolation noise says otherwise; then safeguarded Newton.
///
/// Throws QueryBeyondHistory when the root would lie after the worldline's
/// horizon, RootNotBracketed when doubling fails, NumericalStall after
/// kMaxRootIterations or when d(phi)/d(delta) <= 0 at the root.
DelaySolution proper_delay(const Worldline& past, const FourVector& r_present, double s, double sigma,
                           std::optional<double> warm_start = std::nullopt);

/// Same, with the present position taken from the worldline itself.
DelaySolution proper_delay(const Worldline& worldline, double s, double sigma,
                           std::optional<double> warm_start = std::nullopt);

/// Proper time s1 with u(s1).(r - r(s1)) = 0. Throws RootNotBracketed when
/// the root is not within the worldline's queryable range.
double simultaneity_root(const Worldline& worldline, const FourVector& field_point);

/// Smallest positive delta = s1 - s' with (r - r(s'))^2 = rho2. The bracket
/// starts at sigma and doubles.
DelaySolution fieldpoint_retarded_root(const Worldline& worldline, const FourVector& field_point, double s1,
                                       double rho2, double sigma);

enum class FieldDomain { Internal, External };

/// The simultaneity construction for a field point: X = r - r(s1) with
/// X.u(s1) = 0, classified internal when X.X > -sigma^2.
struct FieldPointGeometry {
    double s1 = 0.0;
    FourVector displacement;  ///< X
    double x2 = 0.0;          ///< X.X (<= 0)
    FieldDomain domain = FieldDomain::External;
    double rho2 = 0.0;  ///< 0 outside, sigma^2 + X.X inside
};

FieldPointGeometry classify_field_point(const Worldline& worldline, const FourVector& field_point, double sigma);

}  // namespace shellrr
