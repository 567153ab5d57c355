#pragma once

// Independent reference computations. None of these share code paths with the
// engine beyond the worldline evaluators and the tensor algebra.

#include "shellrr/particle.hpp"
#include "shellrr/worldline.hpp"

namespace shellrr::oracles {

/// Worldline delay by plain bisection of (r(s) - r(s - d))^2 - sigma^2 on
/// [0, sigma], stopped when the bracket is narrower than `tol`.
double bisection_delay(const Worldline& worldline, double s, double sigma, double tol = 1e-14);

/// Closed-form delay on the hyperbolic worldline of proper acceleration g:
/// d = (2/g) asinh(g sigma / 2).
double hyperbolic_delay(double g, double sigma);

/// Self Faraday tensor with the s'-derivative replaced by a central finite
/// difference of (u'_mu R_k - u'_k R_mu)/D with step `step`, the delay taken
/// from bisection.
FaradayTensor finite_difference_self_faraday(const Worldline& worldline, double s, const ShellParticle& particle,
                                             double step = 1e-5);

/// Covariant potential of a uniformly moving shell with velocity `u` whose
/// centre passes through `origin`: q u_mu / max(d, sigma) with d the rest-frame
/// distance of the field point.
CoVector boosted_coulomb_potential(const FourVector& origin, const FourVector& u, const FourVector& field_point,
                                   double charge, double sigma);

/// Average of cos(k.x + phase) over a sphere of radius sigma divided by
/// cos(phase): sin(k sigma)/(k sigma).
double sphere_average_factor(double k_sigma);

}  // namespace shellrr::oracles
