#include "shellrr/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "shellrr/errors.hpp"

namespace shellrr::oracles {

namespace {

double chord_residual(const Worldline& w, const FourVector& r_now, double s, double d, double sigma) {
    const FourVector R = r_now - w.at(s - d).r;
    return dot(R, R) - sigma * sigma;
}

FaradayTensor quotient(const Worldline& w, const FourVector& r_now, double s_emit) {
    const Kinematics k = w.at(s_emit);
    const FourVector R = r_now - k.r;
    const double D = dot(R, k.u);
    FaradayTensor n = FaradayTensor::wedge(lower(k.u), lower(R));
    n *= 1.0 / D;
    return n;
}

}  // namespace

double bisection_delay(const Worldline& worldline, double s, double sigma, double tol) {
    const FourVector r_now = worldline.at(s).r;
    double lo = 0.0;
    double hi = sigma;
    if (chord_residual(worldline, r_now, s, hi, sigma) < 0.0) {
        throw Error(ErrorCode::RootNotBracketed, "bisection oracle: chord shorter than sigma at delay sigma");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (chord_residual(worldline, r_now, s, mid, sigma) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double hyperbolic_delay(double g, double sigma) { return 2.0 / g * std::asinh(0.5 * g * sigma); }

FaradayTensor finite_difference_self_faraday(const Worldline& worldline, double s, const ShellParticle& particle,
                                             double step) {
    const double sigma = particle.sigma();
    const double delay = bisection_delay(worldline, s, sigma);
    const double s_emit = s - delay;
    const FourVector r_now = worldline.at(s).r;
    const Kinematics k = worldline.at(s_emit);
    const double D = dot(r_now - k.r, k.u);

    FaradayTensor diff = quotient(worldline, r_now, s_emit + step) - quotient(worldline, r_now, s_emit - step);
    diff *= 1.0 / (2.0 * step);
    diff *= -2.0 * particle.charge() / std::abs(D);
    return diff;
}

CoVector boosted_coulomb_potential(const FourVector& origin, const FourVector& u, const FourVector& field_point,
                                   double charge, double sigma) {
    const FourVector x = field_point - origin;
    const FourVector transverse = x - dot(u, x) * u;
    const double d = std::sqrt(std::max(0.0, -dot(transverse, transverse)));
    return lower(u) * (charge / std::max(d, sigma));
}

double sphere_average_factor(double k_sigma) {
    if (std::abs(k_sigma) < 1e-4) return 1.0 - k_sigma * k_sigma / 6.0;
    return std::sin(k_sigma) / k_sigma;
}

}  // namespace shellrr::oracles
