#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "shellrr/history.hpp"
#include "shellrr/particle.hpp"

namespace shellrr {

/// Leading-order electromagnetic mass q^2 / sigma (c = 1). The velocity
/// dependent correction factor is taken as 1, its value at first order in
/// the delay.
double em_mass(const ShellParticle& particle) noexcept;

struct LadEvaluation {
    CoVector em_mass_term;  ///< -m_em a_mu
    CoVector schott_term;   ///< g_mu = (2/3) q^2 [adot_mu - u_mu (u.adot)]
    CoVector total;         ///< G_mu = em_mass_term + schott_term
    double epsilon = 0.0;   ///< sigma |adot| / |a|, the delay over the acceleration time scale
};

/// Short-delay (LAD) form of the self force. Requires |u.u - 1| <= 1e-6 and
/// |u.a| <= 1e-6; throws InvalidSample otherwise.
LadEvaluation lad_force(const FourVector& u, const FourVector& a, const FourVector& adot,
                        const ShellParticle& particle);

struct ComparisonRow {
    double s = 0.0;
    double epsilon = 0.0;  ///< s_ret |adot| / |a| with the exact delay
    double exact_force_norm = 0.0;
    double lad_force_norm = 0.0;
    double deviation = 0.0;  ///< |f_exact - G_lad| / max(|f_exact|, floor)
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    double mean_deviation = 0.0;
    double max_deviation = 0.0;
    double mean_epsilon = 0.0;
};

/// Exact self force against the LAD form at stored samples of an integrated
/// history. Each requested s snaps to the nearest interior node; adot there
/// is the three-point central difference of the stored accelerations. Norms
/// are the invariant sqrt(|f.f|). Throws QueryBeyondHistory when a request
/// has no interior node next to it.
ComparisonReport compare_exact_vs_lad(const TrajectoryHistory& history, std::span<const double> s_samples,
                                      const ShellParticle& particle, double floor = 1e-300);

/// Evenly spaced sample times over the last `fraction` of the history.
std::vector<double> tail_samples(const TrajectoryHistory& history, std::size_t count, double fraction);

/// Least-squares slope of log(y) against log(x).
double fit_power_law_exponent(std::span<const double> x, std::span<const double> y);

/// CSV `s,epsilon,exact_force_norm,lad_force_norm,deviation`.
void write_comparison_csv(const ComparisonReport& report, std::ostream& out);

}  // namespace shellrr
