#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "shellrr/worldline.hpp"

namespace shellrr {

struct HistorySample {
    double s = 0.0;
    FourVector r;
    FourVector u{1.0, 0.0, 0.0, 0.0};
    FourVector a;  ///< du/ds as evaluated by the integrator at acceptance

    friend bool operator==(const HistorySample&, const HistorySample&) = default;
};

/// Dense worldline memory read by the delay equation.
///
/// For s <= s0 the worldline is the exact inertial prehistory
/// r0 + u0 (s - s0). Between samples: r is cubic Hermite in (r, u), u is cubic
/// Hermite in (u, a), and a is a Lagrange polynomial through at most four
/// nodes i-2..i+1 of the interval [s_i, s_{i+1}]. Every stencil lies at or
/// before the interval's right node, so appending never changes an earlier
/// evaluation. Stored nodes are reproduced bit for bit.
///
/// Single writer; concurrent const readers are fine between appends.
class TrajectoryHistory final : public Worldline {
public:
    static constexpr double kNormTolerance = 1e-6;
    static constexpr double kOrthogonalityTolerance = 1e-6;

    /// Seeds the history with (s0, r0, u0, a = 0). Throws InvalidSample if u0
    /// is not unit timelike within kNormTolerance.
    TrajectoryHistory(double s0, const FourVector& r0, const FourVector& u0);

    /// Throws NonMonotoneTime unless sample.s > s_last(); InvalidSample if the
    /// sample is non-finite, |u.u - 1| or |u.a| exceed their tolerances.
    void append(const HistorySample& sample);

    /// Throws QueryBeyondHistory for s > s_last().
    [[nodiscard]] Kinematics eval(double s) const;

    [[nodiscard]] Kinematics at(double s) const override { return eval(s); }
    [[nodiscard]] double horizon() const noexcept override { return s_last(); }
    [[nodiscard]] std::optional<FourVector> inertial_velocity_on(double s_from) const noexcept override;

    [[nodiscard]] double s0() const noexcept { return samples_.front().s; }
    [[nodiscard]] const FourVector& r0() const noexcept { return samples_.front().r; }
    [[nodiscard]] const FourVector& u0() const noexcept { return samples_.front().u; }
    [[nodiscard]] double s_last() const noexcept { return samples_.back().s; }
    [[nodiscard]] const HistorySample& last() const noexcept { return samples_.back(); }
    [[nodiscard]] const std::vector<HistorySample>& samples() const noexcept { return samples_; }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }

    /// Index of the last sample with samples()[i].s <= s, or nullopt if s < s0.
    [[nodiscard]] std::optional<std::size_t> index_at_or_before(double s) const noexcept;

private:
    [[nodiscard]] FourVector interpolate_acceleration(std::size_t i, double s) const noexcept;

    std::vector<HistorySample> samples_;
    // Start of the trailing run of samples with a == 0 and identical u.
    std::size_t quiet_run_start_ = 0;
};

/// Trajectory CSV: header `s,ct,x,y,z,u0,u1,u2,u3,a0,a1,a2,a3`, one row per
/// stored sample, shortest round-trip doubles.
void write_trajectory_csv(const TrajectoryHistory& history, std::ostream& out);

}  // namespace shellrr
