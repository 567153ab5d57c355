#include "shellrr/history.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "shellrr/csv.hpp"
#include "shellrr/errors.hpp"

namespace shellrr {

namespace {

bool is_quiet_continuation(const HistorySample& prev, const HistorySample& next) noexcept {
    return next.a == FourVector{} && next.u == prev.u;
}

// p(t) = p0 + h01(t) (p1 - p0) + h (h10(t) m0 + h11(t) m1)
FourVector hermite(const FourVector& p0, const FourVector& m0, const FourVector& p1, const FourVector& m1,
                   double h, double t) noexcept {
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h01 = 3.0 * t2 - 2.0 * t3;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h11 = t3 - t2;
    return p0 + (p1 - p0) * h01 + (m0 * h10 + m1 * h11) * h;
}

}  // namespace

TrajectoryHistory::TrajectoryHistory(double s0, const FourVector& r0, const FourVector& u0) {
    if (!std::isfinite(s0) || !r0.finite() || !u0.finite()) {
        throw Error(ErrorCode::InvalidSample, "non-finite initial data");
    }
    if (std::abs(dot(u0, u0) - 1.0) > kNormTolerance || u0[0] < 1.0 - kNormTolerance) {
        throw Error(ErrorCode::InvalidSample, "prehistory velocity is not unit timelike");
    }
    samples_.push_back(HistorySample{s0, r0, u0, FourVector{}});
}

void TrajectoryHistory::append(const HistorySample& sample) {
    if (!(sample.s > s_last())) {
        std::ostringstream os;
        os << "sample at s = " << sample.s << " does not follow s_last = " << s_last();
        throw Error(ErrorCode::NonMonotoneTime, os.str());
    }
    if (!std::isfinite(sample.s) || !sample.r.finite() || !sample.u.finite() || !sample.a.finite()) {
        throw Error(ErrorCode::InvalidSample, "non-finite sample");
    }
    const double norm_residual = std::abs(dot(sample.u, sample.u) - 1.0);
    if (norm_residual > kNormTolerance) {
        std::ostringstream os;
        os << "|u.u - 1| = " << norm_residual << " at s = " << sample.s;
        throw Error(ErrorCode::InvalidSample, os.str());
    }
    const double ortho = std::abs(dot(sample.u, sample.a));
    if (ortho > kOrthogonalityTolerance) {
        std::ostringstream os;
        os << "|u.a| = " << ortho << " at s = " << sample.s;
        throw Error(ErrorCode::InvalidSample, os.str());
    }
    if (!is_quiet_continuation(samples_.back(), sample)) quiet_run_start_ = samples_.size();
    samples_.push_back(sample);
}

std::optional<std::size_t> TrajectoryHistory::index_at_or_before(double s) const noexcept {
    if (s < s0()) return std::nullopt;
    auto it = std::upper_bound(samples_.begin(), samples_.end(), s,
                               [](double value, const HistorySample& h) { return value < h.s; });
    return static_cast<std::size_t>(std::distance(samples_.begin(), it) - 1);
}

Kinematics TrajectoryHistory::eval(double s) const {
    if (!std::isfinite(s)) throw Error(ErrorCode::NonFiniteInput, "history query at non-finite s");
    if (s > s_last()) {
        std::ostringstream os;
        os.precision(17);
        os << "query at s = " << s << " beyond s_last = " << s_last();
        throw Error(ErrorCode::QueryBeyondHistory, os.str());
    }
    const HistorySample& first = samples_.front();
    if (s <= first.s) {
        return {first.r + first.u * (s - first.s), first.u, FourVector{}};
    }
    const std::size_t i = *index_at_or_before(s);
    const HistorySample& left = samples_[i];
    if (s == left.s) return {left.r, left.u, left.a};

    const HistorySample& right = samples_[i + 1];
    const double h = right.s - left.s;
    const double t = (s - left.s) / h;
    return {hermite(left.r, left.u, right.r, right.u, h, t), hermite(left.u, left.a, right.u, right.a, h, t),
            interpolate_acceleration(i, s)};
}

FourVector TrajectoryHistory::interpolate_acceleration(std::size_t i, double s) const noexcept {
    const std::size_t lo = i >= 2 ? i - 2 : 0;
    const std::size_t hi = i + 1;
    FourVector out{};
    for (std::size_t j = lo; j <= hi; ++j) {
        double w = 1.0;
        for (std::size_t m = lo; m <= hi; ++m) {
            if (m == j) continue;
            w *= (s - samples_[m].s) / (samples_[j].s - samples_[m].s);
        }
        out += samples_[j].a * w;
    }
    return out;
}

std::optional<FourVector> TrajectoryHistory::inertial_velocity_on(double s_from) const noexcept {
    if (!std::isfinite(s_from)) return std::nullopt;
    // The acceleration stencil of an interval reaches two nodes back, so the
    // exactly-quiet region starts two samples into the quiet run.
    double quiet_from = -std::numeric_limits<double>::infinity();
    if (quiet_run_start_ > 0) {
        const std::size_t k = std::min(quiet_run_start_ + 2, samples_.size() - 1);
        quiet_from = samples_[k].s;
    }
    if (s_from < quiet_from) return std::nullopt;
    return samples_.back().u;
}

void write_trajectory_csv(const TrajectoryHistory& history, std::ostream& out) {
    out << "s,ct,x,y,z,u0,u1,u2,u3,a0,a1,a2,a3\n";
    for (const auto& h : history.samples()) {
        CsvRow row(out);
        row << h.s;
        for (std::size_t i = 0; i < 4; ++i) row << h.r[i];
        for (std::size_t i = 0; i < 4; ++i) row << h.u[i];
        for (std::size_t i = 0; i < 4; ++i) row << h.a[i];
    }
}

}  // namespace shellrr
