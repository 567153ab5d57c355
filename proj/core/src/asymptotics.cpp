#include "shellrr/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "shellrr/csv.hpp"
#include "shellrr/errors.hpp"
#include "shellrr/selffield.hpp"

namespace shellrr {

double em_mass(const ShellParticle& particle) noexcept {
    return particle.charge() * particle.charge() / particle.sigma();
}

LadEvaluation lad_force(const FourVector& u, const FourVector& a, const FourVector& adot,
                        const ShellParticle& particle) {
    if (std::abs(dot(u, u) - 1.0) > 1e-6) {
        throw Error(ErrorCode::InvalidSample, "LAD force needs a unit timelike velocity");
    }
    if (std::abs(dot(u, a)) > 1e-6) {
        throw Error(ErrorCode::InvalidSample, "LAD force needs an acceleration orthogonal to u");
    }
    const double q2 = particle.charge() * particle.charge();
    LadEvaluation out;
    out.em_mass_term = lower(a) * (-em_mass(particle));
    out.schott_term = lower(adot - u * dot(u, adot)) * (2.0 / 3.0 * q2);
    out.total = out.em_mass_term + out.schott_term;
    const double a_norm = minkowski_norm(a);
    out.epsilon = a_norm > 0.0 ? particle.sigma() * minkowski_norm(adot) / a_norm : 0.0;
    return out;
}

namespace {

FourVector central_difference(const std::vector<HistorySample>& samples, std::size_t i) {
    const double h1 = samples[i].s - samples[i - 1].s;
    const double h2 = samples[i + 1].s - samples[i].s;
    return samples[i - 1].a * (-h2 / (h1 * (h1 + h2))) + samples[i].a * ((h2 - h1) / (h1 * h2)) +
           samples[i + 1].a * (h1 / (h2 * (h1 + h2)));
}

}  // namespace

ComparisonReport compare_exact_vs_lad(const TrajectoryHistory& history, std::span<const double> s_samples,
                                      const ShellParticle& particle, double floor) {
    const auto& samples = history.samples();
    ComparisonReport report;
    report.rows.reserve(s_samples.size());
    for (const double s : s_samples) {
        const auto idx = history.index_at_or_before(s);
        if (!idx || s > history.s_last()) {
            std::ostringstream os;
            os << "comparison sample s = " << s << " outside the integrated interval";
            throw Error(ErrorCode::QueryBeyondHistory, os.str());
        }
        std::size_t i = *idx;
        if (i + 1 < samples.size() && (samples[i + 1].s - s) < (s - samples[i].s)) ++i;
        if (i == 0 || i + 1 >= samples.size()) {
            std::ostringstream os;
            os << "comparison sample s = " << s << " has no interior node for the central difference";
            throw Error(ErrorCode::QueryBeyondHistory, os.str());
        }
        const HistorySample& node = samples[i];
        const ParticleState state{node.s, node.r, node.u};
        const SelfFieldEvaluation exact = self_faraday(history, state, particle);
        const CoVector f_exact = self_force(state, exact, particle);
        const FourVector adot = central_difference(samples, i);
        const LadEvaluation lad = lad_force(node.u, node.a, adot, particle);

        ComparisonRow row;
        row.s = node.s;
        const double a_norm = minkowski_norm(node.a);
        row.epsilon = a_norm > 0.0 ? exact.delay.s_ret * minkowski_norm(adot) / a_norm : 0.0;
        row.exact_force_norm = minkowski_norm(f_exact);
        row.lad_force_norm = minkowski_norm(lad.total);
        const double diff = minkowski_norm(f_exact - lad.total);
        row.deviation = diff == 0.0 ? 0.0 : diff / std::max(row.exact_force_norm, floor);
        report.rows.push_back(row);
    }
    if (!report.rows.empty()) {
        double sum = 0.0;
        double eps = 0.0;
        for (const auto& r : report.rows) {
            sum += r.deviation;
            eps += r.epsilon;
            report.max_deviation = std::max(report.max_deviation, r.deviation);
        }
        report.mean_deviation = sum / static_cast<double>(report.rows.size());
        report.mean_epsilon = eps / static_cast<double>(report.rows.size());
    }
    return report;
}

std::vector<double> tail_samples(const TrajectoryHistory& history, std::size_t count, double fraction) {
    std::vector<double> out;
    if (count == 0 || history.size() < 3) return out;
    const auto& samples = history.samples();
    const double s_hi = samples[samples.size() - 2].s;
    const double s_lo = std::max(samples[1].s, s_hi - fraction * (s_hi - history.s0()));
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = count == 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(count - 1);
        out.push_back(s_lo + t * (s_hi - s_lo));
    }
    return out;
}

double fit_power_law_exponent(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(ErrorCode::ConfigInvalid, "power-law fit needs at least two (x, y) pairs");
    }
    double mx = 0.0;
    double my = 0.0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw Error(ErrorCode::ConfigInvalid, "power-law fit needs positive data");
        }
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

void write_comparison_csv(const ComparisonReport& report, std::ostream& out) {
    out << "s,epsilon,exact_force_norm,lad_force_norm,deviation\n";
    for (const auto& r : report.rows) {
        CsvRow(out) << r.s << r.epsilon << r.exact_force_norm << r.lad_force_norm << r.deviation;
    }
}

}  // namespace shellrr
