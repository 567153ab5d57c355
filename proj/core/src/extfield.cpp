#include "shellrr/extfield.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "shellrr/errors.hpp"

namespace shellrr {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite3(const Vec3& v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

double wave_phase(const PlaneWaveField& w, const FourVector& r) {
    return dot3(w.wavevector, r.spatial()) - norm3(w.wavevector) * r[0];
}

}  // namespace

void validate_field_model(const ExternalFieldModel& model) {
    std::visit(Overloaded{
                   [](const ZeroField&) {},
                   [](const UniformStaticField& f) {
                       if (!finite3(f.electric) || !finite3(f.magnetic)) {
                           throw Error(ErrorCode::InvalidFieldModel, "uniform field has non-finite components");
                       }
                   },
                   [](const PlaneWaveField& w) {
                       if (!std::isfinite(w.amplitude) || !finite3(w.wavevector) || !finite3(w.polarization)) {
                           throw Error(ErrorCode::InvalidFieldModel, "plane wave has non-finite parameters");
                       }
                       const double k = norm3(w.wavevector);
                       if (!(k > 0.0)) throw Error(ErrorCode::InvalidFieldModel, "plane wave needs |k| > 0");
                       if (std::abs(norm3(w.polarization) - 1.0) > 1e-12) {
                           throw Error(ErrorCode::InvalidFieldModel, "plane-wave polarization must be a unit vector");
                       }
                       if (std::abs(dot3(w.polarization, w.wavevector)) > 1e-12 * k) {
                           throw Error(ErrorCode::InvalidFieldModel, "plane-wave polarization must be transverse to k");
                       }
                   },
               },
               model);
}

ExternalFieldModel scaled(const ExternalFieldModel& model, double factor) {
    return std::visit(Overloaded{
                          [](const ZeroField& z) -> ExternalFieldModel { return z; },
                          [factor](const UniformStaticField& f) -> ExternalFieldModel {
                              return UniformStaticField{f.electric * factor, f.magnetic * factor};
                          },
                          [factor](const PlaneWaveField& w) -> ExternalFieldModel {
                              return PlaneWaveField{w.amplitude * factor, w.wavevector, w.polarization};
                          },
                      },
                      model);
}

FourVector potential(const ExternalFieldModel& model, const FourVector& r) {
    return std::visit(Overloaded{
                          [](const ZeroField&) { return FourVector{}; },
                          [&r](const UniformStaticField& f) {
                              const Vec3 x = r.spatial();
                              return make_four_vector(-dot3(f.electric, x), 0.5 * cross(f.magnetic, x));
                          },
                          [&r](const PlaneWaveField& w) {
                              return make_four_vector(0.0, w.polarization * (w.amplitude * std::cos(wave_phase(w, r))));
                          },
                      },
                      model);
}

FaradayTensor faraday(const ExternalFieldModel& model, const FourVector& r) {
    return std::visit(Overloaded{
                          [](const ZeroField&) { return FaradayTensor{}; },
                          [](const UniformStaticField& f) { return FaradayTensor::from_fields(f.electric, f.magnetic); },
                          [&r](const PlaneWaveField& w) {
                              // E = -dA/dt, B = curl A for A = a e cos(k.x - w t).
                              const double sn = std::sin(wave_phase(w, r));
                              const double k = norm3(w.wavevector);
                              const Vec3 e = w.polarization * (-w.amplitude * k * sn);
                              const Vec3 b = cross(w.wavevector, w.polarization) * (-w.amplitude * sn);
                              return FaradayTensor::from_fields(e, b);
                          },
                      },
                      model);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

SphereQuadrature::SphereQuadrature(int order) : order_(order) {
    if (order < 2) {
        throw Error(ErrorCode::InvalidFieldModel, "sphere quadrature order must be at least 2");
    }
    std::vector<double> mu;
    std::vector<double> w;
    gauss_legendre(order, mu, w);
    const int n_phi = 2 * order;
    nodes_.reserve(static_cast<std::size_t>(order * n_phi));
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double sin_theta = std::sqrt(std::max(0.0, 1.0 - mu[i] * mu[i]));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / n_phi;
            nodes_.push_back({Vec3{sin_theta * std::cos(phi), sin_theta * std::sin(phi), mu[i]},
                              0.5 * w[i] / n_phi});
        }
    }
}

namespace {

template <class Value, class Eval>
Value shell_average(const ParticleState& state, double sigma, const SphereQuadrature& quadrature, Eval&& eval) {
    // Runge-Kutta stage velocities sit slightly off the mass shell.
    const double norm2 = dot(state.u, state.u);
    if (!(norm2 > 0.0) || state.u[0] <= 0.0) {
        throw Error(ErrorCode::NonTimelikeVelocity, "surface average needs a future timelike velocity");
    }
    const LorentzBoost to_lab = LorentzBoost::from_velocity(state.u / std::sqrt(norm2)).inverse();
    Value acc{};
    for (const auto& node : quadrature.nodes()) {
        const FourVector offset = to_lab.apply(make_four_vector(0.0, node.direction * sigma));
        acc += eval(state.r + offset) * node.weight;
    }
    return acc;
}

}  // namespace

FaradayTensor surface_average_faraday(const ExternalFieldModel& model, const ParticleState& state, double sigma,
                                      const SphereQuadrature& quadrature) {
    if (std::holds_alternative<ZeroField>(model)) return FaradayTensor{};
    return shell_average<FaradayTensor>(state, sigma, quadrature,
                                        [&model](const FourVector& p) { return faraday(model, p); });
}

FaradayTensor surface_average_faraday(const ExternalFieldModel& model, const ParticleState& state, double sigma,
                                      int quad_order) {
    return surface_average_faraday(model, state, sigma, SphereQuadrature(quad_order));
}

FourVector surface_average_potential(const ExternalFieldModel& model, const ParticleState& state, double sigma,
                                     const SphereQuadrature& quadrature) {
    return shell_average<FourVector>(state, sigma, quadrature,
                                     [&model](const FourVector& p) { return potential(model, p); });
}

double smoothstep5(double t) noexcept {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

namespace {

double edge(double s, double start, double width) noexcept {
    if (width <= 0.0) return s > start ? 1.0 : 0.0;
    return smoothstep5((s - start) / width);
}

}  // namespace

double ramp(const RampSchedule& schedule, double s) noexcept {
    double value = edge(s, schedule.s0, schedule.width);
    if (schedule.off_start) value *= 1.0 - edge(s, *schedule.off_start, schedule.off_width);
    return value;
}

bool has_hard_edge(const RampSchedule& schedule) noexcept {
    return schedule.width <= 0.0 || (schedule.off_start && schedule.off_width <= 0.0);
}

void validate_ramp(const RampSchedule& schedule) {
    std::ostringstream os;
    if (!std::isfinite(schedule.s0) || !std::isfinite(schedule.width) || schedule.width < 0.0) {
        os << "ramp width must be finite and non-negative";
    } else if (schedule.off_start) {
        if (!std::isfinite(*schedule.off_start) || !std::isfinite(schedule.off_width) || schedule.off_width < 0.0) {
            os << "ramp off_width must be finite and non-negative";
        } else if (*schedule.off_start < schedule.s0 + schedule.width) {
            os << "ramp off_start must not precede the end of the turn-on (s0 + width)";
        }
    }
    if (!os.str().empty()) throw Error(ErrorCode::ConfigInvalid, os.str());
}

}  // namespace shellrr
