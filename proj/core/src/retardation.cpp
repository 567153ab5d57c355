#include "shellrr/retardation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "shellrr/errors.hpp"

namespace shellrr {

namespace {

struct Sample {
    double f;
    double df;
};

/// Safeguarded Newton on an increasing function with f(lo) < 0 < f(hi).
/// `tol_at(x)` gives the accepted |f| at x.
template <class Fn, class Tol>
DelaySolution solve_increasing(Fn&& fn, Tol&& tol_at, double lo, double hi, double x, const char* what) {
    if (!(x > lo && x <= hi)) x = 0.5 * (lo + hi);
    for (int it = 1; it <= kMaxRootIterations; ++it) {
        const Sample v = fn(x);
        if (!std::isfinite(v.f) || !std::isfinite(v.df)) {
            throw Error(ErrorCode::NumericalStall, std::string(what) + ": non-finite residual");
        }
        if (std::abs(v.f) <= tol_at(x)) {
            if (!(v.df > 0.0)) {
                std::ostringstream os;
                os << what << ": non-increasing retardation function at the root (slope " << v.df << ")";
                throw Error(ErrorCode::NumericalStall, os.str());
            }
            DelaySolution best{x, 0.0, std::abs(v.f), it};
            Sample at = v;
            for (int polish = 0; polish < 2 && at.f != 0.0; ++polish) {
                const double candidate = std::clamp(best.s_ret - at.f / at.df, lo, hi);
                if (candidate == best.s_ret) break;
                const Sample w = fn(candidate);
                if (!(std::abs(w.f) < best.residual) || !(w.df > 0.0)) break;
                best = {candidate, 0.0, std::abs(w.f), best.iterations + 1};
                at = w;
            }
            return best;
        }
        if (v.f < 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        const double newton = v.df > 0.0 ? x - v.f / v.df : std::numeric_limits<double>::quiet_NaN();
        const double next = (newton >= lo && newton <= hi) ? newton : 0.5 * (lo + hi);
        if (next == x || !(hi > lo)) {
            std::ostringstream os;
            os.precision(17);
            os << what << ": bracket collapsed at " << x << " with residual " << v.f;
            throw Error(ErrorCode::NumericalStall, os.str());
        }
        x = next;
    }
    throw Error(ErrorCode::NumericalStall, std::string(what) + ": iteration cap reached");
}

}  // namespace

double root_tolerance(double sigma) noexcept { return 1e-12 * std::max(1.0, sigma * sigma); }

DelaySolution proper_delay(const Worldline& past, const FourVector& r_present, double s, double sigma,
                           std::optional<double> warm_start) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::InvalidParticle, "delay equation needs sigma > 0");
    }
    if (!std::isfinite(s) || !r_present.finite()) {
        throw Error(ErrorCode::NonFiniteInput, "delay equation at a non-finite state");
    }
    const double sigma2 = sigma * sigma;
    const double tol = root_tolerance(sigma);
    auto phi = [&](double delta) {
        const Kinematics k = past.at(s - delta);
        const FourVector chord = r_present - k.r;
        return Sample{dot(chord, chord) - sigma2, 2.0 * dot(chord, k.u)};
    };

    double lo = std::max(0.0, s - past.horizon());
    if (lo > 0.0) {
        const Sample at_lo = phi(lo);
        if (std::abs(at_lo.f) <= tol && at_lo.df > 0.0) return {lo, s - lo, std::abs(at_lo.f), 1};
        if (at_lo.f > 0.0) {
            std::ostringstream os;
            os.precision(17);
            os << "retarded time for s = " << s << " lies after the history horizon " << past.horizon();
            throw Error(ErrorCode::QueryBeyondHistory, os.str());
        }
    }
    double hi = std::max(sigma, lo);
    int doublings = 0;
    while (phi(hi).f < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 64) {
            throw Error(ErrorCode::RootNotBracketed, "worldline delay equation has no sign change");
        }
    }
    DelaySolution sol = solve_increasing(phi, [tol](double) { return tol; }, lo, hi,
                                         warm_start.value_or(sigma), "worldline delay");
    sol.s_emit = s - sol.s_ret;
    return sol;
}

DelaySolution proper_delay(const Worldline& worldline, double s, double sigma, std::optional<double> warm_start) {
    return proper_delay(worldline, worldline.at(s).r, s, sigma, warm_start);
}

double simultaneity_root(const Worldline& worldline, const FourVector& field_point) {
    if (!field_point.finite()) throw Error(ErrorCode::NonFiniteInput, "non-finite field point");
    const double horizon = worldline.horizon();
    const double anchor = std::isfinite(horizon) ? horizon : 0.0;

    // f(s) = -u(s).(r - r(s)) is increasing: f' = 1 - a.(r - r(s)).
    auto f = [&](double s) {
        const Kinematics k = worldline.at(s);
        const FourVector x = field_point - k.r;
        return Sample{-dot(k.u, x), 1.0 - dot(k.a, x)};
    };
    auto tol_at = [&](double s) {
        const Kinematics k = worldline.at(s);
        return 1e-12 * std::max(1.0, (field_point - k.r).euclidean_norm() * k.u.euclidean_norm());
    };

    const Kinematics ka = worldline.at(anchor);
    double x0 = anchor + dot(ka.u, field_point - ka.r);
    if (x0 > horizon) x0 = horizon;

    double lo = x0;
    double hi = x0;
    const Sample v0 = f(x0);
    if (std::abs(v0.f) <= tol_at(x0)) return x0;
    double step = std::max(std::abs(v0.f), 1e-6 * std::max(1.0, std::abs(x0)));
    int expansions = 0;
    if (v0.f < 0.0) {
        // Root is later.
        while (true) {
            hi = std::min(lo + step, horizon);
            const Sample v = f(hi);
            if (v.f >= 0.0) break;
            if (hi >= horizon) {
                throw Error(ErrorCode::RootNotBracketed, "simultaneity point lies after the history horizon");
            }
            lo = hi;
            step *= 2.0;
            if (++expansions > kMaxRootIterations) {
                throw Error(ErrorCode::RootNotBracketed, "simultaneity root not bracketed");
            }
        }
    } else {
        while (true) {
            lo = hi - step;
            const Sample v = f(lo);
            if (v.f <= 0.0) break;
            hi = lo;
            step *= 2.0;
            if (++expansions > kMaxRootIterations) {
                throw Error(ErrorCode::RootNotBracketed, "simultaneity root not bracketed");
            }
        }
    }
    if (f(lo).f == 0.0) return lo;
    if (f(hi).f == 0.0) return hi;
    return solve_increasing(f, tol_at, lo, hi, x0, "simultaneity").s_ret;
}

DelaySolution fieldpoint_retarded_root(const Worldline& worldline, const FourVector& field_point, double s1,
                                       double rho2, double sigma) {
    if (!(rho2 >= 0.0) || !std::isfinite(rho2)) {
        throw Error(ErrorCode::NonFiniteInput, "rho^2 must be finite and non-negative");
    }
    if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidParticle, "field-point retardation needs sigma > 0");
    auto phi = [&](double delta) {
        const Kinematics k = worldline.at(s1 - delta);
        const FourVector sep = field_point - k.r;
        return Sample{dot(sep, sep) - rho2, 2.0 * dot(sep, k.u)};
    };
    auto tol_at = [&](double delta) {
        const FourVector sep = field_point - worldline.at(s1 - delta).r;
        const double scale = sep.euclidean_norm();
        return 1e-12 * std::max({1.0, sigma * sigma, scale * scale});
    };

    const Sample at_zero = phi(0.0);
    if (at_zero.f >= 0.0) {
        throw Error(ErrorCode::RootNotBracketed, "field point is not spacelike to its simultaneity point");
    }
    double lo = 0.0;
    double hi = sigma;
    int doublings = 0;
    while (phi(hi).f < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 200) throw Error(ErrorCode::RootNotBracketed, "field-point retardation not bracketed");
    }
    DelaySolution sol = solve_increasing(phi, tol_at, lo, hi, 0.5 * (lo + hi), "field-point retardation");
    sol.s_emit = s1 - sol.s_ret;
    return sol;
}

FieldPointGeometry classify_field_point(const Worldline& worldline, const FourVector& field_point, double sigma) {
    FieldPointGeometry g;
    g.s1 = simultaneity_root(worldline, field_point);
    g.displacement = field_point - worldline.at(g.s1).r;
    g.x2 = dot(g.displacement, g.displacement);
    const double sigma2 = sigma * sigma;
    if (g.x2 <= -sigma2) {
        g.domain = FieldDomain::External;
        g.rho2 = 0.0;
    } else {
        g.domain = FieldDomain::Internal;
        g.rho2 = std::max(0.0, sigma2 + g.x2);
    }
    return g;
}

}  // namespace shellrr
