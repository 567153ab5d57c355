#include <doctest.h>

#include <cmath>
#include <vector>

#include "shellrr/errors.hpp"
#include "shellrr/history.hpp"
#include "shellrr/oracles.hpp"
#include "shellrr/selffield.hpp"
#include "test_support.hpp"

using namespace shellrr;

namespace {

double relative_difference(const FaradayTensor& a, const FaradayTensor& b) {
    return (a - b).max_abs() / b.max_abs();
}

/// Moves like a rest particle but reports a nearly vanishing velocity.
class CollapsedVelocity final : public Worldline {
public:
    [[nodiscard]] Kinematics at(double s) const override {
        return {FourVector{s, 0, 0, 0}, FourVector{1e-13, 0, 0, 0}, FourVector{}};
    }
    [[nodiscard]] double horizon() const noexcept override { return 1e300; }
};

}  // namespace

TEST_SUITE("selffield") {

TEST_CASE("inertial motion has a literally zero self field") {
    test_support::Rng rng(51);
    const ShellParticle p(1.0, 0.7, 0.1);
    for (int i = 0; i < 100; ++i) {
        const InertialWorldline w(rng.four_vector(-3, 3), rng.velocity(3.0));
        const double s = rng.uniform(-5, 5);
        const SelfFieldEvaluation ev = self_faraday(w, s, p);
        CHECK(ev.field.is_zero());
        CHECK(ev.inertial_shortcut);
        const Kinematics k = w.at(s);
        CHECK(self_force({s, k.r, k.u}, ev, p) == CoVector{});
    }
}

TEST_CASE("inertial stored history also gives the zero tensor") {
    const FourVector u{3, 2, 2, 0};
    TrajectoryHistory h(0.0, FourVector{}, u);
    for (int i = 1; i <= 30; ++i) h.append({0.01 * i, u * (0.01 * i), u, FourVector{}});
    const ShellParticle p(1.0, 1.0, 0.1);
    const SelfFieldEvaluation ev = self_faraday(h, ParticleState{0.3, h.last().r, u}, p);
    CHECK(ev.field.is_zero());
}

TEST_CASE("hyperbolic worldline against the finite-difference oracle") {
    const HyperbolicWorldline w(0.2);
    const ShellParticle p(1.0, 1.0, 0.05);
    for (double s : {-1.0, 0.0, 0.3, 2.0}) {
        const FaradayTensor got = self_faraday(w, s, p).field;
        const FaradayTensor ref = oracles::finite_difference_self_faraday(w, s, p, 1e-6);
        CHECK(relative_difference(got, ref) <= 1e-6);
    }
}

TEST_CASE("finite-difference deviation shrinks as the square of the step") {
    const CircularWorldline w(0.3, 2.0);
    const ShellParticle p(1.0, 1.0, 0.1);
    const FaradayTensor exact = self_faraday(w, 0.7, p).field;
    std::vector<double> err;
    for (double h : {4e-2, 2e-2, 1e-2}) {
        err.push_back(relative_difference(oracles::finite_difference_self_faraday(w, 0.7, p, h * p.sigma()), exact));
    }
    CHECK(std::log2(err[0] / err[1]) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(std::log2(err[1] / err[2]) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("property: self force is orthogonal to the present velocity") {
    test_support::Rng rng(52);
    for (int i = 0; i < 300; ++i) {
        const CircularWorldline w(rng.uniform(0.05, 0.5), rng.uniform(0.5, 1.8));
        const ShellParticle p(1.0, rng.uniform(0.1, 2.0), rng.uniform(0.01, 0.3));
        const double s = rng.uniform(-5, 5);
        const Kinematics k = w.at(s);
        const ParticleState st{s, k.r, k.u};
        const CoVector f = self_force(st, self_faraday(w, s, p), p);
        CHECK(std::abs(contract(f, k.u)) <= 1e-12 * f.euclidean_norm() * k.u.euclidean_norm());
    }
}

TEST_CASE("self force matches the oracle tensor contracted with u") {
    const HyperbolicWorldline w(0.2);
    const ShellParticle p(1.0, 1.0, 0.05);
    const double s = 0.4;
    const Kinematics k = w.at(s);
    const CoVector got = self_force({s, k.r, k.u}, self_faraday(w, s, p), p);
    const CoVector ref = oracles::finite_difference_self_faraday(w, s, p, 1e-6).contract(k.u) * p.charge();
    CHECK((got - ref).max_abs() <= 1e-6 * ref.max_abs());
}

TEST_CASE("uniform acceleration: the self force is parallel to the acceleration") {
    const HyperbolicWorldline w(1.5);
    const ShellParticle p(1.0, 0.5, 0.1);
    for (double s : {-0.5, 0.0, 1.0}) {
        const Kinematics k = w.at(s);
        const CoVector f = self_force({s, k.r, k.u}, self_faraday(w, s, p), p);
        const CoVector a = lower(k.a);
        // f = lambda a with lambda < 0: the self force resists the acceleration.
        const double lambda = dot(f, a) / dot(a, a);
        CHECK(lambda < 0.0);
        CHECK((f - a * lambda).max_abs() <= 1e-10 * f.max_abs());
    }
}

TEST_CASE("evaluation carries the retarded data") {
    const CircularWorldline w(0.2, 2.0);
    const ShellParticle p(1.0, 1.0, 0.1);
    const SelfFieldEvaluation ev = self_faraday(w, 0.5, p);
    const Kinematics k = w.at(ev.delay.s_emit);
    CHECK(ev.retarded.r == k.r);
    CHECK(ev.retarded.u == k.u);
    CHECK(ev.denominator == doctest::Approx(dot(w.at(0.5).r - k.r, k.u)));
    CHECK(ev.denominator > 0.0);
    CHECK_FALSE(ev.inertial_shortcut);
}

TEST_CASE("degenerate denominator is reported") {
    const CollapsedVelocity w;
    const ShellParticle p(1.0, 1.0, 0.1);
    try {
        (void)self_faraday(w, ParticleState{1.0, FourVector{1.0, 0, 0, 0}, FourVector{1, 0, 0, 0}}, p);
        FAIL("expected DegenerateDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateDenominator);
    }
}

TEST_CASE("static shell potential: external and internal branches") {
    const InertialWorldline w(FourVector{}, FourVector{1, 0, 0, 0});
    const ShellParticle p(1.0, 1.0, 0.5);
    const SelfPotential ext = self_potential(w, FourVector{3, 2, 0, 0}, p);
    CHECK(ext.potential[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ext.potential[1] == 0.0);
    CHECK(ext.geometry.domain == FieldDomain::External);

    const SelfPotential in = self_potential(w, FourVector{3, 0, 0.2, 0}, p);
    CHECK(in.potential[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(in.geometry.domain == FieldDomain::Internal);
}

TEST_CASE("static shell potential is continuous at the shell") {
    const InertialWorldline w(FourVector{}, FourVector{1, 0, 0, 0});
    const ShellParticle p(1.0, 1.0, 0.5);
    const double on = self_potential(w, FourVector{1, 0, 0, 0.5}, p).potential[0];
    const double below = self_potential(w, FourVector{1, 0, 0, 0.5 - 1e-12}, p).potential[0];
    const double above = self_potential(w, FourVector{1, 0, 0, 0.5 + 1e-12}, p).potential[0];
    CHECK(on == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(below - above) <= 1e-10);
}

TEST_CASE("boosted static shell matches the boosted Coulomb potential") {
    const FourVector u{1.25, 0.75, 0, 0};
    const LorentzBoost to_lab = boost_from_velocity(u).inverse();
    const InertialWorldline w(FourVector{}, u);
    const ShellParticle p(1.0, 1.0, 0.5);
    test_support::Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        const FourVector rest_point = make_four_vector(rng.uniform(-2, 2), rng.direction() * rng.uniform(0.0, 2.0));
        const FourVector lab_point = to_lab.apply(rest_point);
        const double radius = std::sqrt(-dot(rest_point - FourVector{rest_point[0], 0, 0, 0},
                                             rest_point - FourVector{rest_point[0], 0, 0, 0}));
        const CoVector rest_potential{1.0 / std::max(radius, 0.5), 0, 0, 0};
        const CoVector want = to_lab.apply(rest_potential);
        const CoVector got = self_potential(w, lab_point, p).potential;
        CHECK((got - want).max_abs() <= 1e-9 * want.max_abs());
    }
}

}  // TEST_SUITE
