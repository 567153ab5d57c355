#include <doctest.h>

#include <cmath>

#include "shellrr/errors.hpp"
#include "shellrr/history.hpp"
#include "shellrr/oracles.hpp"
#include "shellrr/retardation.hpp"
#include "test_support.hpp"

using namespace shellrr;

namespace {

/// A stored history that is the boosted image of an analytic worldline.
class BoostedWorldline final : public Worldline {
public:
    BoostedWorldline(const Worldline& base, const LorentzBoost& boost) : base_(base), boost_(boost) {}
    [[nodiscard]] Kinematics at(double s) const override {
        const Kinematics k = base_.at(s);
        return {boost_.apply(k.r), boost_.apply(k.u), boost_.apply(k.a)};
    }
    [[nodiscard]] double horizon() const noexcept override { return base_.horizon(); }

private:
    const Worldline& base_;
    LorentzBoost boost_;
};

}  // namespace

TEST_SUITE("retardation") {

TEST_CASE("inertial worldline delay equals sigma") {
    test_support::Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        const double sigma = rng.uniform(1e-3, 1.0);
        const InertialWorldline w(rng.four_vector(-1, 1), rng.velocity(2.0), rng.uniform(-1, 1));
        const double s = rng.uniform(-2, 2);
        const DelaySolution d = proper_delay(w, s, sigma);
        CHECK(std::abs(d.s_ret - sigma) <= 1e-12 * std::max(1.0, sigma));
        CHECK(d.residual <= 1e-13);
        CHECK(d.s_emit == s - d.s_ret);
        CHECK(d.s_ret > 0.0);
    }
}

TEST_CASE("inertial stored history in its prehistory") {
    TrajectoryHistory h(0.0, FourVector{}, FourVector{1.25, 0.75, 0, 0});
    h.append({0.05, FourVector{0.0625, 0.0375, 0, 0}, FourVector{1.25, 0.75, 0, 0}, FourVector{}});
    const DelaySolution d = proper_delay(h, 0.05, 0.1);
    CHECK(d.s_ret == doctest::Approx(0.1).epsilon(1e-13));
    CHECK(d.residual <= root_tolerance(0.1));
}

TEST_CASE("boosted rest history keeps the proper delay") {
    const InertialWorldline rest(FourVector{}, FourVector{1, 0, 0, 0});
    const BoostedWorldline moving(rest, boost_from_velocity(FourVector{1.25, 0.75, 0, 0}).inverse());
    CHECK(proper_delay(moving, 0.3, 0.1).s_ret == doctest::Approx(0.1).epsilon(1e-13));
}

TEST_CASE("hyperbolic delay agrees with bisection and the closed form") {
    const HyperbolicWorldline w(0.2);
    for (double s : {-3.0, 0.0, 0.5, 4.0}) {
        const DelaySolution d = proper_delay(w, s, 0.1);
        CHECK(std::abs(d.s_ret - oracles::bisection_delay(w, s, 0.1, 1e-14)) <= 1e-10);
        CHECK(std::abs(d.s_ret - oracles::hyperbolic_delay(0.2, 0.1)) <= 1e-10);
        CHECK(d.residual <= root_tolerance(0.1));
    }
}

TEST_CASE("delay is positive and the slope is positive at the root") {
    const CircularWorldline w(0.4, 2.0);
    test_support::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const double s = rng.uniform(-5, 5);
        const double sigma = rng.uniform(0.01, 0.5);
        const DelaySolution d = proper_delay(w, s, sigma);
        CHECK(d.s_ret > 0.0);
        CHECK(d.s_ret <= sigma * (1.0 + 1e-12));
        const Kinematics k = w.at(d.s_emit);
        CHECK(dot(w.at(s).r - k.r, k.u) > 0.0);
        CHECK(d.iterations <= kMaxRootIterations);
    }
}

TEST_CASE("warm start does not change the root") {
    const CircularWorldline w(0.4, 2.0);
    const double cold = proper_delay(w, 1.0, 0.2).s_ret;
    for (double warm : {1e-6, 0.05, 0.199, 0.2, 5.0}) {
        CHECK(std::abs(proper_delay(w, 1.0, 0.2, warm).s_ret - cold) <= 1e-12);
    }
}

TEST_CASE("property: the delay is frame invariant") {
    const CircularWorldline base(0.3, 2.5);
    test_support::Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const BoostedWorldline boosted(base, boost_from_velocity(rng.velocity(1.5)));
        const double s = rng.uniform(-3, 3);
        const double sigma = rng.uniform(0.02, 0.3);
        CHECK(std::abs(proper_delay(boosted, s, sigma).s_ret - proper_delay(base, s, sigma).s_ret) <= 1e-9);
    }
}

TEST_CASE("retarded time after the history horizon is reported") {
    TrajectoryHistory h(0.0, FourVector{}, FourVector{1, 0, 0, 0});
    h.append({0.01, FourVector{0.01, 0, 0, 0}, FourVector{1, 0, 0, 0}, FourVector{}});
    try {
        (void)proper_delay(h, FourVector{0.5, 0, 0, 0}, 0.5, 0.1);
        FAIL("expected QueryBeyondHistory");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::QueryBeyondHistory);
    }
}

TEST_CASE("invalid sigma is rejected") {
    const InertialWorldline w(FourVector{}, FourVector{1, 0, 0, 0});
    CHECK_THROWS_AS(proper_delay(w, 0.0, 0.0), Error);
    CHECK_THROWS_AS(proper_delay(w, 0.0, -1.0), Error);
}

TEST_CASE("simultaneity on a rest worldline") {
    const InertialWorldline w(FourVector{}, FourVector{1, 0, 0, 0});
    const double s1 = simultaneity_root(w, FourVector{3, 2, 0, 0});
    CHECK(s1 == doctest::Approx(3.0).epsilon(1e-14));
    const auto g = classify_field_point(w, FourVector{3, 2, 0, 0}, 0.5);
    CHECK((g.displacement - FourVector{0, 2, 0, 0}).max_abs() <= 1e-12);
    CHECK(g.domain == FieldDomain::External);
    CHECK(g.rho2 == 0.0);
}

TEST_CASE("simultaneity of a point on the worldline") {
    const InertialWorldline w(FourVector{1, 2, 3, 4}, FourVector{1.25, 0.75, 0, 0});
    const FourVector on = w.at(2.5).r;
    CHECK(simultaneity_root(w, on) == doctest::Approx(2.5).epsilon(1e-13));
    const auto g = classify_field_point(w, on, 0.1);
    CHECK(g.displacement.max_abs() <= 1e-12);
    CHECK(g.domain == FieldDomain::Internal);
}

TEST_CASE("property: boosted simultaneity gives an orthogonal displacement") {
    test_support::Rng rng(44);
    const CircularWorldline circ(0.3, 1.5);
    for (int i = 0; i < 200; ++i) {
        const InertialWorldline w(rng.four_vector(-1, 1), rng.velocity(2.0));
        const FourVector p = rng.four_vector(-5, 5);
        const double s1 = simultaneity_root(w, p);
        const Kinematics k = w.at(s1);
        CHECK(std::abs(dot(k.u, p - k.r)) <= 1e-10 * (1.0 + (p - k.r).euclidean_norm() * k.u[0]));

        const FourVector q = rng.four_vector(-2, 2);
        const double t1 = simultaneity_root(circ, q);
        const Kinematics c = circ.at(t1);
        CHECK(std::abs(dot(c.u, q - c.r)) <= 1e-10 * (1.0 + (q - c.r).euclidean_norm()));
    }
}

TEST_CASE("simultaneity beyond the stored history is not bracketed") {
    TrajectoryHistory h(0.0, FourVector{}, FourVector{1, 0, 0, 0});
    h.append({0.01, FourVector{0.01, 0, 0, 0}, FourVector{1, 0, 0, 0}, FourVector{}});
    try {
        (void)simultaneity_root(h, FourVector{5, 1, 0, 0});
        FAIL("expected RootNotBracketed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RootNotBracketed);
    }
}

TEST_CASE("field point retardation on a rest worldline") {
    const InertialWorldline w(FourVector{}, FourVector{1, 0, 0, 0});
    const double sigma = 0.5;
    SUBCASE("external point sits on the light cone") {
        const FourVector p{4, 1.0, 0, 0};
        const DelaySolution d = fieldpoint_retarded_root(w, p, 4.0, 0.0, sigma);
        CHECK(d.s_ret == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("internal point has delay sigma") {
        const FourVector p{4, 0.2, 0, 0};
        const DelaySolution d = fieldpoint_retarded_root(w, p, 4.0, sigma * sigma - 0.04, sigma);
        CHECK(d.s_ret == doctest::Approx(sigma).epsilon(1e-12));
    }
    SUBCASE("boundary point agrees on both branches") {
        const FourVector p{4, sigma, 0, 0};
        const double ext = fieldpoint_retarded_root(w, p, 4.0, 0.0, sigma).s_ret;
        const double in = fieldpoint_retarded_root(w, p, 4.0, sigma * sigma - sigma * sigma, sigma).s_ret;
        CHECK(ext == doctest::Approx(sigma).epsilon(1e-12));
        CHECK(in == ext);
    }
    SUBCASE("negative rho2 is rejected") {
        CHECK_THROWS_AS(fieldpoint_retarded_root(w, FourVector{4, 1, 0, 0}, 4.0, -1.0, sigma), Error);
    }
}

TEST_CASE("property: static classification matches the Euclidean distance test") {
    const InertialWorldline w(FourVector{}, FourVector{1, 0, 0, 0});
    test_support::Rng rng(45);
    const double sigma = 0.5;
    for (int i = 0; i < 1000; ++i) {
        const Vec3 x = rng.direction() * rng.uniform(0.0, 1.0);
        const auto g = classify_field_point(w, make_four_vector(rng.uniform(-3, 3), x), sigma);
        CHECK((g.domain == FieldDomain::Internal) == (norm3(x) < sigma));
    }
}

}  // TEST_SUITE
