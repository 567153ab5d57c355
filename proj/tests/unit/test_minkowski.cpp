#include <doctest.h>

#include "shellrr/errors.hpp"
#include "shellrr/minkowski.hpp"
#include "test_support.hpp"

using namespace shellrr;

TEST_SUITE("minkowski") {

TEST_CASE("dot product examples") {
    CHECK(dot(FourVector{1, 0, 0, 0}, FourVector{1, 0, 0, 0}) == 1.0);
    CHECK(dot(FourVector{1, 1, 0, 0}, FourVector{1, 1, 0, 0}) == 0.0);
    CHECK(dot(FourVector{2, 1, 1, 1}, FourVector{3, 0, 2, 1}) == 3.0);
}

TEST_CASE("index position is explicit") {
    const FourVector a{2, 1, -3, 0.5};
    const FourVector b{1.5, -2, 4, 7};
    CHECK(lower(a) == CoVector{2, -1, 3, -0.5});
    CHECK(raise(lower(a)) == a);
    CHECK(contract(lower(a), b) == doctest::Approx(dot(a, b)));
    CHECK(dot(lower(a), lower(b)) == doctest::Approx(dot(a, b)));
}

TEST_CASE("four velocities are unit timelike") {
    const FourVector u = four_velocity_from_3velocity({0.6, 0.0, 0.0});
    CHECK(u[0] == doctest::Approx(1.25));
    CHECK(u[1] == doctest::Approx(0.75));
    CHECK(std::abs(dot(u, u) - 1.0) < 1e-15);
    CHECK_THROWS_AS(four_velocity_from_3velocity({0.8, 0.6, 0.0}), Error);
    const FourVector w = four_velocity_from_spatial({3.0, -4.0, 12.0});
    CHECK(w[0] == doctest::Approx(std::sqrt(170.0)));
}

TEST_CASE("boost of the rest velocity is the identity") {
    const LorentzBoost b = boost_from_velocity({1, 0, 0, 0});
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) CHECK(b.matrix()[i][j] == (i == j ? 1.0 : 0.0));
    }
    const FourVector v{0.3, -2.0, 5.0, 1.0};
    CHECK(apply(b, v) == v);
}

TEST_CASE("standard x boost at beta 0.6") {
    const FourVector u{1.25, 0.75, 0, 0};
    const LorentzBoost b = boost_from_velocity(u);
    const auto& m = b.matrix();
    CHECK(m[0][0] == doctest::Approx(1.25));
    CHECK(m[0][1] == doctest::Approx(-0.75));
    CHECK(m[1][0] == doctest::Approx(-0.75));
    CHECK(m[1][1] == doctest::Approx(1.25));
    CHECK(m[2][2] == 1.0);
    CHECK(m[3][3] == 1.0);
    CHECK((apply(b, u) - FourVector{1, 0, 0, 0}).max_abs() <= 1e-10);
    CHECK(std::abs(b.determinant() - 1.0) <= 1e-10);
    const FourVector null{1, 1, 0, 0};
    const FourVector image = apply(b, null);
    CHECK(std::abs(dot(image, image)) <= 1e-12);
    CHECK(image[0] == doctest::Approx(0.5));
}

TEST_CASE("non timelike velocities are rejected") {
    auto code_of = [](const FourVector& u) {
        try {
            (void)boost_from_velocity(u);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::IoFailure;
    };
    CHECK(code_of({1, 1, 0, 0}) == ErrorCode::NonTimelikeVelocity);
    CHECK(code_of({1.1, 0, 0, 0}) == ErrorCode::NonTimelikeVelocity);
    CHECK(code_of({-1, 0, 0, 0}) == ErrorCode::NonTimelikeVelocity);
    CHECK(code_of({1.25, 0.75, 0, 1e-4}) == ErrorCode::NonTimelikeVelocity);
}

TEST_CASE("inverse composition returns the input") {
    test_support::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const LorentzBoost b = boost_from_velocity(rng.velocity(3.0));
        const FourVector v = rng.four_vector(-10, 10);
        CHECK((b.inverse().apply(b.apply(v)) - v).max_abs() <= 1e-10 * (1.0 + v.max_abs()) * b.matrix()[0][0]);
        const LorentzBoost id = b.compose(b.inverse());
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                CHECK(std::abs(id.matrix()[r][c] - (r == c ? 1.0 : 0.0)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("property: boosts preserve the metric and volume") {
    test_support::Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        const LorentzBoost b = boost_from_velocity(rng.velocity(2.0));
        const FourVector a = rng.four_vector(-10, 10);
        const FourVector c = rng.four_vector(-10, 10);
        const double before = dot(a, c);
        CHECK(std::abs(dot(b.apply(a), b.apply(c)) - before) <= 1e-9 * (1.0 + std::abs(before)));
        CHECK(std::abs(std::abs(b.determinant()) - 1.0) <= 1e-10);
        CHECK(std::abs(determinant4(b.matrix()) - b.determinant()) <= 1e-10);
        CHECK(b.matrix()[0][0] >= 1.0);

        // Lambda^T eta Lambda = eta
        const auto& m = b.matrix();
        const double eta[4] = {1, -1, -1, -1};
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t s = 0; s < 4; ++s) {
                double sum = 0.0;
                for (std::size_t k = 0; k < 4; ++k) sum += m[k][r] * eta[k] * m[k][s];
                CHECK(std::abs(sum - (r == s ? eta[r] : 0.0)) <= 1e-12 * m[0][0] * m[0][0]);
            }
        }
    }
}

TEST_CASE("covectors transform so that contractions are invariant") {
    test_support::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const LorentzBoost b = boost_from_velocity(rng.velocity());
        const FourVector v = rng.four_vector(-3, 3);
        const CoVector w = lower(rng.four_vector(-3, 3));
        CHECK(contract(b.apply(w), b.apply(v)) == doctest::Approx(contract(w, v)).epsilon(1e-10));
        CHECK((b.apply(w) - lower(b.apply(raise(w)))).max_abs() <= 1e-10 * b.matrix()[0][0] * (1.0 + w.max_abs()));
    }
}

TEST_CASE("faraday tensor storage and field accessors") {
    const Vec3 e{1, -2, 3};
    const Vec3 bfield{0.5, 4, -6};
    const FaradayTensor f = FaradayTensor::from_fields(e, bfield);
    CHECK(f.electric() == e);
    CHECK(f.magnetic() == bfield);
    CHECK(f(0, 1) == 1.0);
    CHECK(f(1, 2) == 6.0);
    CHECK(f(1, 3) == 4.0);
    CHECK(f(2, 3) == -0.5);
    const auto m = f.matrix();
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(m[i][i] == 0.0);
        for (std::size_t j = 0; j < 4; ++j) CHECK(m[i][j] == -m[j][i]);
    }
}

TEST_CASE("antisymmetrize and wedge") {
    std::array<std::array<double, 4>, 4> m{};
    double k = 1.0;
    for (auto& row : m) {
        for (auto& v : row) v = (k += 1.37);
    }
    const FaradayTensor f = FaradayTensor::antisymmetrize(m);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) CHECK(f(i, j) == doctest::Approx(0.5 * (m[i][j] - m[j][i])));
    }
    const CoVector a{1, 2, 3, 4};
    const CoVector b{-1, 0.5, 2, 0};
    const FaradayTensor w = FaradayTensor::wedge(a, b);
    CHECK(w(0, 1) == a[0] * b[1] - a[1] * b[0]);
    CHECK(w(2, 3) == a[2] * b[3] - a[3] * b[2]);
    CHECK(FaradayTensor::wedge(a, a).is_zero());
}

TEST_CASE("property: force from an antisymmetric tensor is orthogonal to u") {
    test_support::Rng rng(14);
    for (int i = 0; i < 500; ++i) {
        const FaradayTensor f = FaradayTensor::from_fields(rng.direction() * rng.uniform(0, 10),
                                                           rng.direction() * rng.uniform(0, 10));
        const FourVector u = rng.velocity(3.0);
        const CoVector force = f.contract(u);
        CHECK(std::abs(contract(force, u)) <= 1e-12 * force.euclidean_norm() * u.euclidean_norm());
    }
}

TEST_CASE("property: tensor boosts preserve the field invariants") {
    test_support::Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        const FaradayTensor f = FaradayTensor::from_fields(rng.direction() * rng.uniform(0, 5),
                                                           rng.direction() * rng.uniform(0, 5));
        const LorentzBoost b = boost_from_velocity(rng.velocity(1.5));
        const FaradayTensor g = b.apply(f);
        const double scale = 1.0 + f.max_abs() * f.max_abs() * std::pow(b.matrix()[0][0], 4);
        const double inv1 = dot3(f.electric(), f.electric()) - dot3(f.magnetic(), f.magnetic());
        const double inv1b = dot3(g.electric(), g.electric()) - dot3(g.magnetic(), g.magnetic());
        CHECK(std::abs(inv1 - inv1b) <= 1e-11 * scale);
        CHECK(std::abs(dot3(f.electric(), f.magnetic()) - dot3(g.electric(), g.magnetic())) <= 1e-11 * scale);

        // (Lambda F)(Lambda u) = Lambda (F u)
        const FourVector u = rng.velocity();
        const CoVector lhs = g.contract(b.apply(u));
        const CoVector rhs = b.apply(f.contract(u));
        CHECK((lhs - rhs).max_abs() <= 1e-10 * scale);
    }
}

TEST_CASE("boost along E leaves the parallel component") {
    const FaradayTensor f = FaradayTensor::from_fields({2.0, 0.0, 0.0}, {});
    const FaradayTensor g = boost_from_velocity({1.25, 0.75, 0, 0}).apply(f);
    CHECK(g.electric().x == doctest::Approx(2.0));
    CHECK(g.magnetic() == Vec3{});
}

TEST_CASE("non-finite detection") {
    CHECK_FALSE(FourVector(1, std::nan(""), 0, 0).finite());
    CHECK(FourVector(1, 2, 3, 4).finite());
    CHECK_FALSE(FaradayTensor::from_fields({INFINITY, 0, 0}, {}).finite());
}

}  // TEST_SUITE
