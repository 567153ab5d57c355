#include <doctest.h>

#include <sstream>
#include <string>

#include "shellrr/errors.hpp"
#include "shellrr/scenario.hpp"
#include "test_support.hpp"

using namespace shellrr;

namespace {

const char* const kMinimal = R"({
  "particle": {"rest_mass": 1, "charge": 0.1, "sigma": 0.1},
  "initial_state": {"r": [0, 0, 0, 0], "u_spatial": [0.75, 0, 0]},
  "integrator": {"step": 0.01, "s_end": 1}
})";

std::string error_of(const std::string& text) {
    try {
        (void)parse_scenario(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConfigInvalid);
        return e.what();
    }
    return {};
}

std::string with(const std::string& from, const std::string& to) {
    std::string text = kMinimal;
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    return text;
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("minimal document fills in defaults") {
    const Scenario sc = parse_scenario(kMinimal);
    CHECK(sc.name == "scenario");
    CHECK(sc.particle == ShellParticle(1.0, 0.1, 0.1));
    CHECK(sc.initial.s == 0.0);
    CHECK(sc.initial.u == FourVector{1.25, 0.75, 0, 0});
    CHECK(std::holds_alternative<ZeroField>(sc.field));
    CHECK(sc.ramp.s0 == 0.0);
    CHECK(sc.ramp.width == 0.1);
    CHECK_FALSE(sc.ramp.off_start.has_value());
    CHECK(sc.integrator.kappa == 2.0);
    CHECK(sc.outputs == OutputOptions{});
}

TEST_CASE("full document") {
    const Scenario sc = parse_scenario(R"({
      "name": "full",
      "particle": {"rest_mass": 2, "charge": -0.5, "sigma": 0.2, "mass_support": "point"},
      "initial_state": {"s": 1, "r": [1, 2, 3, 4], "u": [1, 0, 0, 0]},
      "field": {"type": "plane_wave", "amplitude": 0.3, "k": [0, 0, 2], "polarization": [1, 0, 0]},
      "ramp": {"s0": 2, "width": 0.5, "off_start": 4, "off_width": 0.25},
      "integrator": {"step": 0.02, "s_end": 5, "kappa": 4, "renormalize_u": true,
                     "drift_tolerance": 1e-6, "quad_order": 12},
      "outputs": {"trajectory": false, "comparison": true, "comparison_samples": 7, "comparison_window": 0.25}
    })");
    CHECK(sc.name == "full");
    CHECK(sc.particle.is_lorentzian());
    CHECK(sc.initial.r == FourVector{1, 2, 3, 4});
    const auto& w = std::get<PlaneWaveField>(sc.field);
    CHECK(w.amplitude == 0.3);
    CHECK(*sc.ramp.off_start == 4.0);
    CHECK(sc.ramp.off_width == 0.25);
    CHECK(sc.integrator.quad_order == 12);
    CHECK(sc.integrator.renormalize_u);
    CHECK_FALSE(sc.outputs.trajectory);
    CHECK(sc.outputs.comparison_samples == 7);
}

TEST_CASE("random scenarios survive a serialize/parse round trip") {
    test_support::Rng rng(20261015);
    for (int trial = 0; trial < 100; ++trial) {
        Scenario sc{.name = "trial" + std::to_string(trial),
                    .particle = ShellParticle(rng.uniform(0.1, 10.0), rng.uniform(-1.0, 1.0) + 2.0,
                                              rng.uniform(0.01, 1.0),
                                              trial % 2 ? MassSupport::Shell : MassSupport::Point),
                    .initial = {rng.uniform(-1.0, 1.0), rng.four_vector(-10.0, 10.0), rng.velocity(2.0)},
                    .field = ZeroField{},
                    .ramp = {},
                    .integrator = {},
                    .outputs = {}};
        if (std::abs(dot(sc.initial.u, sc.initial.u) - 1.0) > 1e-12) continue;
        switch (trial % 3) {
            case 0: sc.field = ZeroField{}; break;
            case 1:
                sc.field = UniformStaticField{rng.direction() * rng.uniform(0.0, 5.0), rng.direction() * 3.0};
                break;
            default: sc.field = PlaneWaveField{rng.uniform(0.1, 2.0), {0, 0, rng.uniform(0.5, 3.0)}, {0, 1, 0}}; break;
        }
        sc.ramp = {sc.initial.s + rng.uniform(0.0, 1.0), rng.uniform(0.0, 0.5), std::nullopt, 0.0};
        if (trial % 4 == 0) {
            sc.ramp.off_start = sc.ramp.s0 + sc.ramp.width + 1.0;
            sc.ramp.off_width = 0.3;
        }
        sc.integrator.step = sc.particle.sigma() / rng.uniform(2.0, 10.0);
        sc.integrator.s_end = sc.initial.s + rng.uniform(0.5, 5.0);
        sc.integrator.quad_order = 4 + trial % 8;
        sc.outputs.comparison = trial % 2 == 0;
        sc.outputs.comparison_window = rng.uniform(0.1, 1.0);
        validate_scenario(sc);
        const std::string text = serialize_scenario(sc);
        const Scenario back = parse_scenario(text);
        CHECK(back == sc);
        CHECK(serialize_scenario(back) == text);
    }
}

TEST_CASE("unknown keys are rejected at every level") {
    CHECK(error_of(with("\"integrator\"", "\"extra\": 1, \"integrator\"")).find("unknown key 'scenario.extra'") !=
          std::string::npos);
    CHECK(error_of(with("\"sigma\": 0.1", "\"sigma\": 0.1, \"spin\": 0")).find("particle.spin") != std::string::npos);
    CHECK(error_of(with("\"u_spatial\"", "\"v\": 1, \"u_spatial\"")).find("initial_state.v") != std::string::npos);
    CHECK(error_of(with("\"step\"", "\"method\": \"rk4\", \"step\"")).find("integrator.method") != std::string::npos);
    CHECK(error_of(with("\"integrator\"", "\"field\": {\"type\": \"zero\", \"E\": [0,0,0]}, \"integrator\""))
              .find("field.E") != std::string::npos);
    CHECK(error_of(with("\"integrator\"", "\"ramp\": {\"shape\": 1}, \"integrator\"")).find("ramp.shape") !=
          std::string::npos);
    CHECK(error_of(with("\"integrator\"", "\"outputs\": {\"plots\": true}, \"integrator\"")).find("outputs.plots") !=
          std::string::npos);
}

TEST_CASE("missing and malformed values") {
    CHECK_FALSE(error_of(R"({"particle": {"rest_mass": 1, "charge": 0.1, "sigma": 0.1}})").empty());
    CHECK_FALSE(error_of(with("\"sigma\": 0.1", "\"sigma\": \"big\"")).empty());
    CHECK_FALSE(error_of(with("\"sigma\": 0.1", "\"sigma\": 0")).empty());
    CHECK(error_of("{ not json").find("not valid JSON") != std::string::npos);
    CHECK(error_of(with("\"sigma\": 0.1", "\"sigma\": 0.1, \"mass_support\": \"cloud\"")).find("mass_support") !=
          std::string::npos);
    CHECK(error_of(with("\"integrator\"", "\"field\": {\"type\": \"dipole\"}, \"integrator\"")).find("field.type") !=
          std::string::npos);
    CHECK(error_of(with("\"u_spatial\": [0.75, 0, 0]", "\"u_spatial\": [0.75, 0, 0], \"u\": [1, 0, 0, 0]"))
              .find("exactly one") != std::string::npos);
    CHECK(error_of(with("\"u_spatial\": [0.75, 0, 0]", "\"u\": [1, 0.5, 0, 0]")).find("initial_state") !=
          std::string::npos);
    CHECK_FALSE(error_of(with("\"s_end\": 1", "\"s_end\": 1, \"quad_order\": 2.5")).empty());
    CHECK_FALSE(error_of(with("\"integrator\"", "\"outputs\": {\"comparison_window\": 0}, \"integrator\"")).empty());
    CHECK_FALSE(error_of(with("\"integrator\"", "\"outputs\": {\"comparison_samples\": 0}, \"integrator\"")).empty());
    CHECK_FALSE(error_of(with("\"integrator\"",
                              "\"field\": {\"type\": \"plane_wave\", \"amplitude\": 1, \"k\": [0,0,1], "
                              "\"polarization\": [0,0,1]}, \"integrator\""))
                     .empty());
}

TEST_CASE("step bound violation names the bound") {
    CHECK(error_of(with("\"step\": 0.01", "\"step\": 0.08")).find("step bound") != std::string::npos);
}

TEST_CASE("ramp may not start before the initial proper time") {
    CHECK(error_of(with("\"integrator\"", "\"ramp\": {\"s0\": -1}, \"integrator\"")).find("ramp.s0") !=
          std::string::npos);
    CHECK_FALSE(error_of(with("\"integrator\"", "\"ramp\": {\"off_width\": 1}, \"integrator\"")).empty());
    CHECK_FALSE(error_of(with("\"integrator\"", "\"ramp\": {\"width\": 1, \"off_start\": 0.5}, \"integrator\"")).empty());
}

TEST_CASE("summary lists the scenario and the run results") {
    const Scenario sc = parse_scenario(kMinimal);
    const RunResult run = integrate(sc);
    std::ostringstream os;
    write_run_summary(sc, run.summary, os);
    const std::string text = os.str();
    for (const char* key : {"scenario.name = scenario\n", "particle.sigma = 0.1\n", "status = completed\n",
                            "steps = 100\n", "final.s = 1\n", "max.u_norm_residual = 0\n", "renormalizations = 0\n",
                            "wall_seconds = "}) {
        CHECK_MESSAGE(text.find(key) != std::string::npos, key);
    }
}

}  // TEST_SUITE
