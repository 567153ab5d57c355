#include "shellrr/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "shellrr/csv.hpp"
#include "shellrr/errors.hpp"

namespace shellrr {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigInvalid, msg); }

void require_object(const Json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) config_error(where + " must be an object");
    for (const auto& item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            config_error("unknown key '" + where + "." + item.key() + "'");
        }
    }
}

const Json& required(const Json& j, const std::string& where, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) config_error("missing key '" + where + "." + key + "'");
    return *it;
}

double number(const Json& j, const std::string& path) {
    if (!j.is_number()) config_error(path + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) config_error(path + " must be finite");
    return v;
}

double number_or(const Json& parent, const std::string& where, const char* key, double fallback) {
    const auto it = parent.find(key);
    return it == parent.end() ? fallback : number(*it, where + "." + key);
}

bool boolean_or(const Json& parent, const std::string& where, const char* key, bool fallback) {
    const auto it = parent.find(key);
    if (it == parent.end()) return fallback;
    if (!it->is_boolean()) config_error(where + "." + key + " must be true or false");
    return it->get<bool>();
}

template <std::size_t N>
std::array<double, N> numbers(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != N) config_error(path + " must be an array of " + std::to_string(N) + " numbers");
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = number(j[i], path + "[" + std::to_string(i) + "]");
    return out;
}

Vec3 vec3(const Json& j, const std::string& path) {
    const auto a = numbers<3>(j, path);
    return {a[0], a[1], a[2]};
}

Json to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }
Json to_json(const FourVector& v) { return Json::array({v[0], v[1], v[2], v[3]}); }

ShellParticle parse_particle(const Json& j) {
    const std::string w = "particle";
    require_object(j, w, {"rest_mass", "charge", "sigma", "mass_support"});
    MassSupport support = MassSupport::Shell;
    if (const auto it = j.find("mass_support"); it != j.end()) {
        if (!it->is_string()) config_error("particle.mass_support must be \"shell\" or \"point\"");
        const auto s = it->get<std::string>();
        if (s == "shell") {
            support = MassSupport::Shell;
        } else if (s == "point") {
            support = MassSupport::Point;
        } else {
            config_error("particle.mass_support must be \"shell\" or \"point\"");
        }
    }
    try {
        return ShellParticle(number(required(j, w, "rest_mass"), w + ".rest_mass"),
                             number(required(j, w, "charge"), w + ".charge"),
                             number(required(j, w, "sigma"), w + ".sigma"), support);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigInvalid) throw;
        config_error(std::string("particle: ") + e.what());
    }
}

ParticleState parse_initial(const Json& j) {
    const std::string w = "initial_state";
    require_object(j, w, {"s", "r", "u", "u_spatial"});
    ParticleState st;
    st.s = number_or(j, w, "s", 0.0);
    if (const auto it = j.find("r"); it != j.end()) st.r = FourVector(numbers<4>(*it, w + ".r"));
    const bool has_u = j.contains("u");
    const bool has_spatial = j.contains("u_spatial");
    if (has_u == has_spatial) config_error("initial_state needs exactly one of 'u' or 'u_spatial'");
    if (has_u) {
        st.u = FourVector(numbers<4>(j.at("u"), w + ".u"));
    } else {
        st.u = four_velocity_from_spatial(vec3(j.at("u_spatial"), w + ".u_spatial"));
    }
    return st;
}

ExternalFieldModel parse_field(const Json& j) {
    const std::string w = "field";
    if (!j.is_object()) config_error("field must be an object");
    const Json& type = required(j, w, "type");
    if (!type.is_string()) config_error("field.type must be a string");
    const auto t = type.get<std::string>();
    if (t == "zero") {
        require_object(j, w, {"type"});
        return ZeroField{};
    }
    if (t == "uniform_static") {
        require_object(j, w, {"type", "E", "B"});
        UniformStaticField f;
        if (j.contains("E")) f.electric = vec3(j.at("E"), w + ".E");
        if (j.contains("B")) f.magnetic = vec3(j.at("B"), w + ".B");
        return f;
    }
    if (t == "plane_wave") {
        require_object(j, w, {"type", "amplitude", "k", "polarization"});
        PlaneWaveField f;
        f.amplitude = number(required(j, w, "amplitude"), w + ".amplitude");
        f.wavevector = vec3(required(j, w, "k"), w + ".k");
        f.polarization = vec3(required(j, w, "polarization"), w + ".polarization");
        return f;
    }
    config_error("field.type must be one of zero, uniform_static, plane_wave (got '" + t + "')");
}

RampSchedule parse_ramp(const Json* j, const ParticleState& initial, const ShellParticle& particle) {
    RampSchedule r;
    r.s0 = initial.s;
    r.width = particle.sigma();
    if (j == nullptr) return r;
    const std::string w = "ramp";
    require_object(*j, w, {"s0", "width", "off_start", "off_width"});
    r.s0 = number_or(*j, w, "s0", r.s0);
    r.width = number_or(*j, w, "width", r.width);
    if (const auto it = j->find("off_start"); it != j->end() && !it->is_null()) {
        r.off_start = number(*it, w + ".off_start");
        r.off_width = number_or(*j, w, "off_width", particle.sigma());
    } else if (j->contains("off_width")) {
        config_error("ramp.off_width given without ramp.off_start");
    }
    return r;
}

IntegratorConfig parse_integrator(const Json& j) {
    const std::string w = "integrator";
    require_object(j, w, {"step", "kappa", "s_end", "renormalize_u", "drift_tolerance", "quad_order"});
    IntegratorConfig c;
    c.step = number(required(j, w, "step"), w + ".step");
    c.s_end = number(required(j, w, "s_end"), w + ".s_end");
    c.kappa = number_or(j, w, "kappa", c.kappa);
    c.renormalize_u = boolean_or(j, w, "renormalize_u", c.renormalize_u);
    c.drift_tolerance = number_or(j, w, "drift_tolerance", c.drift_tolerance);
    if (const auto it = j.find("quad_order"); it != j.end()) {
        if (!it->is_number_integer()) config_error("integrator.quad_order must be an integer");
        c.quad_order = it->get<int>();
    }
    return c;
}

OutputOptions parse_outputs(const Json* j) {
    OutputOptions o;
    if (j == nullptr) return o;
    const std::string w = "outputs";
    require_object(*j, w,
                   {"trajectory", "diagnostics", "summary", "comparison", "comparison_samples", "comparison_window"});
    o.trajectory = boolean_or(*j, w, "trajectory", o.trajectory);
    o.diagnostics = boolean_or(*j, w, "diagnostics", o.diagnostics);
    o.summary = boolean_or(*j, w, "summary", o.summary);
    o.comparison = boolean_or(*j, w, "comparison", o.comparison);
    if (const auto it = j->find("comparison_samples"); it != j->end()) {
        if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) {
            config_error("outputs.comparison_samples must be a positive integer");
        }
        o.comparison_samples = it->get<std::size_t>();
    }
    o.comparison_window = number_or(*j, w, "comparison_window", o.comparison_window);
    if (!(o.comparison_window > 0.0 && o.comparison_window <= 1.0)) {
        config_error("outputs.comparison_window must lie in (0, 1]");
    }
    return o;
}

}  // namespace

void validate_scenario(const Scenario& sc) {
    if (const StateReport rep = validate_state(sc.initial, 1e-10); !rep.valid) {
        config_error("initial_state invalid: " + rep.reason + " (tolerance 1e-10)");
    }
    if (!sc.initial.r.finite()) config_error("initial_state.r must be finite");
    try {
        validate_field_model(sc.field);
    } catch (const Error& e) {
        config_error(std::string("field: ") + e.what());
    }
    validate_ramp(sc.ramp);
    if (sc.ramp.s0 < sc.initial.s) {
        config_error("ramp.s0 precedes the initial proper time; the field must be off during the inertial prehistory");
    }
    validate_config(sc.integrator, sc.particle, sc.initial.s);
}

Scenario parse_scenario(std::string_view json_text) {
    Json root;
    try {
        root = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        config_error(std::string("scenario is not valid JSON: ") + e.what());
    }
    require_object(root, "scenario", {"name", "particle", "initial_state", "field", "ramp", "integrator", "outputs"});

    const ShellParticle particle = parse_particle(required(root, "scenario", "particle"));
    Scenario sc{.particle = particle, .initial = {}, .field = ZeroField{}, .ramp = {}, .integrator = {}, .outputs = {}};
    if (const auto it = root.find("name"); it != root.end()) {
        if (!it->is_string()) config_error("scenario.name must be a string");
        sc.name = it->get<std::string>();
    }
    try {
        sc.initial = parse_initial(required(root, "scenario", "initial_state"));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigInvalid) throw;
        config_error(std::string("initial_state: ") + e.what());
    }
    sc.field = root.contains("field") ? parse_field(root.at("field")) : ExternalFieldModel{ZeroField{}};
    sc.ramp = parse_ramp(root.contains("ramp") ? &root.at("ramp") : nullptr, sc.initial, particle);
    sc.integrator = parse_integrator(required(root, "scenario", "integrator"));
    sc.outputs = parse_outputs(root.contains("outputs") ? &root.at("outputs") : nullptr);
    validate_scenario(sc);
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) config_error("cannot open scenario file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& sc) {
    Json root;
    root["name"] = sc.name;
    root["particle"] = {{"rest_mass", sc.particle.rest_mass()},
                        {"charge", sc.particle.charge()},
                        {"sigma", sc.particle.sigma()},
                        {"mass_support", to_string(sc.particle.support())}};
    root["initial_state"] = {{"s", sc.initial.s}, {"r", to_json(sc.initial.r)}, {"u", to_json(sc.initial.u)}};
    if (std::holds_alternative<ZeroField>(sc.field)) {
        root["field"] = {{"type", "zero"}};
    } else if (const auto* f = std::get_if<UniformStaticField>(&sc.field)) {
        root["field"] = {{"type", "uniform_static"}, {"E", to_json(f->electric)}, {"B", to_json(f->magnetic)}};
    } else if (const auto* w = std::get_if<PlaneWaveField>(&sc.field)) {
        root["field"] = {{"type", "plane_wave"},
                         {"amplitude", w->amplitude},
                         {"k", to_json(w->wavevector)},
                         {"polarization", to_json(w->polarization)}};
    }
    Json ramp = {{"s0", sc.ramp.s0}, {"width", sc.ramp.width}};
    if (sc.ramp.off_start) {
        ramp["off_start"] = *sc.ramp.off_start;
        ramp["off_width"] = sc.ramp.off_width;
    }
    root["ramp"] = ramp;
    root["integrator"] = {{"step", sc.integrator.step},
                          {"kappa", sc.integrator.kappa},
                          {"s_end", sc.integrator.s_end},
                          {"renormalize_u", sc.integrator.renormalize_u},
                          {"drift_tolerance", sc.integrator.drift_tolerance},
                          {"quad_order", sc.integrator.quad_order}};
    root["outputs"] = {{"trajectory", sc.outputs.trajectory},
                       {"diagnostics", sc.outputs.diagnostics},
                       {"summary", sc.outputs.summary},
                       {"comparison", sc.outputs.comparison},
                       {"comparison_samples", sc.outputs.comparison_samples},
                       {"comparison_window", sc.outputs.comparison_window}};
    return root.dump(2) + "\n";
}

RunResult integrate(const Scenario& scenario) {
    validate_scenario(scenario);
    return integrate(scenario.particle, scenario.initial, scenario.field, scenario.ramp, scenario.integrator);
}

namespace {

std::string vec_text(const FourVector& v) {
    return format_double(v[0]) + " " + format_double(v[1]) + " " + format_double(v[2]) + " " + format_double(v[3]);
}

std::string field_text(const ExternalFieldModel& f) {
    if (std::holds_alternative<ZeroField>(f)) return "zero";
    if (const auto* u = std::get_if<UniformStaticField>(&f)) {
        return "uniform_static E=(" + format_double(u->electric.x) + " " + format_double(u->electric.y) + " " +
               format_double(u->electric.z) + ") B=(" + format_double(u->magnetic.x) + " " +
               format_double(u->magnetic.y) + " " + format_double(u->magnetic.z) + ")";
    }
    const auto& w = std::get<PlaneWaveField>(f);
    return "plane_wave amplitude=" + format_double(w.amplitude) + " k=(" + format_double(w.wavevector.x) + " " +
           format_double(w.wavevector.y) + " " + format_double(w.wavevector.z) + ")";
}

}  // namespace

void write_run_summary(const Scenario& sc, const RunSummary& s, std::ostream& out) {
    auto kv = [&out](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
    kv("scenario.name", sc.name);
    kv("particle.rest_mass", format_double(sc.particle.rest_mass()));
    kv("particle.charge", format_double(sc.particle.charge()));
    kv("particle.sigma", format_double(sc.particle.sigma()));
    kv("particle.mass_support", to_string(sc.particle.support()));
    kv("initial.s", format_double(sc.initial.s));
    kv("initial.r", vec_text(sc.initial.r));
    kv("initial.u", vec_text(sc.initial.u));
    kv("field", field_text(sc.field));
    kv("ramp.s0", format_double(sc.ramp.s0));
    kv("ramp.width", format_double(sc.ramp.width));
    kv("ramp.off_start", sc.ramp.off_start ? format_double(*sc.ramp.off_start) : "none");
    kv("ramp.hard_edge", s.hard_ramp ? "true" : "false");
    kv("integrator.step", format_double(sc.integrator.step));
    kv("integrator.kappa", format_double(sc.integrator.kappa));
    kv("integrator.s_end", format_double(sc.integrator.s_end));
    kv("integrator.renormalize_u", sc.integrator.renormalize_u ? "true" : "false");
    kv("integrator.drift_tolerance", format_double(sc.integrator.drift_tolerance));
    kv("integrator.quad_order", std::to_string(sc.integrator.quad_order));
    kv("status", to_string(s.status));
    kv("message", s.message.empty() ? "none" : s.message);
    kv("steps", std::to_string(s.steps));
    kv("final.s", format_double(s.final_state.s));
    kv("final.r", vec_text(s.final_state.r));
    kv("final.u", vec_text(s.final_state.u));
    kv("final.u_norm_residual", format_double(s.final_u_norm_residual));
    kv("max.u_norm_residual", format_double(s.max_u_norm_residual));
    kv("min.s_ret", format_double(s.min_s_ret));
    kv("max.s_ret", format_double(s.max_s_ret));
    kv("max.delay_residual", format_double(s.max_delay_residual));
    kv("max.self_force_norm", format_double(s.max_self_force_norm));
    kv("max.ext_force_norm", format_double(s.max_ext_force_norm));
    kv("max.acceleration_norm", format_double(s.max_acceleration_norm));
    kv("max.gamma", format_double(s.max_gamma));
    kv("renormalizations", std::to_string(s.renormalizations));
    kv("wall_seconds", format_double(s.wall_seconds));
}

}  // namespace shellrr
