#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "shellrr/asymptotics.hpp"
#include "shellrr/csv.hpp"
#include "shellrr/errors.hpp"
#include "shellrr/scenario.hpp"
#include "shellrr/selffield.hpp"
#include "shellrr/validation.hpp"

namespace shellrr::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(RunStatus status) {
    switch (status) {
        case RunStatus::Completed: return kOk;
        case RunStatus::DriftExceeded: return kDriftExceeded;
        case RunStatus::StepTooLarge: return kStepTooLarge;
        case RunStatus::NumericalFailure: return kNumericalFailure;
    }
    return kNumericalFailure;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ConfigInvalid: return kConfigInvalid;
        case ErrorCode::IoFailure: return kIoFailure;
        case ErrorCode::DriftExceeded: return kDriftExceeded;
        case ErrorCode::StepTooLarge:
        case ErrorCode::QueryBeyondHistory: return kStepTooLarge;
        default: return kNumericalFailure;
    }
}

/// Runs `body`, reporting shellrr errors on stderr and mapping them to exit codes.
int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        std::cerr << "shellrr: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "shellrr: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
    writer(out);
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "write to '" + path.string() + "' failed");
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create directory '" + dir.string() + "': " + ec.message());
}

ComparisonReport comparison_for(const Scenario& sc, const RunResult& run, std::size_t samples, double window) {
    const auto s = tail_samples(run.history, samples, window);
    return compare_exact_vs_lad(run.history, s, sc.particle);
}

struct Artifacts {
    RunResult run;
    std::optional<ComparisonReport> comparison;
};

Artifacts run_and_write(const Scenario& sc, const fs::path& out) {
    ensure_directory(out);
    Artifacts a{integrate(sc), std::nullopt};
    if (sc.outputs.trajectory) {
        write_file(out / "trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(a.run.history, os); });
    }
    if (sc.outputs.diagnostics) {
        write_file(out / "diagnostics.csv", [&](std::ostream& os) { write_diagnostics_csv(a.run.diagnostics, os); });
    }
    if (sc.outputs.comparison && a.run.summary.status == RunStatus::Completed) {
        a.comparison = comparison_for(sc, a.run, sc.outputs.comparison_samples, sc.outputs.comparison_window);
        write_file(out / "lad_comparison.csv", [&](std::ostream& os) { write_comparison_csv(*a.comparison, os); });
    }
    if (sc.outputs.summary) {
        write_file(out / "summary.txt", [&](std::ostream& os) { write_run_summary(sc, a.run.summary, os); });
    }
    return a;
}

void print_summary(const RunSummary& s) {
    std::cout << "status " << to_string(s.status) << ", steps " << s.steps << ", s_end "
              << format_double(s.final_state.s) << ", max |u.u-1| " << format_double(s.max_u_norm_residual) << '\n';
    if (!s.message.empty()) std::cout << "  " << s.message << '\n';
}

}  // namespace

Axis parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    auto num = [&](const std::string& t) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t.size() || !std::isfinite(v)) {
            throw Error(ErrorCode::ConfigInvalid, "grid axis '" + text + "' is not lo,hi,count");
        }
        return v;
    };
    if (parts.size() == 1) {
        const double v = num(parts[0]);
        return {v, v, 1};
    }
    if (parts.size() != 3) throw Error(ErrorCode::ConfigInvalid, "grid axis '" + text + "' is not lo,hi,count");
    const double count = num(parts[2]);
    if (count < 1.0 || count != std::floor(count) || count > 1e6) {
        throw Error(ErrorCode::ConfigInvalid, "grid axis '" + text + "' needs a positive integer count");
    }
    return {num(parts[0]), num(parts[1]), static_cast<int>(count)};
}

int run_command(const RunOptions& o) {
    return guarded([&]() -> int {
        const Scenario sc = load_scenario(o.scenario);
        const Artifacts a = run_and_write(sc, o.out);
        if (!o.quiet) print_summary(a.run.summary);
        if (a.run.summary.status != RunStatus::Completed) std::cerr << "shellrr: " << a.run.summary.message << '\n';
        return exit_code_for(a.run.summary.status);
    });
}

int validate_command(const ValidateOptions& o) {
    return guarded([&]() -> int {
        ValidationOptions vo;
        if (o.mutation == "flip-sign") {
            vo.flip_self_field_sign = true;
        } else if (o.mutation == "history-gap") {
            vo.inject_history_gap = true;
        } else if (o.mutation != "none") {
            throw Error(ErrorCode::ConfigInvalid, "unknown mutation '" + o.mutation + "'");
        }
        const auto checks = run_validation(vo);
        if (!o.quiet) {
            for (const auto& c : checks) {
                std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  measured " << format_double(c.measured)
                          << "  tolerance " << format_double(c.tolerance);
                if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
                std::cout << '\n';
            }
        }
        if (o.out) {
            ensure_directory(*o.out);
            write_file(*o.out / "validation.csv", [&](std::ostream& os) { write_validation_table(checks, os); });
        }
        return all_passed(checks) ? kOk : kValidationFailed;
    });
}

int field_map_command(const FieldMapOptions& o) {
    return guarded([&]() -> int {
        const Scenario sc = load_scenario(o.run.scenario);
        const RunResult run = integrate(sc);
        if (run.summary.status != RunStatus::Completed && !o.run.quiet) {
            std::cerr << "shellrr: run stopped early (" << run.summary.message << "); mapping the stored history\n";
        }
        auto coord = [](const Axis& a, int i) {
            return a.count == 1 ? a.lo : a.lo + (a.hi - a.lo) * static_cast<double>(i) / (a.count - 1);
        };
        std::size_t failed = 0;
        std::size_t total = 0;
        ensure_directory(o.run.out);
        write_file(o.run.out / "field_map.csv", [&](std::ostream& os) {
            os << "ct,x,y,z,A0,A1,A2,A3,branch\n";
            for (int i = 0; i < o.x.count; ++i) {
                for (int j = 0; j < o.y.count; ++j) {
                    for (int k = 0; k < o.z.count; ++k) {
                        const FourVector p{o.ct, coord(o.x, i), coord(o.y, j), coord(o.z, k)};
                        CsvRow row(os);
                        row << p[0] << p[1] << p[2] << p[3];
                        ++total;
                        try {
                            const SelfPotential sp = self_potential(run.history, p, sc.particle);
                            row << sp.potential[0] << sp.potential[1] << sp.potential[2] << sp.potential[3]
                                << (sp.geometry.domain == FieldDomain::Internal ? "int" : "ext");
                        } catch (const Error&) {
                            const double nan = std::nan("");
                            row << nan << nan << nan << nan << "fail";
                            ++failed;
                        }
                    }
                }
            }
        });
        if (!o.run.quiet) std::cout << total << " points, " << failed << " flagged\n";
        return kOk;
    });
}

namespace {

Scenario with_parameter(Scenario sc, const std::string& parameter, double value) {
    if (parameter == "sigma") {
        sc.particle = ShellParticle(sc.particle.rest_mass(), sc.particle.charge(), value, sc.particle.support());
    } else if (parameter == "h") {
        sc.integrator.step = value;
    } else {
        sc.field = scaled(sc.field, value);
    }
    validate_scenario(sc);
    return sc;
}

struct SweepRow {
    double value = 0.0;
    std::string status;
    std::string message;
    RunSummary summary;
    std::optional<ComparisonReport> comparison;
};

SweepRow sweep_one(const Scenario& base, const std::string& parameter, double value, const fs::path& dir) {
    SweepRow row;
    row.value = value;
    try {
        const Scenario sc = with_parameter(base, parameter, value);
        Artifacts a = run_and_write(sc, dir);
        row.summary = a.run.summary;
        row.status = to_string(a.run.summary.status);
        row.message = a.run.summary.message;
        row.comparison = std::move(a.comparison);
    } catch (const Error& e) {
        row.status = std::string(to_string(e.code()));
        row.message = e.what();
    }
    return row;
}

double state_distance(const ParticleState& a, const ParticleState& b) {
    const FourVector dr = a.r - b.r;
    const FourVector du = a.u - b.u;
    return std::sqrt(dr[0] * dr[0] + dr[1] * dr[1] + dr[2] * dr[2] + dr[3] * dr[3] + du[0] * du[0] +
                     du[1] * du[1] + du[2] * du[2] + du[3] * du[3]);
}

}  // namespace

int sweep_command(const SweepOptions& o) {
    return guarded([&]() -> int {
        if (o.parameter != "sigma" && o.parameter != "h" && o.parameter != "amplitude") {
            throw Error(ErrorCode::ConfigInvalid, "sweep parameter must be sigma, h or amplitude");
        }
        if (o.values.empty()) throw Error(ErrorCode::ConfigInvalid, "sweep value list is empty");
        Scenario base = load_scenario(o.run.scenario);
        if (o.parameter == "sigma") base.outputs.comparison = true;
        ensure_directory(o.run.out);

        std::vector<std::future<SweepRow>> jobs;
        for (std::size_t i = 0; i < o.values.size(); ++i) {
            const fs::path dir = o.run.out / ("run_" + std::to_string(i));
            jobs.push_back(std::async(std::launch::async, sweep_one, std::cref(base), std::cref(o.parameter),
                                      o.values[i], dir));
        }
        std::vector<SweepRow> rows;
        for (auto& j : jobs) rows.push_back(j.get());

        bool all_ok = true;
        write_file(o.run.out / "aggregate.csv", [&](std::ostream& os) {
            os << "index,value,status,steps,final_s,r0,r1,r2,r3,u0,u1,u2,u3,max_u_norm_residual,"
                  "mean_lad_deviation,max_lad_deviation,mean_epsilon,message\n";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                const auto& f = r.summary.final_state;
                const double nan = std::nan("");
                CsvRow row(os);
                row << static_cast<unsigned long>(i) << r.value << r.status << static_cast<unsigned long>(r.summary.steps)
                    << f.s << f.r[0] << f.r[1] << f.r[2] << f.r[3] << f.u[0] << f.u[1] << f.u[2] << f.u[3]
                    << r.summary.max_u_norm_residual << (r.comparison ? r.comparison->mean_deviation : nan)
                    << (r.comparison ? r.comparison->max_deviation : nan)
                    << (r.comparison ? r.comparison->mean_epsilon : nan) << ('"' + r.message + '"');
                all_ok = all_ok && r.status == to_string(RunStatus::Completed);
            }
        });

        std::ostringstream summary;
        summary << "parameter = " << o.parameter << '\n' << "runs = " << rows.size() << '\n';
        if (o.parameter == "sigma") {
            std::vector<double> x;
            std::vector<double> y;
            for (const auto& r : rows) {
                if (r.comparison) {
                    x.push_back(r.value);
                    y.push_back(r.comparison->mean_deviation);
                }
            }
            bool monotone = true;
            for (std::size_t i = 1; i < x.size(); ++i) {
                monotone = monotone && ((x[i] < x[i - 1]) == (y[i] < y[i - 1]));
            }
            summary << "lad_fit_points = " << x.size() << '\n';
            if (x.size() >= 2) {
                summary << "lad_deviation_exponent = " << format_double(fit_power_law_exponent(x, y)) << '\n';
                summary << "lad_deviation_monotone = " << (monotone ? "true" : "false") << '\n';
            }
        }
        if (o.parameter == "h" && rows.size() == 3 && all_ok) {
            const double e12 = state_distance(rows[0].summary.final_state, rows[1].summary.final_state);
            const double e23 = state_distance(rows[1].summary.final_state, rows[2].summary.final_state);
            const double order = std::log(e12 / e23) / std::log(rows[0].value / rows[1].value);
            summary << "convergence_order = " << format_double(order) << '\n';
        }
        write_file(o.run.out / "sweep_summary.txt", [&](std::ostream& os) { os << summary.str(); });
        if (!o.run.quiet) std::cout << summary.str();
        return all_ok ? kOk : kValidationFailed;
    });
}

int compare_lad_command(const CompareOptions& o) {
    return guarded([&]() -> int {
        const Scenario sc = load_scenario(o.run.scenario);
        const RunResult run = integrate(sc);
        if (run.summary.status != RunStatus::Completed) {
            std::cerr << "shellrr: " << run.summary.message << '\n';
            return exit_code_for(run.summary.status);
        }
        const ComparisonReport rep = comparison_for(sc, run, o.samples.value_or(sc.outputs.comparison_samples),
                                                    o.window.value_or(sc.outputs.comparison_window));
        ensure_directory(o.run.out);
        write_file(o.run.out / "lad_comparison.csv", [&](std::ostream& os) { write_comparison_csv(rep, os); });
        if (!o.run.quiet) {
            std::cout << "samples " << rep.rows.size() << ", mean deviation " << format_double(rep.mean_deviation)
                      << ", max deviation " << format_double(rep.max_deviation) << ", mean epsilon "
                      << format_double(rep.mean_epsilon) << '\n';
        }
        return kOk;
    });
}

}  // namespace shellrr::cli
