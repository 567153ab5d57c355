#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "shellrr/errors.hpp"

int main(int argc, char** argv) {
    using namespace shellrr::cli;

    CLI::App app{"Exact radiation-reaction dynamics of a charged shell particle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "shellrr 0.1.0");

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Integrate a scenario and write its artifacts");
    run_cmd->add_option("--scenario", run.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--out", run.out, "Output directory")->capture_default_str();
    run_cmd->add_flag("--quiet", run.quiet, "Print nothing on success");

    ValidateOptions val;
    auto* val_cmd = app.add_subcommand("validate", "Check the engine against independent oracles");
    val_cmd->add_option("--out", val.out, "Directory for validation.csv");
    val_cmd->add_option("--mutate", val.mutation, "Deliberate defect: none, flip-sign, history-gap")
        ->check(CLI::IsMember({"none", "flip-sign", "history-gap"}))
        ->capture_default_str();
    val_cmd->add_flag("--quiet", val.quiet, "Print nothing");

    FieldMapOptions fm;
    std::string gx = "0";
    std::string gy = "0";
    std::string gz = "0";
    auto* fm_cmd = app.add_subcommand("field-map", "Sample the self potential on a grid at fixed ct");
    fm_cmd->add_option("--scenario", fm.run.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    fm_cmd->add_option("--out", fm.run.out, "Output directory")->capture_default_str();
    fm_cmd->add_option("--ct", fm.ct, "Lab time of the grid")->capture_default_str();
    fm_cmd->add_option("--x", gx, "lo,hi,count or a single value")->capture_default_str();
    fm_cmd->add_option("--y", gy, "lo,hi,count or a single value")->capture_default_str();
    fm_cmd->add_option("--z", gz, "lo,hi,count or a single value")->capture_default_str();
    fm_cmd->add_flag("--quiet", fm.run.quiet, "Print nothing on success");

    SweepOptions sw;
    auto* sw_cmd = app.add_subcommand("sweep", "Independent runs over one parameter plus an aggregate table");
    sw_cmd->add_option("--scenario", sw.run.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    sw_cmd->add_option("--out", sw.run.out, "Output directory")->capture_default_str();
    sw_cmd->add_option("--param", sw.parameter, "sigma, h or amplitude (a factor on the field)")->required();
    sw_cmd->add_option("--values", sw.values, "Comma-separated values")->delimiter(',');
    sw_cmd->add_flag("--quiet", sw.run.quiet, "Print nothing on success");

    CompareOptions cmp;
    auto* cmp_cmd = app.add_subcommand("compare-lad", "Exact self force against its short-delay form");
    cmp_cmd->add_option("--scenario", cmp.run.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    cmp_cmd->add_option("--out", cmp.run.out, "Output directory")->capture_default_str();
    cmp_cmd->add_option("--samples", cmp.samples, "Number of comparison samples");
    cmp_cmd->add_option("--window", cmp.window, "Trailing fraction of the run to sample");
    cmp_cmd->add_flag("--quiet", cmp.run.quiet, "Print nothing on success");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigInvalid;
    }

    if (*run_cmd) return run_command(run);
    if (*val_cmd) return validate_command(val);
    if (*fm_cmd) {
        try {
            fm.x = parse_axis(gx);
            fm.y = parse_axis(gy);
            fm.z = parse_axis(gz);
        } catch (const shellrr::Error& e) {
            std::cerr << "shellrr: " << e.what() << '\n';
            return kConfigInvalid;
        }
        return field_map_command(fm);
    }
    if (*sw_cmd) return sweep_command(sw);
    if (*cmp_cmd) return compare_lad_command(cmp);
    return kConfigInvalid;
}
