#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace shellrr::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailed = 1,
    kConfigInvalid = 2,
    kDriftExceeded = 3,
    kStepTooLarge = 4,
    kNumericalFailure = 5,
    kIoFailure = 6,
};

struct RunOptions {
    std::filesystem::path scenario;
    std::filesystem::path out = ".";
    bool quiet = false;
};

struct ValidateOptions {
    std::optional<std::filesystem::path> out;
    std::string mutation = "none";  // none | flip-sign | history-gap
    bool quiet = false;
};

struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;
};

struct FieldMapOptions {
    RunOptions run;
    double ct = 0.0;
    Axis x;
    Axis y;
    Axis z;
};

struct SweepOptions {
    RunOptions run;
    std::string parameter;
    std::vector<double> values;
};

struct CompareOptions {
    RunOptions run;
    std::optional<std::size_t> samples;
    std::optional<double> window;
};

int run_command(const RunOptions& options);
int validate_command(const ValidateOptions& options);
int field_map_command(const FieldMapOptions& options);
int sweep_command(const SweepOptions& options);
int compare_lad_command(const CompareOptions& options);

/// "lo,hi,count"; a single number means a one-point axis.
Axis parse_axis(const std::string& text);

}  // namespace shellrr::cli
