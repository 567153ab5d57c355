#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shellrr {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationOptions {
    /// Negates the engine's self field and self potential before they are
    /// compared with the oracles. The self-field, Coulomb and LAD checks must
    /// then fail.
    bool flip_self_field_sign = false;
    /// Evaluates the self field past the end of a stored history. The
    /// coverage check must then fail with QueryBeyondHistory.
    bool inject_history_gap = false;
};

/// Engine against the independent oracles on analytic worldlines.
std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

/// One row per check: `name,result,measured,tolerance,detail`.
void write_validation_table(const std::vector<CheckResult>& checks, std::ostream& out);

bool all_passed(const std::vector<CheckResult>& checks) noexcept;

}  // namespace shellrr
