#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shellrr {

enum class ErrorCode {
    NonTimelikeVelocity,
    NonFiniteInput,
    InvalidParticle,
    InvalidFieldModel,
    QueryBeyondHistory,
    NonMonotoneTime,
    InvalidSample,
    RootNotBracketed,
    NumericalStall,
    DegenerateDenominator,
    StepTooLarge,
    DriftExceeded,
    ConfigInvalid,
    IoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code is what callers branch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace shellrr
