#include "shellrr/errors.hpp"

namespace shellrr {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonTimelikeVelocity: return "NonTimelikeVelocity";
        case ErrorCode::NonFiniteInput: return "NonFiniteInput";
        case ErrorCode::InvalidParticle: return "InvalidParticle";
        case ErrorCode::InvalidFieldModel: return "InvalidFieldModel";
        case ErrorCode::QueryBeyondHistory: return "QueryBeyondHistory";
        case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
        case ErrorCode::InvalidSample: return "InvalidSample";
        case ErrorCode::RootNotBracketed: return "RootNotBracketed";
        case ErrorCode::NumericalStall: return "NumericalStall";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::StepTooLarge: return "StepTooLarge";
        case ErrorCode::DriftExceeded: return "DriftExceeded";
        case ErrorCode::ConfigInvalid: return "ConfigInvalid";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

}  // namespace shellrr
