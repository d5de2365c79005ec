#include "ringpat/error.hpp"

namespace ringpat {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DisconnectedComplex: return "DisconnectedComplex";
        case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
        case ErrorCode::NotInterior: return "NotInterior";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NegativeArgument: return "NegativeArgument";
        case ErrorCode::MissingWeight: return "MissingWeight";
        case ErrorCode::InvalidBoundaryConditions: return "InvalidBoundaryConditions";
        case ErrorCode::PhiSumMismatch: return "PhiSumMismatch";
        case ErrorCode::SingularHessian: return "SingularHessian";
        case ErrorCode::NonpositiveRadius: return "NonpositiveRadius";
        case ErrorCode::ClosureViolation: return "ClosureViolation";
        case ErrorCode::InconsistentPropagation: return "InconsistentPropagation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

RingError::RingError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

}  // namespace ringpat
