#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringpat {

enum class ErrorCode {
    InvalidArgument,
    DisconnectedComplex,
    NotSimplyConnected,
    NotInterior,
    UnknownVertex,
    NegativeArgument,
    MissingWeight,
    InvalidBoundaryConditions,
    PhiSumMismatch,
    SingularHessian,
    NonpositiveRadius,
    ClosureViolation,
    InconsistentPropagation,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable error code.
class RingError : public std::runtime_error {
public:
    RingError(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ringpat
