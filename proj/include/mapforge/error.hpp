#pragma once

#include <stdexcept>
#include <string>

namespace mapforge {

enum class ErrorCode {
    NotAPermutation,
    Disconnected,
    OddHalfEdgeCount,
    MalformedInput,
    TooLarge,
    NotQuadrangulation,
    NotTwoConnected,
    TooFewEdges,
    InvalidRoot,
    ValuationError,
    ZeroDivision,
    NonConvergent,
    DomainError,
    InversionError,
    BudgetExceeded,
    MissingTable,
    InsufficientData,
    ValidationFailed,
    Io,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// MalformedInput carries the byte offset (or line number for text formats).
class MalformedInput : public Error {
public:
    MalformedInput(std::size_t position, const std::string& message)
        : Error(ErrorCode::MalformedInput, message + " (at " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace mapforge
