#ifndef PRODSIMP_ERROR_HPP
#define PRODSIMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace prodsimp {

enum class ErrorCode {
    IndexOutOfRange,
    UncoveredVertex,
    NotAFace,
    NotMaximal,
    InvalidDimension,
    CapExceeded,
    NotSimple,
    RedundantInequality,
    InfeasibleVertex,
    InvalidParameter,
    PreconditionViolated,
    ParseError,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UncoveredVertex: return "UncoveredVertex";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::RedundantInequality: return "RedundantInequality";
    case ErrorCode::InfeasibleVertex: return "InfeasibleVertex";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Library error carrying a machine-checkable code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace prodsimp

#endif // PRODSIMP_ERROR_HPP
