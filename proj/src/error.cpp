#include "witt/error.hpp"

namespace witt {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::ExceedsFrame: return "ExceedsFrame";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::TwistCheckFailed: return "TwistCheckFailed";
    case ErrorCode::NontrivialTwistUnresolved: return "NontrivialTwistUnresolved";
    case ErrorCode::Mismatch: return "Mismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message)
    , code_(code)
{
}

}  // namespace witt
