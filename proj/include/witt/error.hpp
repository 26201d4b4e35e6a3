#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace witt {

enum class ErrorCode {
    NotStrict,
    ExceedsFrame,
    NonPositivePart,
    BoundExceeded,
    ParityViolation,
    TwistCheckFailed,
    NontrivialTwistUnresolved,
    Mismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; callers switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace witt
