#pragma once

#include <stdexcept>
#include <string>

namespace sbgrowth {

enum class ErrorCode {
    InvalidStrandCount,
    InvalidArgument,
    ResourceLimit,
    SingularMatrix,
    DivisionByZero,
    PoleAtOrigin,
    NotCubic,
};

/// Single exception type for the library; the code is what the C layer maps
/// onto status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sbgrowth
