#pragma once

#include <stdexcept>
#include <string>

namespace fleetmin {

// Error categories; they map one-to-one onto the C API status codes
// and the CLI exit codes.
enum class ErrorCode {
    InvalidInput = 1,
    Verify = 2,
    Internal = 3,
    Io = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& message) {
    throw Error(ErrorCode::InvalidInput, message);
}

[[noreturn]] inline void throw_internal(const std::string& message) {
    throw Error(ErrorCode::Internal, message);
}

[[noreturn]] inline void throw_io(const std::string& message) {
    throw Error(ErrorCode::Io, message);
}

}  // namespace fleetmin
