#pragma once

#include <stdexcept>
#include <string>

namespace sbham {

enum class ErrorKind {
    InvalidArgument,
    InvalidWord,
    BadDigit,
    OutOfRange,
    ParamsMismatch,
    CapacityExceeded,
    InvalidPermutation,
    WrongLength,
    UnsupportedParity,
    EmptySample,
    CheckpointRejected,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

const char* error_kind_name(ErrorKind kind);

}  // namespace sbham
