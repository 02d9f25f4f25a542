#include "sbham/params.hpp"

#include <string>

namespace sbham {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InvalidWord: return "InvalidWord";
        case ErrorKind::BadDigit: return "BadDigit";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ParamsMismatch: return "ParamsMismatch";
        case ErrorKind::CapacityExceeded: return "CapacityExceeded";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::WrongLength: return "WrongLength";
        case ErrorKind::UnsupportedParity: return "UnsupportedParity";
        case ErrorKind::EmptySample: return "EmptySample";
        case ErrorKind::CheckpointRejected: return "CheckpointRejected";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Params::Params(std::uint64_t m, std::uint64_t n) : m_(m), n_(n) {
    if (m < 2) fail(ErrorKind::InvalidArgument, "alphabet size m must be at least 2");
    if (n < 1) fail(ErrorKind::InvalidArgument, "word length n must be at least 1");
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(count, m, &count)) {
            fail(ErrorKind::CapacityExceeded,
                 "m^n does not fit the 64-bit state index (m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + ")");
        }
    }
    state_count_ = count;
    prefix_count_ = count / m;
}

}  // namespace sbham
