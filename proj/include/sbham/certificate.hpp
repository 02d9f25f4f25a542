#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbham/feedback.hpp"
#include "sbham/params.hpp"

namespace sbham {

// A cyclic digit string of length exactly m^n; candidate Hamiltonian cycle
// of SB(m,n). The k-th vertex of the cycle is the window
// (s_k, ..., s_{k+n-1}) read cyclically.
struct Certificate {
    Params params;
    std::vector<std::uint64_t> digits;
};

// Throws WrongLength / BadDigit; text form requires m <= 36.
Certificate certificate_from_text(const Params& p, std::string_view text);
std::string certificate_to_text(const Certificate& c);
// Throws WrongLength / BadDigit on raw digit input.
Certificate make_certificate(const Params& p, std::vector<std::uint64_t> digits);

enum class CertificateFail {
    None,
    RepeatedWindow,      // fail_index = position of the repeated window
    InvalidStep,         // fail_index = position of the bad step
    InconsistentSuffix,  // fail_index = encoded suffix with conflicting decisions
};

const char* certificate_fail_name(CertificateFail f);

struct VerifyResult {
    bool valid = false;
    CertificateFail fail = CertificateFail::None;
    std::uint64_t fail_index = 0;
    // Present iff valid: the unique feedback table extracted from the
    // save/bump decisions (save suffixes form S).
    std::optional<FeedbackTable> choice_set;
};

// Checks that all m^n cyclic windows are distinct and every consecutive
// step is a save or bump arc, that per-suffix decisions are consistent,
// and that rebuilding f_S from the extracted S reproduces the cycle.
// A save step from a constant word to itself is an invalid step (a
// Hamiltonian cycle cannot use a self-loop).
VerifyResult verify_certificate(const Certificate& c);

// Emits the orbit of the all-zero word as a certificate; nullopt unless b
// is Hamiltonian.
std::optional<Certificate> certificate_from_orbit(const FeedbackTable& b);

}  // namespace sbham
