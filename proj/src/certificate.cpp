#include "sbham/certificate.hpp"

#include "sbham/word.hpp"

namespace sbham {

Certificate make_certificate(const Params& p, std::vector<std::uint64_t> digits) {
    if (digits.size() != p.state_count()) {
        fail(ErrorKind::WrongLength,
             "certificate has " + std::to_string(digits.size()) + " digits, expected m^n = " +
                 std::to_string(p.state_count()));
    }
    for (std::uint64_t d : digits) {
        if (d >= p.m()) {
            fail(ErrorKind::BadDigit,
                 "digit " + std::to_string(d) + " out of range for m=" + std::to_string(p.m()));
        }
    }
    return Certificate{p, std::move(digits)};
}

Certificate certificate_from_text(const Params& p, std::string_view text) {
    if (text.size() != p.state_count()) {
        fail(ErrorKind::WrongLength,
             "certificate text has " + std::to_string(text.size()) +
                 " characters, expected m^n = " + std::to_string(p.state_count()));
    }
    return Certificate{p, digits_from_text(text, p)};
}

std::string certificate_to_text(const Certificate& c) {
    if (c.params.m() > 36) fail(ErrorKind::InvalidArgument, "text form supports m <= 36 only");
    return digits_to_text(c.digits);
}

const char* certificate_fail_name(CertificateFail f) {
    switch (f) {
        case CertificateFail::None: return "None";
        case CertificateFail::RepeatedWindow: return "RepeatedWindow";
        case CertificateFail::InvalidStep: return "InvalidStep";
        case CertificateFail::InconsistentSuffix: return "InconsistentSuffix";
    }
    return "Unknown";
}

VerifyResult verify_certificate(const Certificate& c) {
    const Params& p = c.params;
    const std::uint64_t m = p.m();
    const std::uint64_t n = p.n();
    const std::uint64_t length = p.state_count();
    const std::uint64_t pc = p.prefix_count();

    if (c.digits.size() != length) {
        fail(ErrorKind::WrongLength, "certificate does not hold m^n digits");
    }

    auto result_fail = [](CertificateFail kind, std::uint64_t index) {
        VerifyResult r;
        r.valid = false;
        r.fail = kind;
        r.fail_index = index;
        return r;
    };

    // Per-suffix save/bump decision: 0 = save, 1 = bump, 2 = undecided.
    std::vector<std::uint8_t> decision(pc, 2);
    std::vector<char> seen(length, 0);

    StateIndex window = 0;
    for (std::uint64_t k = 0; k < n; ++k) window = window * m + c.digits[k];

    for (std::uint64_t k = 0; k < length; ++k) {
        if (seen[window]) return result_fail(CertificateFail::RepeatedWindow, k);
        seen[window] = 1;

        std::uint64_t lead = window / pc;       // x_1 of the current window
        StateIndex suffix = window - lead * pc; // x_2..x_n
        std::uint64_t next_digit = c.digits[(k + n) % length];

        std::uint8_t step;
        if (next_digit == lead) {
            step = 0;  // save
            // A save out of a constant word is a self-loop; no Hamiltonian
            // cycle can use it.
            if (suffix * m + lead == window && length > 1) {
                return result_fail(CertificateFail::InvalidStep, k);
            }
        } else if (next_digit == (lead + 1) % m) {
            step = 1;  // bump
        } else {
            return result_fail(CertificateFail::InvalidStep, k);
        }

        if (decision[suffix] == 2) {
            decision[suffix] = step;
        } else if (decision[suffix] != step) {
            return result_fail(CertificateFail::InconsistentSuffix, suffix);
        }

        window = suffix * m + next_digit;
    }

    // All m^n windows were distinct, so every state occurred and every
    // suffix got decided m times.
    FeedbackTable b(p);
    for (StateIndex q = 0; q < pc; ++q) b.set_bit(q, decision[q] == 1);

    // Rebuild the orbit of window 0 from the extracted table; it must
    // reproduce the digit string.
    StateIndex start = 0;
    for (std::uint64_t k = 0; k < n; ++k) start = start * m + c.digits[k];
    StateIndex cur = start;
    for (std::uint64_t k = 0; k < length; ++k) {
        if (cur / pc != c.digits[k]) {
            return result_fail(CertificateFail::InvalidStep, k);
        }
        cur = successor_index(cur, b);
    }

    VerifyResult r;
    r.valid = true;
    r.choice_set = std::move(b);
    return r;
}

std::optional<Certificate> certificate_from_orbit(const FeedbackTable& b) {
    const Params& p = b.params();
    const std::uint64_t length = p.state_count();
    if (hamiltonian_orbit_length(b) != length) return std::nullopt;
    std::vector<std::uint64_t> digits;
    digits.reserve(length);
    StateIndex cur = 0;
    for (std::uint64_t k = 0; k < length; ++k) {
        digits.push_back(cur / p.prefix_count());
        cur = successor_index(cur, b);
    }
    return Certificate{p, std::move(digits)};
}

}  // namespace sbham
