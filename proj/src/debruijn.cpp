#include "sbham/debruijn.hpp"

namespace sbham {

Sequence sequence_from_text(const Params& p, std::string_view text) {
    if (text.empty()) fail(ErrorKind::WrongLength, "sequence text is empty");
    return Sequence{p, digits_from_text(text, p)};
}

std::string sequence_to_text(const Sequence& s) {
    if (s.params.m() > 36) fail(ErrorKind::InvalidArgument, "text form supports m <= 36 only");
    return digits_to_text(s.symbols);
}

Sequence sequence_from_feedback(const FeedbackTable& b, const Word& seed,
                                std::uint64_t length) {
    const Params& p = b.params();
    if (seed.digits.size() != p.n()) {
        fail(ErrorKind::ParamsMismatch,
             "seed has " + std::to_string(seed.digits.size()) + " digits, expected n=" +
                 std::to_string(p.n()));
    }
    validate_word(seed, p);
    if (length < p.n()) {
        fail(ErrorKind::InvalidArgument, "sequence length must be at least n");
    }

    const std::uint64_t m = p.m();
    const std::uint64_t n = p.n();

    std::vector<std::uint64_t> s;
    s.reserve(length);
    for (std::uint64_t d : seed.digits) s.push_back(d);

    if (n == 1) {
        // The lone prefix is the empty word; the recurrence collapses to a
        // repeated bump-or-save of the single running symbol.
        bool bumping = b.bit(0);
        for (std::uint64_t k = 1; k < length; ++k) {
            std::uint64_t d = s[k - 1] + (bumping ? 1 : 0);
            s.push_back(d >= m ? d - m : d);
        }
        return Sequence{p, std::move(s)};
    }

    // Rolling encoding of (s_{k+1}, ..., s_{k+n-1}).
    const std::uint64_t inner = p.prefix_count() / m;  // m^(n-2)
    StateIndex q = 0;
    for (std::uint64_t k = 1; k < n; ++k) q = q * m + s[k];
    for (std::uint64_t k = n; k < length; ++k) {
        std::uint64_t d = s[k - n] + (b.bit(q) ? 1 : 0);
        if (d >= m) d -= m;
        s.push_back(d);
        q = (q % inner) * m + d;
    }
    return Sequence{p, std::move(s)};
}

bool is_debruijn(const Sequence& s) {
    const Params& p = s.params;
    const std::uint64_t length = p.state_count();
    if (s.symbols.size() != length) {
        fail(ErrorKind::WrongLength,
             "period " + std::to_string(s.symbols.size()) + " != m^n = " +
                 std::to_string(length));
    }
    const std::uint64_t m = p.m();
    const std::uint64_t pc = p.prefix_count();

    std::vector<char> seen(length, 0);
    StateIndex window = 0;
    for (std::uint64_t k = 0; k < p.n(); ++k) window = window * m + s.symbols[k];
    for (std::uint64_t k = 0; k < length; ++k) {
        if (seen[window]) return false;
        seen[window] = 1;
        window = (window % pc) * m + s.symbols[(k + p.n()) % length];
    }
    return true;
}

Sequence certificate_to_sequence(const Certificate& c) {
    return Sequence{c.params, c.digits};
}

Certificate sequence_to_certificate(const Sequence& s) {
    if (s.symbols.size() != s.params.state_count()) {
        fail(ErrorKind::WrongLength,
             "sequence period " + std::to_string(s.symbols.size()) +
                 " != m^n = " + std::to_string(s.params.state_count()));
    }
    return Certificate{s.params, s.symbols};
}

}  // namespace sbham
