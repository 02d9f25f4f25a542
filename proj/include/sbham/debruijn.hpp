#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbham/certificate.hpp"
#include "sbham/feedback.hpp"
#include "sbham/params.hpp"
#include "sbham/word.hpp"

namespace sbham {

// A cyclic symbol sequence over Sigma_m of some stated period.
struct Sequence {
    Params params;
    std::vector<std::uint64_t> symbols;
};

Sequence sequence_from_text(const Params& p, std::string_view text);
std::string sequence_to_text(const Sequence& s);

// Runs the register recurrence s_{k+n} = s_k + b(s_{k+1},...,s_{k+n-1}) mod m
// starting from the seed word in positions 0..n-1. length >= n.
Sequence sequence_from_feedback(const FeedbackTable& b, const Word& seed,
                                std::uint64_t length);

// True iff the m^n cyclic windows of length n are pairwise distinct, so
// every n-word appears exactly once. Requires period == m^n (WrongLength).
bool is_debruijn(const Sequence& s);

Sequence certificate_to_sequence(const Certificate& c);
// Requires period == m^n (WrongLength).
Certificate sequence_to_certificate(const Sequence& s);

}  // namespace sbham
