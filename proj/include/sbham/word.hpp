#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sbham/params.hpp"

namespace sbham {

// A word x_1 ... x_n over {0, ..., m-1}; digits[0] is x_1.
struct Word {
    std::vector<std::uint64_t> digits;

    bool operator==(const Word&) const = default;
};

void validate_word(const Word& w, const Params& p);

Word zero_word(const Params& p);

// Big-endian base-m encoding with x_1 most significant. Bijective onto
// [0, m^n).
StateIndex word_to_index(const Word& w, const Params& p);
Word index_to_word(StateIndex i, const Params& p);

// Left cyclic shift by one: (x_1, ..., x_n) -> (x_2, ..., x_n, x_1).
Word rotate(const Word& w);

// Index form of rotate, without materializing the word.
inline StateIndex rotate_index(StateIndex i, const Params& p) {
    return (i % p.prefix_count()) * p.m() + i / p.prefix_count();
}

// Text form uses 0-9 then lowercase a-z, so it supports m <= 36 only.
char digit_to_char(std::uint64_t d);
std::string digits_to_text(const std::vector<std::uint64_t>& digits);
// Decodes a digit string; every digit must be < m. Length is not checked.
std::vector<std::uint64_t> digits_from_text(std::string_view text, const Params& p);

std::string word_to_text(const Word& w, const Params& p);
Word word_from_text(std::string_view text, const Params& p);

}  // namespace sbham
