#include "sbham/word.hpp"

#include <algorithm>

namespace sbham {

void validate_word(const Word& w, const Params& p) {
    if (w.digits.size() != p.n()) {
        fail(ErrorKind::InvalidWord,
             "word has " + std::to_string(w.digits.size()) + " digits, expected " +
                 std::to_string(p.n()));
    }
    for (std::uint64_t d : w.digits) {
        if (d >= p.m()) {
            fail(ErrorKind::InvalidWord,
                 "digit " + std::to_string(d) + " out of range for m=" + std::to_string(p.m()));
        }
    }
}

Word zero_word(const Params& p) {
    return Word{std::vector<std::uint64_t>(p.n(), 0)};
}

StateIndex word_to_index(const Word& w, const Params& p) {
    validate_word(w, p);
    StateIndex i = 0;
    for (std::uint64_t d : w.digits) i = i * p.m() + d;
    return i;
}

Word index_to_word(StateIndex i, const Params& p) {
    if (i >= p.state_count()) {
        fail(ErrorKind::OutOfRange,
             "state index " + std::to_string(i) + " >= m^n = " + std::to_string(p.state_count()));
    }
    Word w{std::vector<std::uint64_t>(p.n())};
    for (std::uint64_t k = p.n(); k-- > 0;) {
        w.digits[k] = i % p.m();
        i /= p.m();
    }
    return w;
}

Word rotate(const Word& w) {
    Word r = w;
    if (!r.digits.empty()) {
        std::rotate(r.digits.begin(), r.digits.begin() + 1, r.digits.end());
    }
    return r;
}

char digit_to_char(std::uint64_t d) {
    if (d < 10) return static_cast<char>('0' + d);
    if (d < 36) return static_cast<char>('a' + (d - 10));
    fail(ErrorKind::BadDigit, "digit " + std::to_string(d) + " has no text form (m <= 36)");
}

static int char_to_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

std::string digits_to_text(const std::vector<std::uint64_t>& digits) {
    std::string out;
    out.reserve(digits.size());
    for (std::uint64_t d : digits) out.push_back(digit_to_char(d));
    return out;
}

std::vector<std::uint64_t> digits_from_text(std::string_view text, const Params& p) {
    if (p.m() > 36) {
        fail(ErrorKind::InvalidArgument, "text form supports m <= 36 only");
    }
    std::vector<std::uint64_t> out;
    out.reserve(text.size());
    for (char c : text) {
        int d = char_to_digit(c);
        if (d < 0 || static_cast<std::uint64_t>(d) >= p.m()) {
            fail(ErrorKind::BadDigit,
                 std::string("character '") + c + "' is not a digit below m=" +
                     std::to_string(p.m()));
        }
        out.push_back(static_cast<std::uint64_t>(d));
    }
    return out;
}

std::string word_to_text(const Word& w, const Params& p) {
    validate_word(w, p);
    if (p.m() > 36) fail(ErrorKind::InvalidArgument, "text form supports m <= 36 only");
    return digits_to_text(w.digits);
}

Word word_from_text(std::string_view text, const Params& p) {
    Word w{digits_from_text(text, p)};
    if (w.digits.size() != p.n()) {
        fail(ErrorKind::InvalidWord,
             "word text has length " + std::to_string(text.size()) + ", expected n=" +
                 std::to_string(p.n()));
    }
    return w;
}

}  // namespace sbham
