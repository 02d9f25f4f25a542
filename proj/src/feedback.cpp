#include "sbham/feedback.hpp"

#include <bit>

namespace sbham {

namespace {
// Packed table size guard: 2^31 bits = 256 MiB.
constexpr std::uint64_t kMaxPrefixBits = 1ull << 31;

std::uint64_t word_count(const Params& p) {
    if (p.prefix_count() > kMaxPrefixBits) {
        fail(ErrorKind::CapacityExceeded,
             "feedback table would need " + std::to_string(p.prefix_count()) + " bits");
    }
    return (p.prefix_count() + 63) / 64;
}
}  // namespace

FeedbackTable::FeedbackTable(const Params& p)
    : params_(p), words_(word_count(p), 0) {}

FeedbackTable FeedbackTable::all_zero(const Params& p) {
    return FeedbackTable(p);
}

FeedbackTable FeedbackTable::all_one(const Params& p) {
    FeedbackTable t(p);
    for (auto& w : t.words_) w = ~0ull;
    t.mask_tail();
    return t;
}

FeedbackTable FeedbackTable::from_suffix_set(const Params& p,
                                             const std::vector<StateIndex>& s) {
    FeedbackTable t = all_one(p);
    for (StateIndex idx : s) {
        if (idx >= p.prefix_count()) {
            fail(ErrorKind::OutOfRange,
                 "suffix index " + std::to_string(idx) + " >= m^(n-1) = " +
                     std::to_string(p.prefix_count()));
        }
        t.set_bit(idx, false);
    }
    return t;
}

void FeedbackTable::set_bit(StateIndex prefix, bool value) {
    std::uint64_t mask = 1ull << (prefix & 63);
    if (value) {
        words_[prefix >> 6] |= mask;
    } else {
        words_[prefix >> 6] &= ~mask;
    }
}

void FeedbackTable::mask_tail() {
    std::uint64_t used = params_.prefix_count() & 63;
    if (used != 0) words_.back() &= (1ull << used) - 1;
}

std::uint64_t FeedbackTable::weight() const {
    std::uint64_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

std::vector<StateIndex> FeedbackTable::suffixes_in_s() const {
    std::vector<StateIndex> out;
    for (StateIndex p = 0; p < params_.prefix_count(); ++p) {
        if (!bit(p)) out.push_back(p);
    }
    return out;
}

namespace {
void check_word(const Word& w, const Params& p) {
    if (w.digits.size() != p.n()) {
        fail(ErrorKind::ParamsMismatch,
             "word length " + std::to_string(w.digits.size()) +
                 " does not match n=" + std::to_string(p.n()));
    }
    for (std::uint64_t d : w.digits) {
        if (d >= p.m()) {
            fail(ErrorKind::InvalidWord,
                 "digit " + std::to_string(d) + " out of range for m=" + std::to_string(p.m()));
        }
    }
}

StateIndex prefix_index(const Word& w, const Params& p) {
    // first n-1 digits, big-endian
    StateIndex q = 0;
    for (std::uint64_t k = 0; k + 1 < p.n(); ++k) q = q * p.m() + w.digits[k];
    return q;
}
}  // namespace

Word adjust(const Word& w, const FeedbackTable& b) {
    const Params& p = b.params();
    check_word(w, p);
    Word out = w;
    if (b.bit(prefix_index(w, p))) {
        out.digits.back() = (out.digits.back() + 1) % p.m();
    }
    return out;
}

Word successor(const Word& w, const FeedbackTable& b) {
    const Params& p = b.params();
    check_word(w, p);
    Word out{std::vector<std::uint64_t>(p.n())};
    StateIndex suffix = 0;
    for (std::uint64_t k = 1; k < p.n(); ++k) {
        out.digits[k - 1] = w.digits[k];
        suffix = suffix * p.m() + w.digits[k];
    }
    std::uint64_t d = w.digits.front() + (b.bit(suffix) ? 1 : 0);
    if (d >= p.m()) d -= p.m();
    out.digits.back() = d;
    return out;
}

Word predecessor(const Word& w, const FeedbackTable& b) {
    const Params& p = b.params();
    check_word(w, p);
    std::uint64_t d = w.digits.back() + p.m() - (b.bit(prefix_index(w, p)) ? 1 : 0);
    if (d >= p.m()) d -= p.m();
    Word out{std::vector<std::uint64_t>(p.n())};
    out.digits.front() = d;
    for (std::uint64_t k = 0; k + 1 < p.n(); ++k) out.digits[k + 1] = w.digits[k];
    return out;
}

OutNeighbors out_neighbors(const Word& w, const Params& p) {
    check_word(w, p);
    Word save = rotate(w);
    Word bump = save;
    bump.digits.back() = (bump.digits.back() + 1) % p.m();
    return OutNeighbors{std::move(save), std::move(bump)};
}

std::uint64_t hamiltonian_orbit_length(const FeedbackTable& b) {
    const Params& p = b.params();
    const std::uint64_t m = p.m();
    const std::uint64_t n = p.n();
    const std::uint64_t pc = p.prefix_count();

    // Constant-space walk from the all-zero word: a ring buffer of digits
    // plus the running state index, updated without division by peeling the
    // leading digit off the index.
    std::vector<std::uint64_t> ring(n, 0);
    std::uint64_t head = 0;
    StateIndex cur = 0;
    std::uint64_t steps = 0;
    do {
        std::uint64_t lead = ring[head];
        StateIndex suffix = cur - lead * pc;
        std::uint64_t d = lead + (b.bit(suffix) ? 1 : 0);
        if (d >= m) d -= m;
        cur = suffix * m + d;
        ring[head] = d;
        head = head + 1 == n ? 0 : head + 1;
        ++steps;
    } while (cur != 0);
    return steps;
}

}  // namespace sbham
