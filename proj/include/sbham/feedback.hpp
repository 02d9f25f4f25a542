#pragma once

#include <cstdint>
#include <vector>

#include "sbham/params.hpp"
#include "sbham/word.hpp"

namespace sbham {

// The binary feedback function b : Sigma^(n-1) -> {0,1}, stored as a packed
// bit array indexed by the big-endian encoding of the prefix word. The
// choice set S is the zero set of b: b(y) = 0 iff y is in S (the register
// saves at y).
class FeedbackTable {
public:
    explicit FeedbackTable(const Params& p);  // b == 0 everywhere

    static FeedbackTable all_zero(const Params& p);
    static FeedbackTable all_one(const Params& p);
    // bit = 1 everywhere except the listed suffixes
    static FeedbackTable from_suffix_set(const Params& p,
                                         const std::vector<StateIndex>& s);

    const Params& params() const noexcept { return params_; }

    bool bit(StateIndex prefix) const {
        return (words_[prefix >> 6] >> (prefix & 63)) & 1;
    }
    void set_bit(StateIndex prefix, bool value);

    std::uint64_t weight() const;  // #{p : b(p) = 1}
    // Sorted encodings of the suffixes in S (zero bits).
    std::vector<StateIndex> suffixes_in_s() const;

    std::vector<std::uint64_t>& raw_words() noexcept { return words_; }
    const std::vector<std::uint64_t>& raw_words() const noexcept { return words_; }
    // Zeroes bits at and above prefix_count in the last storage word.
    void mask_tail();

    bool operator==(const FeedbackTable&) const = default;

private:
    Params params_;
    std::vector<std::uint64_t> words_;
};

// A_b: bump the last digit mod m iff b(first n-1 digits) = 1.
Word adjust(const Word& w, const FeedbackTable& b);

// The successor map: (x_1,...,x_n) -> (x_2,...,x_n, x_1 + b(x_2,...,x_n)).
// Equal to adjust(rotate(w), b).
Word successor(const Word& w, const FeedbackTable& b);

// Inverse of successor: (y_1,...,y_n) -> (y_n - b(y_1,...,y_{n-1}), y_1,...,y_{n-1}).
Word predecessor(const Word& w, const FeedbackTable& b);

inline StateIndex successor_index(StateIndex i, const FeedbackTable& b) {
    const Params& p = b.params();
    StateIndex sfx = i % p.prefix_count();
    StateIndex d = i / p.prefix_count() + (b.bit(sfx) ? 1 : 0);
    if (d >= p.m()) d -= p.m();
    return sfx * p.m() + d;
}

struct OutNeighbors {
    Word save;
    Word bump;
};

// The two out-arcs of w: save = rotate(w), bump = rotate(w) with the last
// digit incremented mod m. save == w exactly when w is constant.
OutNeighbors out_neighbors(const Word& w, const Params& p);

// Length of the successor orbit of the all-zero word, followed with a
// constant-space digit walker (no table). b is Hamiltonian iff the result
// equals m^n.
std::uint64_t hamiltonian_orbit_length(const FeedbackTable& b);

}  // namespace sbham
