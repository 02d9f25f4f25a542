#pragma once

#include <cstdint>

#include "sbham/error.hpp"

namespace sbham {

using StateIndex = std::uint64_t;

// Alphabet size m >= 2 and word length n >= 1. Construction verifies that
// m^n fits the 64-bit state index; everything downstream may then index
// states with plain uint64 arithmetic.
class Params {
public:
    Params(std::uint64_t m, std::uint64_t n);

    std::uint64_t m() const noexcept { return m_; }
    std::uint64_t n() const noexcept { return n_; }

    // m^n
    std::uint64_t state_count() const noexcept { return state_count_; }
    // m^(n-1), the number of feedback prefixes
    std::uint64_t prefix_count() const noexcept { return prefix_count_; }

    bool operator==(const Params&) const = default;

private:
    std::uint64_t m_;
    std::uint64_t n_;
    std::uint64_t state_count_;
    std::uint64_t prefix_count_;
};

}  // namespace sbham
