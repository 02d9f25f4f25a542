#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sbham/feedback.hpp"
#include "sbham/params.hpp"

namespace sbham {

// Keeps full-table construction below ~128 MiB by default.
inline constexpr std::uint64_t kDefaultTableCap = 1ull << 24;

// An explicit permutation of the m^n state indices.
class PermutationTable {
public:
    PermutationTable(const Params& p, std::vector<StateIndex> image);

    const Params& params() const noexcept { return params_; }
    const std::vector<StateIndex>& image() const noexcept { return image_; }
    StateIndex apply(StateIndex i) const { return image_[i]; }

private:
    Params params_;
    std::vector<StateIndex> image_;
};

// Materializes f_S as a table: image[i] = successor_index(i).
PermutationTable permutation_table(const FeedbackTable& b,
                                   std::uint64_t max_states = kDefaultTableCap);

// The rotation sigma as a table.
PermutationTable rotation_permutation(const Params& p,
                                      std::uint64_t max_states = kDefaultTableCap);

// The last-digit adjustment A_b as a table.
PermutationTable adjust_permutation(const FeedbackTable& b,
                                    std::uint64_t max_states = kDefaultTableCap);

struct CycleReport {
    std::uint64_t cycle_count = 0;
    std::map<std::uint64_t, std::uint64_t> cycle_type;  // length -> multiplicity
    int sign = +1;                                      // (-1)^(m^n - cycle_count)
    std::uint64_t orbit_of_zero_length = 0;
    bool is_single_cycle = false;
};

// Full cycle structure. Throws InvalidPermutation if the table is not a
// bijection.
CycleReport cycle_decomposition(const PermutationTable& t);

}  // namespace sbham
