#include "sbham/permutation.hpp"

namespace sbham {

namespace {
void check_capacity(const Params& p, std::uint64_t max_states) {
    if (p.state_count() > max_states) {
        fail(ErrorKind::CapacityExceeded,
             "permutation table of " + std::to_string(p.state_count()) +
                 " states exceeds the budget of " + std::to_string(max_states));
    }
}
}  // namespace

PermutationTable::PermutationTable(const Params& p, std::vector<StateIndex> image)
    : params_(p), image_(std::move(image)) {
    if (image_.size() != p.state_count()) {
        fail(ErrorKind::InvalidPermutation,
             "image has " + std::to_string(image_.size()) + " entries, expected " +
                 std::to_string(p.state_count()));
    }
}

PermutationTable permutation_table(const FeedbackTable& b, std::uint64_t max_states) {
    const Params& p = b.params();
    check_capacity(p, max_states);
    std::vector<StateIndex> image(p.state_count());
    for (StateIndex i = 0; i < p.state_count(); ++i) image[i] = successor_index(i, b);
    return PermutationTable(p, std::move(image));
}

PermutationTable rotation_permutation(const Params& p, std::uint64_t max_states) {
    check_capacity(p, max_states);
    std::vector<StateIndex> image(p.state_count());
    for (StateIndex i = 0; i < p.state_count(); ++i) image[i] = rotate_index(i, p);
    return PermutationTable(p, std::move(image));
}

PermutationTable adjust_permutation(const FeedbackTable& b, std::uint64_t max_states) {
    const Params& p = b.params();
    check_capacity(p, max_states);
    const std::uint64_t m = p.m();
    std::vector<StateIndex> image(p.state_count());
    for (StateIndex i = 0; i < p.state_count(); ++i) {
        std::uint64_t d = i % m + (b.bit(i / m) ? 1 : 0);
        image[i] = d >= m ? i / m * m + (d - m) : i / m * m + d;
    }
    return PermutationTable(p, std::move(image));
}

CycleReport cycle_decomposition(const PermutationTable& t) {
    const std::uint64_t size = t.params().state_count();
    const auto& image = t.image();

    std::vector<char> seen(size, 0);
    for (StateIndex v : image) {
        if (v >= size || seen[v]) {
            fail(ErrorKind::InvalidPermutation, "image is not a bijection on the state space");
        }
        seen[v] = 1;
    }

    CycleReport report;
    std::fill(seen.begin(), seen.end(), 0);
    for (StateIndex i = 0; i < size; ++i) {
        if (seen[i]) continue;
        std::uint64_t length = 0;
        StateIndex j = i;
        do {
            seen[j] = 1;
            j = image[j];
            ++length;
        } while (j != i);
        ++report.cycle_count;
        ++report.cycle_type[length];
        if (i == 0) report.orbit_of_zero_length = length;
    }
    report.sign = ((size - report.cycle_count) & 1) ? -1 : +1;
    report.is_single_cycle = report.cycle_count == 1;
    return report;
}

}  // namespace sbham
