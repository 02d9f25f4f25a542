#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbham/feedback.hpp"
#include "sbham/params.hpp"

namespace sbham {

inline constexpr std::uint64_t kDefaultFreeBitLimit = 24;
inline constexpr std::uint64_t kExtendedFreeBitLimit = 32;

// The candidate space of feedback tables with the no-self-loop pruning
// applied: b is forced to 1 on every constant prefix (the save arc at a
// constant word is a self-loop no Hamiltonian cycle can use). Counter bit
// j drives the j-th non-pinned prefix in increasing index order; this
// mapping is part of the checkpoint format.
struct SearchSpace {
    Params params;
    std::vector<StateIndex> pinned;         // constant-prefix encodings, increasing
    std::vector<StateIndex> free_prefixes;  // everything else, increasing
    std::uint64_t free_bits = 0;            // == free_prefixes.size()
    std::uint64_t range_lo = 0;             // half-open counter range
    std::uint64_t range_hi = 0;             // within [0, 2^free_bits]

    std::uint64_t size() const { return range_hi - range_lo; }
};

SearchSpace build_search_space(const Params& p,
                               std::uint64_t free_bit_limit = kDefaultFreeBitLimit);

// Scatters the counter bits into the free prefixes; pinned prefixes get 1.
FeedbackTable counter_to_feedback(const SearchSpace& s, std::uint64_t counter);

// Balanced contiguous split into `workers` disjoint ranges covering s
// exactly (the first size % workers parts are one longer).
std::vector<SearchSpace> partition(const SearchSpace& s, std::uint64_t workers);

struct SignHistogram {
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;

    bool operator==(const SignHistogram&) const = default;
};

struct EnumerationReport {
    Params params;
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;  // end of the covered range (== frontier on partial runs)
    std::uint64_t tested = 0;
    std::uint64_t hamiltonian_count = 0;
    bool track_signs = false;
    SignHistogram signs;
    double elapsed_seconds = 0.0;
};

// Equality on everything except elapsed_seconds.
bool reports_equal(const EnumerationReport& a, const EnumerationReport& b);

EnumerationReport merge_reports(const std::vector<EnumerationReport>& parts);

struct Checkpoint {
    std::uint32_t version = 1;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    bool track_signs = false;
    std::uint64_t next_counter = 0;  // first unprocessed counter
    std::uint64_t tested = 0;
    std::uint64_t hamiltonian_count = 0;
    SignHistogram signs;

    bool operator==(const Checkpoint&) const = default;
};

// One record per line: a version header, the space descriptor, the last
// completed counter and the partial counts, all decimal. Saves are atomic
// (tmp file + rename). Corrupt or version-mismatched files raise
// CheckpointRejected.
void checkpoint_save(const Checkpoint& c, const std::string& path);
Checkpoint checkpoint_load(const std::string& path);

struct EnumerateOptions {
    bool track_signs = false;
    std::uint64_t workers = 1;
    // Max candidates processed in this run; a capped run persists a
    // checkpoint (if a path is set) and reports the covered prefix.
    std::uint64_t stop_after = UINT64_MAX;
    // Empty = no checkpointing. If the file exists the run resumes from it.
    std::string checkpoint_path;
    std::uint64_t checkpoint_interval = 1ull << 22;
    bool collect_hamiltonians = false;
    std::uint64_t collect_limit = 1ull << 20;
};

struct EnumerationResult {
    EnumerationReport report;
    // Counters of Hamiltonian candidates found in this run, increasing;
    // only populated when collect_hamiltonians is set.
    std::vector<std::uint64_t> hamiltonian_counters;
    bool completed = false;
};

// Walks every candidate in the range. Without sign tracking only the orbit
// of the all-zero word is followed (early exit on closure); with
// track_signs the full permutation is decomposed per candidate and the
// sign histogram filled. Workers split the range into contiguous blocks
// merged in counter order, so the report is identical for any worker
// count.
EnumerationResult enumerate_space(const SearchSpace& s,
                                  const EnumerateOptions& opt = {});

struct SampleReport {
    Params params;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool pruned = false;
    std::uint64_t mismatches = 0;  // candidates with sgn(f_S) != sgn(sigma)
    SignHistogram signs;
    double elapsed_seconds = 0.0;
};

// Draws `trials` feedback tables from the seeded SplitMix64 stream (stream
// t for trial t; prefix bit words are consecutive outputs, low bits first;
// pruned mode forces the constant prefixes to 1) and compares the
// cycle-decomposition sign of f_S against sgn(sigma). For odd m the
// mismatch count is zero for every b. Trials are independent streams, so
// the report does not depend on the worker count.
SampleReport sample_signs(const Params& p, std::uint64_t trials,
                          std::uint64_t seed, bool pruned,
                          std::uint64_t workers = 1);

}  // namespace sbham
