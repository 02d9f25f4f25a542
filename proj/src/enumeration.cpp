#include "sbham/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "sbham/necklace.hpp"
#include "sbham/splitmix.hpp"

namespace sbham {

namespace {

// Transition tables small enough to keep per-state u32 arrays.
constexpr std::uint64_t kMaxKernelStates = 1ull << 22;

struct Transitions {
    std::uint32_t state_count = 0;
    std::vector<std::uint32_t> sfx;   // suffix (= feedback prefix) of each state
    std::vector<std::uint32_t> save;  // rotation target
    std::vector<std::uint32_t> bump;  // rotation-with-increment target
};

Transitions build_transitions(const Params& p) {
    if (p.state_count() > kMaxKernelStates) {
        fail(ErrorKind::CapacityExceeded,
             "state space of " + std::to_string(p.state_count()) +
                 " exceeds the per-candidate walk budget");
    }
    Transitions t;
    t.state_count = static_cast<std::uint32_t>(p.state_count());
    t.sfx.resize(t.state_count);
    t.save.resize(t.state_count);
    t.bump.resize(t.state_count);
    const std::uint64_t m = p.m();
    const std::uint64_t pc = p.prefix_count();
    for (std::uint64_t i = 0; i < t.state_count; ++i) {
        std::uint64_t suffix = i % pc;
        std::uint64_t lead = i / pc;
        t.sfx[i] = static_cast<std::uint32_t>(suffix);
        t.save[i] = static_cast<std::uint32_t>(suffix * m + lead);
        t.bump[i] = static_cast<std::uint32_t>(suffix * m + (lead + 1 == m ? 0 : lead + 1));
    }
    return t;
}

struct Kernel {
    Transitions trans;
    std::uint32_t mask_words = 0;
    std::vector<std::uint64_t> pinned_mask;
    std::vector<std::uint32_t> free_pos;

    void fill_mask(std::uint64_t counter, std::uint64_t* mask) const {
        for (std::uint32_t w = 0; w < mask_words; ++w) mask[w] = pinned_mask[w];
        for (std::size_t j = 0; j < free_pos.size(); ++j) {
            mask[free_pos[j] >> 6] |= ((counter >> j) & 1) << (free_pos[j] & 63);
        }
    }
};

Kernel build_kernel(const SearchSpace& s) {
    Kernel k;
    k.trans = build_transitions(s.params);
    k.mask_words = static_cast<std::uint32_t>((s.params.prefix_count() + 63) / 64);
    k.pinned_mask.assign(k.mask_words, 0);
    for (StateIndex p : s.pinned) k.pinned_mask[p >> 6] |= 1ull << (p & 63);
    k.free_pos.reserve(s.free_prefixes.size());
    for (StateIndex p : s.free_prefixes) k.free_pos.push_back(static_cast<std::uint32_t>(p));
    return k;
}

struct BlockTotals {
    std::uint64_t hamiltonian = 0;
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
    std::vector<std::uint64_t> found;
};

struct Scratch {
    std::vector<std::uint64_t> mask;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
};

// Orbit-of-zero walk with early exit; Hamiltonian iff the orbit closes
// after exactly m^n steps.
template <bool kSingleWord>
bool candidate_is_hamiltonian(const Transitions& t, const std::uint64_t* mask) {
    const std::uint32_t* sfx = t.sfx.data();
    const std::uint32_t* save = t.save.data();
    const std::uint32_t* bump = t.bump.data();
    const std::uint64_t word0 = mask[0];
    std::uint32_t cur = 0;
    std::uint64_t steps = 0;
    do {
        std::uint32_t s = sfx[cur];
        bool bit;
        if constexpr (kSingleWord) {
            bit = (word0 >> s) & 1;
        } else {
            bit = (mask[s >> 6] >> (s & 63)) & 1;
        }
        cur = bit ? bump[cur] : save[cur];
        ++steps;
    } while (cur != 0);
    return steps == t.state_count;
}

// Full decomposition: returns the cycle count.
template <bool kSingleWord>
std::uint32_t candidate_cycle_count(const Transitions& t, const std::uint64_t* mask,
                                    Scratch& scratch) {
    const std::uint32_t* sfx = t.sfx.data();
    const std::uint32_t* save = t.save.data();
    const std::uint32_t* bump = t.bump.data();
    const std::uint64_t word0 = mask[0];
    std::uint32_t* stamp = scratch.stamp.data();
    if (scratch.epoch == ~0u) {  // stamp wrap-around after 2^32-1 candidates
        std::fill(scratch.stamp.begin(), scratch.stamp.end(), 0);
        scratch.epoch = 0;
    }
    const std::uint32_t epoch = ++scratch.epoch;
    std::uint32_t cycles = 0;
    for (std::uint32_t i = 0; i < t.state_count; ++i) {
        if (stamp[i] == epoch) continue;
        ++cycles;
        std::uint32_t j = i;
        do {
            stamp[j] = epoch;
            std::uint32_t s = sfx[j];
            bool bit;
            if constexpr (kSingleWord) {
                bit = (word0 >> s) & 1;
            } else {
                bit = (mask[s >> 6] >> (s & 63)) & 1;
            }
            j = bit ? bump[j] : save[j];
        } while (j != i);
    }
    return cycles;
}

template <bool kTrack, bool kSingleWord>
void process_block_impl(const Kernel& k, std::uint64_t lo, std::uint64_t hi,
                        bool collect, Scratch& scratch, BlockTotals& out) {
    std::uint64_t* mask = scratch.mask.data();
    const std::uint32_t mn = k.trans.state_count;
    for (std::uint64_t c = lo; c < hi; ++c) {
        k.fill_mask(c, mask);
        bool hamiltonian;
        if constexpr (kTrack) {
            std::uint32_t cycles = candidate_cycle_count<kSingleWord>(k.trans, mask, scratch);
            hamiltonian = cycles == 1;
            if ((mn - cycles) & 1) {
                ++out.minus;
            } else {
                ++out.plus;
            }
        } else {
            hamiltonian = candidate_is_hamiltonian<kSingleWord>(k.trans, mask);
        }
        if (hamiltonian) {
            ++out.hamiltonian;
            if (collect) out.found.push_back(c);
        }
    }
}

void process_block(const Kernel& k, std::uint64_t lo, std::uint64_t hi, bool track,
                   bool collect, Scratch& scratch, BlockTotals& out) {
    if (track) {
        if (k.mask_words == 1) {
            process_block_impl<true, true>(k, lo, hi, collect, scratch, out);
        } else {
            process_block_impl<true, false>(k, lo, hi, collect, scratch, out);
        }
    } else {
        if (k.mask_words == 1) {
            process_block_impl<false, true>(k, lo, hi, collect, scratch, out);
        } else {
            process_block_impl<false, false>(k, lo, hi, collect, scratch, out);
        }
    }
}

// Merges block results in counter order so checkpoints always describe a
// contiguous completed prefix, whatever the scheduling.
class Aggregator {
public:
    Aggregator(const SearchSpace& s, const EnumerateOptions& opt, std::uint64_t start,
               std::uint64_t carried_ham, SignHistogram carried_signs)
        : space_(s),
          opt_(opt),
          frontier_(start),
          last_saved_(start),
          hamiltonian_(carried_ham),
          signs_(carried_signs) {}

    void submit(std::uint64_t lo, std::uint64_t hi, BlockTotals&& totals) {
        std::lock_guard<std::mutex> lock(mu_);
        pending_.emplace(lo, std::make_pair(hi, std::move(totals)));
        for (auto it = pending_.begin(); it != pending_.end() && it->first == frontier_;
             it = pending_.begin()) {
            const auto& [block_hi, t] = it->second;
            hamiltonian_ += t.hamiltonian;
            signs_.plus += t.plus;
            signs_.minus += t.minus;
            if (opt_.collect_hamiltonians) {
                for (std::uint64_t c : t.found) {
                    if (found_.size() < opt_.collect_limit) found_.push_back(c);
                }
            }
            frontier_ = block_hi;
            pending_.erase(it);
        }
        if (!opt_.checkpoint_path.empty() && frontier_ - last_saved_ >= opt_.checkpoint_interval) {
            save_locked();
        }
    }

    void finish() {
        std::lock_guard<std::mutex> lock(mu_);
        if (!opt_.checkpoint_path.empty()) save_locked();
    }

    std::uint64_t frontier() const { return frontier_; }
    std::uint64_t hamiltonian() const { return hamiltonian_; }
    SignHistogram signs() const { return signs_; }
    std::vector<std::uint64_t>&& take_found() { return std::move(found_); }

private:
    void save_locked() {
        Checkpoint cp;
        cp.m = space_.params.m();
        cp.n = space_.params.n();
        cp.range_lo = space_.range_lo;
        cp.range_hi = space_.range_hi;
        cp.track_signs = opt_.track_signs;
        cp.next_counter = frontier_;
        cp.tested = frontier_ - space_.range_lo;
        cp.hamiltonian_count = hamiltonian_;
        cp.signs = signs_;
        checkpoint_save(cp, opt_.checkpoint_path);
        last_saved_ = frontier_;
    }

    const SearchSpace& space_;
    const EnumerateOptions& opt_;
    std::mutex mu_;
    std::map<std::uint64_t, std::pair<std::uint64_t, BlockTotals>> pending_;
    std::uint64_t frontier_;
    std::uint64_t last_saved_;
    std::uint64_t hamiltonian_;
    SignHistogram signs_;
    std::vector<std::uint64_t> found_;
};

void validate_space(const SearchSpace& s) {
    if (s.free_bits != s.free_prefixes.size()) {
        fail(ErrorKind::InvalidArgument, "free_bits does not match the free prefix list");
    }
    if (s.free_bits > 63) {
        fail(ErrorKind::CapacityExceeded, "counter ranges support at most 63 free bits");
    }
    std::uint64_t space_size = 1ull << s.free_bits;
    if (s.range_lo > s.range_hi || s.range_hi > space_size) {
        fail(ErrorKind::InvalidArgument, "counter range outside [0, 2^free_bits]");
    }
}

}  // namespace

SearchSpace build_search_space(const Params& p, std::uint64_t free_bit_limit) {
    if (free_bit_limit > 63) {
        fail(ErrorKind::InvalidArgument, "free-bit limit above 63 is not representable");
    }
    SearchSpace s{p};

    // Constant prefixes c^(n-1) encode to c * (1 + m + ... + m^(n-2)); for
    // n = 1 the single empty prefix is constant.
    std::uint64_t rep = 0;
    for (std::uint64_t i = 0; i + 1 < p.n(); ++i) rep = rep * p.m() + 1;
    for (std::uint64_t c = 0; c < p.m(); ++c) {
        StateIndex idx = c * rep;
        if (s.pinned.empty() || s.pinned.back() != idx) s.pinned.push_back(idx);
    }

    std::uint64_t free_bits = p.prefix_count() - s.pinned.size();
    if (free_bits > free_bit_limit) {
        fail(ErrorKind::CapacityExceeded,
             std::to_string(free_bits) + " free bits exceed the exhaustive limit of " +
                 std::to_string(free_bit_limit));
    }
    s.free_bits = free_bits;
    s.free_prefixes.reserve(free_bits);
    std::size_t next_pinned = 0;
    for (StateIndex q = 0; q < p.prefix_count(); ++q) {
        if (next_pinned < s.pinned.size() && s.pinned[next_pinned] == q) {
            ++next_pinned;
        } else {
            s.free_prefixes.push_back(q);
        }
    }
    s.range_lo = 0;
    s.range_hi = 1ull << free_bits;
    return s;
}

FeedbackTable counter_to_feedback(const SearchSpace& s, std::uint64_t counter) {
    validate_space(s);
    if (s.free_bits < 64 && counter >= (1ull << s.free_bits)) {
        fail(ErrorKind::OutOfRange, "counter outside [0, 2^free_bits)");
    }
    FeedbackTable b(s.params);
    for (StateIndex p : s.pinned) b.set_bit(p, true);
    for (std::size_t j = 0; j < s.free_prefixes.size(); ++j) {
        if ((counter >> j) & 1) b.set_bit(s.free_prefixes[j], true);
    }
    return b;
}

std::vector<SearchSpace> partition(const SearchSpace& s, std::uint64_t workers) {
    if (workers == 0) fail(ErrorKind::InvalidArgument, "workers must be at least 1");
    std::uint64_t len = s.size();
    std::uint64_t base = len / workers;
    std::uint64_t extra = len % workers;
    std::vector<SearchSpace> parts;
    parts.reserve(workers);
    std::uint64_t lo = s.range_lo;
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t size = base + (w < extra ? 1 : 0);
        SearchSpace part = s;
        part.range_lo = lo;
        part.range_hi = lo + size;
        parts.push_back(std::move(part));
        lo += size;
    }
    return parts;
}

bool reports_equal(const EnumerationReport& a, const EnumerationReport& b) {
    return a.params == b.params && a.range_lo == b.range_lo && a.range_hi == b.range_hi &&
           a.tested == b.tested && a.hamiltonian_count == b.hamiltonian_count &&
           a.track_signs == b.track_signs && a.signs == b.signs;
}

EnumerationReport merge_reports(const std::vector<EnumerationReport>& parts) {
    if (parts.empty()) fail(ErrorKind::InvalidArgument, "nothing to merge");
    std::vector<const EnumerationReport*> ordered;
    ordered.reserve(parts.size());
    for (const auto& r : parts) ordered.push_back(&r);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) { return a->range_lo < b->range_lo; });

    EnumerationReport merged = *ordered.front();
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        const EnumerationReport& r = *ordered[i];
        if (!(r.params == merged.params) || r.track_signs != merged.track_signs) {
            fail(ErrorKind::InvalidArgument, "sub-reports describe different runs");
        }
        if (r.range_lo != merged.range_hi) {
            fail(ErrorKind::InvalidArgument, "sub-report ranges are not contiguous");
        }
        merged.range_hi = r.range_hi;
        merged.tested += r.tested;
        merged.hamiltonian_count += r.hamiltonian_count;
        merged.signs.plus += r.signs.plus;
        merged.signs.minus += r.signs.minus;
        merged.elapsed_seconds += r.elapsed_seconds;
    }
    return merged;
}

EnumerationResult enumerate_space(const SearchSpace& s, const EnumerateOptions& opt) {
    if (opt.workers == 0) fail(ErrorKind::InvalidArgument, "workers must be at least 1");
    validate_space(s);
    auto t0 = std::chrono::steady_clock::now();

    std::uint64_t start = s.range_lo;
    std::uint64_t carried_ham = 0;
    SignHistogram carried_signs;
    if (!opt.checkpoint_path.empty() && std::filesystem::exists(opt.checkpoint_path)) {
        Checkpoint cp = checkpoint_load(opt.checkpoint_path);
        if (cp.m != s.params.m() || cp.n != s.params.n() || cp.range_lo != s.range_lo ||
            cp.range_hi != s.range_hi || cp.track_signs != opt.track_signs) {
            fail(ErrorKind::CheckpointRejected,
                 "checkpoint describes a different search space or sign mode");
        }
        if (cp.next_counter < s.range_lo || cp.next_counter > s.range_hi) {
            fail(ErrorKind::CheckpointRejected, "checkpoint counter outside the range");
        }
        start = cp.next_counter;
        carried_ham = cp.hamiltonian_count;
        carried_signs = cp.signs;
    }

    std::uint64_t end = s.range_hi;
    if (opt.stop_after < end - start) end = start + opt.stop_after;

    Kernel kernel = build_kernel(s);
    Aggregator agg(s, opt, start, carried_ham, carried_signs);

    std::uint64_t len = end - start;
    std::uint64_t block = std::clamp<std::uint64_t>(len / (opt.workers * 16), 1024, 65536);
    std::uint64_t thread_count = std::min<std::uint64_t>(opt.workers, (len + block - 1) / block);

    std::atomic<std::uint64_t> next{start};
    std::mutex error_mu;
    std::exception_ptr first_error;
    auto worker = [&]() {
        try {
            Scratch scratch;
            scratch.mask.resize(kernel.mask_words);
            if (opt.track_signs) scratch.stamp.assign(kernel.trans.state_count, 0);
            for (;;) {
                std::uint64_t lo = next.fetch_add(block, std::memory_order_relaxed);
                if (lo >= end) break;
                std::uint64_t hi = std::min(lo + block, end);
                BlockTotals totals;
                process_block(kernel, lo, hi, opt.track_signs, opt.collect_hamiltonians,
                              scratch, totals);
                agg.submit(lo, hi, std::move(totals));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!first_error) first_error = std::current_exception();
            next.store(end, std::memory_order_relaxed);  // drain remaining work
        }
    };

    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(thread_count);
        for (std::uint64_t i = 0; i < thread_count; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    agg.finish();

    EnumerationResult result{EnumerationReport{s.params}};
    result.report.range_lo = s.range_lo;
    result.report.range_hi = agg.frontier();
    result.report.tested = agg.frontier() - s.range_lo;
    result.report.hamiltonian_count = agg.hamiltonian();
    result.report.track_signs = opt.track_signs;
    result.report.signs = agg.signs();
    result.hamiltonian_counters = agg.take_found();
    result.completed = agg.frontier() == s.range_hi;
    result.report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

namespace {

void write_checkpoint_stream(std::ostream& out, const Checkpoint& c) {
    out << "sbham-checkpoint " << c.version << "\n";
    out << "m " << c.m << "\n";
    out << "n " << c.n << "\n";
    out << "range " << c.range_lo << " " << c.range_hi << "\n";
    out << "track_signs " << (c.track_signs ? 1 : 0) << "\n";
    out << "next " << c.next_counter << "\n";
    out << "tested " << c.tested << "\n";
    out << "hamiltonian " << c.hamiltonian_count << "\n";
    out << "sign_plus " << c.signs.plus << "\n";
    out << "sign_minus " << c.signs.minus << "\n";
}

std::uint64_t parse_u64(const std::string& token) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        fail(ErrorKind::CheckpointRejected, "malformed number '" + token + "' in checkpoint");
    }
    return value;
}

}  // namespace

void checkpoint_save(const Checkpoint& c, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) fail(ErrorKind::IoError, "cannot write checkpoint file " + tmp);
        write_checkpoint_stream(out, c);
        if (!out.flush()) fail(ErrorKind::IoError, "short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) fail(ErrorKind::IoError, "cannot move checkpoint into place: " + ec.message());
}

Checkpoint checkpoint_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::CheckpointRejected, "cannot open checkpoint file " + path);

    auto next_line = [&in, &path]() {
        std::string line;
        if (!std::getline(in, line)) {
            fail(ErrorKind::CheckpointRejected, "truncated checkpoint file " + path);
        }
        return line;
    };
    auto split = [](const std::string& line) {
        std::vector<std::string> tokens;
        std::istringstream ss(line);
        std::string t;
        while (ss >> t) tokens.push_back(t);
        return tokens;
    };

    Checkpoint c;
    auto header = split(next_line());
    if (header.size() != 2 || header[0] != "sbham-checkpoint") {
        fail(ErrorKind::CheckpointRejected, "missing checkpoint header");
    }
    if (parse_u64(header[1]) != 1) {
        fail(ErrorKind::CheckpointRejected, "unsupported checkpoint version " + header[1]);
    }
    c.version = 1;

    auto expect = [&](const char* key, std::size_t values) {
        auto tokens = split(next_line());
        if (tokens.size() != values + 1 || tokens[0] != key) {
            fail(ErrorKind::CheckpointRejected,
                 std::string("expected '") + key + "' record in checkpoint");
        }
        tokens.erase(tokens.begin());
        return tokens;
    };

    c.m = parse_u64(expect("m", 1)[0]);
    c.n = parse_u64(expect("n", 1)[0]);
    auto range = expect("range", 2);
    c.range_lo = parse_u64(range[0]);
    c.range_hi = parse_u64(range[1]);
    std::uint64_t track = parse_u64(expect("track_signs", 1)[0]);
    if (track > 1) fail(ErrorKind::CheckpointRejected, "track_signs must be 0 or 1");
    c.track_signs = track == 1;
    c.next_counter = parse_u64(expect("next", 1)[0]);
    c.tested = parse_u64(expect("tested", 1)[0]);
    c.hamiltonian_count = parse_u64(expect("hamiltonian", 1)[0]);
    c.signs.plus = parse_u64(expect("sign_plus", 1)[0]);
    c.signs.minus = parse_u64(expect("sign_minus", 1)[0]);

    if (c.range_lo > c.range_hi || c.next_counter < c.range_lo || c.next_counter > c.range_hi) {
        fail(ErrorKind::CheckpointRejected, "checkpoint counters are inconsistent");
    }
    if (c.tested != c.next_counter - c.range_lo) {
        fail(ErrorKind::CheckpointRejected, "tested count does not match the counter");
    }
    std::uint64_t histogram_total = c.signs.plus + c.signs.minus;
    if (c.track_signs ? histogram_total != c.tested : histogram_total != 0) {
        fail(ErrorKind::CheckpointRejected, "sign histogram does not match the counts");
    }
    return c;
}

SampleReport sample_signs(const Params& p, std::uint64_t trials, std::uint64_t seed,
                          bool pruned, std::uint64_t workers) {
    if (trials == 0) fail(ErrorKind::EmptySample, "sampling needs at least one trial");
    if (workers == 0) fail(ErrorKind::InvalidArgument, "workers must be at least 1");
    auto t0 = std::chrono::steady_clock::now();

    Transitions trans = build_transitions(p);
    const std::uint64_t pc = p.prefix_count();
    const std::uint32_t words = static_cast<std::uint32_t>((pc + 63) / 64);

    std::vector<std::uint64_t> pinned(words, 0);
    if (pruned) {
        std::uint64_t rep = 0;
        for (std::uint64_t i = 0; i + 1 < p.n(); ++i) rep = rep * p.m() + 1;
        for (std::uint64_t c = 0; c < p.m(); ++c) {
            StateIndex idx = c * rep;
            pinned[idx >> 6] |= 1ull << (idx & 63);
        }
    }
    const std::uint64_t tail = (pc & 63) ? (1ull << (pc & 63)) - 1 : ~0ull;

    const int target = sign_sigma(p);

    struct Tally {
        std::uint64_t mismatches = 0;
        std::uint64_t plus = 0;
        std::uint64_t minus = 0;
    };

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
        Scratch scratch;
        scratch.mask.resize(words);
        scratch.stamp.assign(trans.state_count, 0);
        for (std::uint64_t t = lo; t < hi; ++t) {
            SplitMix64 gen = SplitMix64::stream(seed, t);
            for (std::uint32_t w = 0; w < words; ++w) scratch.mask[w] = gen.next();
            scratch.mask[words - 1] &= tail;
            if (pruned) {
                for (std::uint32_t w = 0; w < words; ++w) scratch.mask[w] |= pinned[w];
            }
            std::uint32_t cycles =
                words == 1 ? candidate_cycle_count<true>(trans, scratch.mask.data(), scratch)
                           : candidate_cycle_count<false>(trans, scratch.mask.data(), scratch);
            int sign = ((trans.state_count - cycles) & 1) ? -1 : +1;
            if (sign > 0) {
                ++tally.plus;
            } else {
                ++tally.minus;
            }
            if (sign != target) ++tally.mismatches;
        }
    };

    std::uint64_t thread_count = std::min(workers, trials);
    std::vector<Tally> tallies(thread_count);
    if (thread_count <= 1) {
        run_range(0, trials, tallies[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(thread_count);
        std::uint64_t base = trials / thread_count;
        std::uint64_t extra = trials % thread_count;
        std::uint64_t lo = 0;
        for (std::uint64_t w = 0; w < thread_count; ++w) {
            std::uint64_t hi = lo + base + (w < extra ? 1 : 0);
            threads.emplace_back(run_range, lo, hi, std::ref(tallies[w]));
            lo = hi;
        }
        for (auto& t : threads) t.join();
    }

    SampleReport report{p};
    report.trials = trials;
    report.seed = seed;
    report.pruned = pruned;
    for (const Tally& tally : tallies) {
        report.mismatches += tally.mismatches;
        report.signs.plus += tally.plus;
        report.signs.minus += tally.minus;
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace sbham
