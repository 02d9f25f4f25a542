// sbham: SB(m,n) digraph toolkit.
//
// Subcommands: verify, necklace, burnside, sign, verdict, enumerate,
// sample, sequence. Every command prints a structured report in text, json
// or csv. Exit codes: 0 success, 1 the checked property fails (invalid
// certificate, empty search, failed de Bruijn check, sign mismatches),
// 2 usage, 3 capacity/IO.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "sbham/certificate.hpp"
#include "sbham/choice_set_io.hpp"
#include "sbham/debruijn.hpp"
#include "sbham/enumeration.hpp"
#include "sbham/necklace.hpp"
#include "sbham/permutation.hpp"
#include "sbham/word.hpp"

using namespace sbham;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Output {
    std::string format = "text";
    bool no_timing = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit_json(ojson doc, const Output& out, double elapsed) {
    if (!out.no_timing) doc["elapsed_seconds"] = elapsed;
    std::cout << doc.dump(2) << "\n";
}

// Generic key,value CSV from a flat json document; arrays join with ';'.
void emit_csv(const ojson& doc, const Output& out, double elapsed) {
    std::cout << "key,value\n";
    for (const auto& [key, value] : doc.items()) {
        std::cout << key << ",";
        if (value.is_array()) {
            std::string sep;
            for (const auto& item : value) {
                std::cout << sep << (item.is_string() ? item.get<std::string>() : item.dump());
                sep = ";";
            }
        } else if (value.is_string()) {
            std::string s = value.get<std::string>();
            if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
                std::string quoted = "\"";
                for (char c : s) {
                    if (c == '"') quoted += '"';
                    quoted += c;
                }
                quoted += '"';
                s = quoted;
            }
            std::cout << s;
        } else {
            std::cout << value.dump();
        }
        std::cout << "\n";
    }
    if (!out.no_timing) std::cout << "elapsed_seconds," << elapsed << "\n";
}

void emit_text(const ojson& doc, const Output& out, double elapsed) {
    for (const auto& [key, value] : doc.items()) {
        if (key == "schema_version" || key == "command") continue;
        std::cout << key << ": ";
        if (value.is_array()) {
            std::string sep;
            for (const auto& item : value) {
                std::cout << sep << (item.is_string() ? item.get<std::string>() : item.dump());
                sep = " ";
            }
        } else if (value.is_string()) {
            std::cout << value.get<std::string>();
        } else if (value.is_boolean()) {
            std::cout << (value.get<bool>() ? "yes" : "no");
        } else {
            std::cout << value.dump();
        }
        std::cout << "\n";
    }
    if (!out.no_timing) std::cout << "elapsed_seconds: " << elapsed << "\n";
}

void emit(const ojson& doc, const Output& out, double elapsed) {
    if (out.format == "json") {
        emit_json(doc, out, elapsed);
    } else if (out.format == "csv") {
        emit_csv(doc, out, elapsed);
    } else {
        emit_text(doc, out, elapsed);
    }
}

ojson report_header(const char* command, const Params& p) {
    ojson doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["m"] = p.m();
    doc["n"] = p.n();
    return doc;
}

std::string suffix_text(StateIndex idx, const Params& p) {
    std::vector<std::uint64_t> digits(p.n() - 1);
    StateIndex v = idx;
    for (std::uint64_t k = p.n() - 1; k-- > 0;) {
        digits[k] = v % p.m();
        v /= p.m();
    }
    return digits_to_text(digits);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

std::uint64_t parse_u64_flag(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, std::string("cannot parse ") + what + " '" + text + "'");
    }
}

// ---- commands ---------------------------------------------------------

int run_verify(const Params& p, const std::string& cycle, const std::string& out_path,
               const Output& out) {
    auto t0 = std::chrono::steady_clock::now();
    ojson doc = report_header("verify", p);
    doc["length"] = cycle.size();

    Certificate cert{p, {}};
    try {
        cert = certificate_from_text(p, cycle);
    } catch (const Error& e) {
        doc["valid"] = false;
        doc["error"] = error_kind_name(e.kind());
        doc["detail"] = e.what();
        emit(doc, out, seconds_since(t0));
        return 1;
    }

    VerifyResult r = verify_certificate(cert);
    doc["valid"] = r.valid;
    if (r.valid) {
        ojson suffixes = ojson::array();
        for (StateIndex idx : r.choice_set->suffixes_in_s()) {
            suffixes.push_back(suffix_text(idx, p));
        }
        doc["choice_set_size"] = r.choice_set->suffixes_in_s().size();
        doc["suffixes"] = std::move(suffixes);
        doc["feedback_weight"] = r.choice_set->weight();
        if (!out_path.empty()) save_choice_set(*r.choice_set, out_path);
    } else {
        doc["error"] = certificate_fail_name(r.fail);
        doc["error_index"] = r.fail_index;
    }
    emit(doc, out, seconds_since(t0));
    return r.valid ? 0 : 1;
}

int run_necklace(const Params& p, bool brute, const Output& out) {
    auto t0 = std::chrono::steady_clock::now();
    ojson doc = report_header("necklace", p);
    doc["necklaces"] = necklace_count(p);
    NecklaceParity parity = necklace_parity(p);
    doc["parity"] = parity.is_even ? "even" : "odd";
    if (parity.half_witness) doc["parity_witness"] = *parity.half_witness;
    if (brute) {
        std::uint64_t cap = kDefaultBruteForceCap;
        if (const char* env = std::getenv("SBHAM_BRUTEFORCE_CAP")) {
            cap = parse_u64_flag(env, "SBHAM_BRUTEFORCE_CAP");
        }
        doc["bruteforce"] = necklace_count_bruteforce(p, cap);
    }
    emit(doc, out, seconds_since(t0));
    return 0;
}

int run_burnside(const Params& p, const Output& out) {
    auto t0 = std::chrono::steady_clock::now();
    CountingReport r = counting_report(p);
    double elapsed = seconds_since(t0);

    if (out.format == "csv") {
        std::cout << "k,fix_rotation,fix_reflection\n";
        for (std::uint64_t k = 0; k < p.n(); ++k) {
            std::cout << k << "," << r.rotation_fixes[k] << "," << r.reflection_fixes[k] << "\n";
        }
        std::cout << "N," << r.necklaces << "\n";
        std::cout << "dihedral_orbits," << r.dihedral_orbits << "\n";
        if (r.rfix) std::cout << "rfix," << *r.rfix << "\n";
        if (!out.no_timing) std::cout << "elapsed_seconds," << elapsed << "\n";
        return 0;
    }

    ojson doc = report_header("burnside", p);
    doc["necklaces"] = r.necklaces;
    doc["rotation_fixes"] = r.rotation_fixes;
    doc["reflection_fixes"] = r.reflection_fixes;
    doc["dihedral_orbits"] = r.dihedral_orbits;
    if (r.rfix) doc["rfix"] = *r.rfix;
    doc["n_parity"] = r.n_even ? "even" : "odd";
    emit(doc, out, elapsed);
    return 0;
}

int run_sign(const Params& p, const std::string& choice_set_path, const Output& out) {
    auto t0 = std::chrono::steady_clock::now();
    ojson doc = report_header("sign", p);
    doc["sgn_sigma"] = sign_sigma(p);
    if (!choice_set_path.empty()) {
        FeedbackTable b = load_choice_set(choice_set_path);
        if (!(b.params() == p)) {
            fail(ErrorKind::ParamsMismatch, "choice-set file is for different (m, n)");
        }
        doc["feedback_weight"] = b.weight();
        doc["sgn_adjust"] = sign_adjust(b);
        doc["sgn_f"] = sign_adjust(b) * sign_sigma(p);
    }
    emit(doc, out, seconds_since(t0));
    return 0;
}

int run_verdict(const Params& p, const Output& out) {
    auto t0 = std::chrono::steady_clock::now();
    ObstructionReport r = obstruction_verdict(p);
    ojson doc = report_header("verdict", p);
    doc["residue_class"] = residue_class_name(r.residue);
    doc["n_parity"] = r.n_even ? "even" : "odd";
    doc["sgn_sigma"] = r.sgn_sigma;
    doc["required_cycle_sign"] = r.required_cycle_sign;
    doc["obstructed"] = r.obstructed;
    doc["reason"] = r.reason;
    emit(doc, out, seconds_since(t0));
    return 0;
}

struct EnumerateArgs {
    std::string range;
    std::uint64_t workers = 0;
    bool track_signs = false;
    std::string checkpoint;
    std::uint64_t stop_after = 0;
    bool extended = false;
    bool list_hamiltonian = false;
};

int run_enumerate(const Params& p, const EnumerateArgs& args, const Output& out) {
    auto t0 = std::chrono::steady_clock::now();

    std::uint64_t limit = args.extended ? kExtendedFreeBitLimit : kDefaultFreeBitLimit;
    SearchSpace space = build_search_space(p, limit);
    if (!args.range.empty()) {
        auto colon = args.range.find(':');
        if (colon == std::string::npos) {
            fail(ErrorKind::InvalidArgument, "--range wants lo:hi");
        }
        std::uint64_t lo = parse_u64_flag(args.range.substr(0, colon), "--range lo");
        std::uint64_t hi = parse_u64_flag(args.range.substr(colon + 1), "--range hi");
        if (lo > hi || hi > space.range_hi) {
            fail(ErrorKind::InvalidArgument, "--range outside [0, 2^free_bits]");
        }
        space.range_lo = lo;
        space.range_hi = hi;
    }

    EnumerateOptions opt;
    opt.track_signs = args.track_signs;
    opt.workers = args.workers ? args.workers
                               : std::max(1u, std::thread::hardware_concurrency());
    opt.checkpoint_path = args.checkpoint;
    if (args.stop_after) opt.stop_after = args.stop_after;
    opt.collect_hamiltonians = args.list_hamiltonian;

    EnumerationResult r = enumerate_space(space, opt);

    ojson doc = report_header("enumerate", p);
    doc["free_bits"] = space.free_bits;
    doc["space_size"] = 1ull << space.free_bits;
    doc["range_lo"] = r.report.range_lo;
    doc["range_hi"] = r.report.range_hi;
    doc["tested"] = r.report.tested;
    doc["hamiltonian_count"] = r.report.hamiltonian_count;
    doc["completed"] = r.completed;
    if (args.track_signs) {
        doc["sign_plus"] = r.report.signs.plus;
        doc["sign_minus"] = r.report.signs.minus;
    }
    if (args.list_hamiltonian) {
        ojson found = ojson::array();
        for (std::uint64_t c : r.hamiltonian_counters) {
            FeedbackTable b = counter_to_feedback(space, c);
            ojson item;
            item["counter"] = c;
            ojson suffixes = ojson::array();
            if (p.m() <= 36) {
                for (StateIndex idx : b.suffixes_in_s()) suffixes.push_back(suffix_text(idx, p));
            }
            item["suffixes"] = std::move(suffixes);
            found.push_back(std::move(item));
        }
        doc["hamiltonian"] = std::move(found);
    }
    emit(doc, out, seconds_since(t0));
    return (r.completed && r.report.hamiltonian_count == 0) ? 1 : 0;
}

int run_sample(const Params& p, std::uint64_t trials, std::uint64_t seed, bool pruned,
               std::uint64_t workers, const Output& out) {
    auto t0 = std::chrono::steady_clock::now();
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    SampleReport r = sample_signs(p, trials, seed, pruned, workers);
    ojson doc = report_header("sample", p);
    doc["trials"] = r.trials;
    doc["seed"] = r.seed;
    doc["pruned"] = r.pruned;
    doc["sgn_sigma"] = sign_sigma(p);
    doc["mismatches"] = r.mismatches;
    doc["sign_plus"] = r.signs.plus;
    doc["sign_minus"] = r.signs.minus;
    emit(doc, out, seconds_since(t0));
    return (p.m() % 2 == 1 && r.mismatches > 0) ? 1 : 0;
}

struct SequenceArgs {
    std::string choice_set;
    std::string seed_word;
    std::uint64_t length = 0;
    bool check = false;
};

int run_sequence(const Params& p, const SequenceArgs& args, const Output& out) {
    auto t0 = std::chrono::steady_clock::now();
    FeedbackTable b = load_choice_set(args.choice_set);
    if (!(b.params() == p)) {
        fail(ErrorKind::ParamsMismatch, "choice-set file is for different (m, n)");
    }
    Word seed = args.seed_word.empty() ? zero_word(p) : word_from_text(args.seed_word, p);
    std::uint64_t length = args.length ? args.length : p.state_count();
    if (args.check && length != p.state_count()) {
        fail(ErrorKind::InvalidArgument, "--check needs length m^n");
    }

    Sequence s = sequence_from_feedback(b, seed, length);
    bool ok = true;
    ojson doc = report_header("sequence", p);
    doc["length"] = length;
    doc["sequence"] = sequence_to_text(s);
    if (args.check) {
        ok = is_debruijn(s);
        doc["de_bruijn"] = ok;
    }
    emit(doc, out, seconds_since(t0));
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sbham: shift-and-save-or-bump digraph toolkit (successor "
        "permutations, Hamiltonian certificates, necklace counting, the sign "
        "obstruction, exhaustive search)"};
    app.require_subcommand(1);

    Output out;
    std::uint64_t m = 0, n = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-m", m, "alphabet size (>= 2)")->required();
        cmd->add_option("-n", n, "word length (>= 1)")->required();
        cmd->add_option("--format", out.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_flag("--no-timing", out.no_timing, "omit the elapsed field");
    };

    auto* verify = app.add_subcommand("verify", "check a Hamiltonian cycle certificate");
    std::string cycle_text, cycle_file, choice_set_out;
    add_common(verify);
    auto* copt = verify->add_option("--cycle", cycle_text, "certificate digit string");
    auto* fopt = verify->add_option("--cycle-file", cycle_file, "file with the digit string");
    copt->excludes(fopt);
    verify->add_option("--choice-set-out", choice_set_out,
                       "write the extracted choice set to this file");

    auto* necklace = app.add_subcommand("necklace", "necklace count N(n,m) and parity");
    bool brute = false;
    add_common(necklace);
    necklace->add_flag("--brute", brute, "cross-check by brute-force orbit count");

    auto* burnside = app.add_subcommand("burnside", "full cyclic/dihedral Burnside table");
    add_common(burnside);

    auto* sign = app.add_subcommand("sign", "sgn(sigma), and sgn(f_S) for a choice set");
    std::string sign_choice_set;
    add_common(sign);
    sign->add_option("--choice-set", sign_choice_set, "choice-set file");

    auto* verdict = app.add_subcommand("verdict", "Hamiltonicity obstruction verdict");
    add_common(verdict);

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive search over choice sets");
    EnumerateArgs eargs;
    add_common(enumerate);
    enumerate->add_option("--range", eargs.range, "counter range lo:hi (default: all)");
    enumerate->add_option("--workers", eargs.workers, "worker threads (default: cores)");
    enumerate->add_flag("--track-signs", eargs.track_signs,
                        "decompose every candidate and histogram sgn(f_S)");
    enumerate->add_option("--checkpoint", eargs.checkpoint,
                          "checkpoint file (resumes if it exists)");
    enumerate->add_option("--stop-after", eargs.stop_after,
                          "stop after this many candidates in this run");
    enumerate->add_flag("--extended", eargs.extended,
                        "allow up to 2^32 candidates (requires --checkpoint)");
    enumerate->add_flag("--list-hamiltonian", eargs.list_hamiltonian,
                        "list the Hamiltonian choice sets found");

    auto* sample = app.add_subcommand("sample", "sample random b and check sgn(f_S) = sgn(sigma)");
    std::uint64_t trials = 0, seed = 0, sample_workers = 0;
    bool pruned = false;
    add_common(sample);
    sample->add_option("--trials", trials, "number of samples")->required();
    sample->add_option("--seed", seed, "PRNG seed (SplitMix64 streams)");
    sample->add_flag("--pruned", pruned, "force b = 1 on constant prefixes");
    sample->add_option("--workers", sample_workers, "worker threads (default: cores)");

    auto* sequence = app.add_subcommand("sequence", "run the register and print the sequence");
    SequenceArgs sargs;
    add_common(sequence);
    sequence->add_option("--choice-set", sargs.choice_set, "choice-set file")->required();
    sequence->add_option("--seed-word", sargs.seed_word, "seed word (default: all zeros)");
    sequence->add_option("--length", sargs.length, "output length (default: m^n)");
    sequence->add_flag("--check", sargs.check, "verify the de Bruijn window property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Params p(m, n);
        if (verify->parsed()) {
            if (cycle_text.empty() && cycle_file.empty()) {
                std::cerr << "verify needs --cycle or --cycle-file\n";
                return 2;
            }
            std::string text = cycle_text.empty() ? read_file(cycle_file) : cycle_text;
            return run_verify(p, text, choice_set_out, out);
        }
        if (necklace->parsed()) return run_necklace(p, brute, out);
        if (burnside->parsed()) return run_burnside(p, out);
        if (sign->parsed()) return run_sign(p, sign_choice_set, out);
        if (verdict->parsed()) return run_verdict(p, out);
        if (enumerate->parsed()) {
            if (eargs.extended && eargs.checkpoint.empty()) {
                std::cerr << "--extended requires --checkpoint\n";
                return 2;
            }
            return run_enumerate(p, eargs, out);
        }
        if (sample->parsed()) return run_sample(p, trials, seed, pruned, sample_workers, out);
        if (sequence->parsed()) return run_sequence(p, sargs, out);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::CapacityExceeded:
            case ErrorKind::IoError:
            case ErrorKind::CheckpointRejected:
                return 3;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
