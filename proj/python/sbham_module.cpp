#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbham/certificate.hpp"
#include "sbham/choice_set_io.hpp"
#include "sbham/debruijn.hpp"
#include "sbham/enumeration.hpp"
#include "sbham/necklace.hpp"
#include "sbham/permutation.hpp"
#include "sbham/word.hpp"

namespace py = pybind11;
using namespace sbham;

namespace {

FeedbackTable table_from_suffixes(std::uint64_t m, std::uint64_t n,
                                  const std::vector<std::string>& suffixes) {
    Params p(m, n);
    std::vector<StateIndex> s;
    s.reserve(suffixes.size());
    for (const auto& text : suffixes) {
        auto digits = digits_from_text(text, p);
        if (digits.size() + 1 != p.n()) {
            fail(ErrorKind::InvalidWord, "suffix '" + text + "' must have n-1 digits");
        }
        StateIndex idx = 0;
        for (std::uint64_t d : digits) idx = idx * p.m() + d;
        s.push_back(idx);
    }
    return FeedbackTable::from_suffix_set(p, s);
}

std::vector<std::string> suffix_texts(const FeedbackTable& b) {
    const Params& p = b.params();
    std::vector<std::string> out;
    for (StateIndex idx : b.suffixes_in_s()) {
        std::vector<std::uint64_t> digits(p.n() - 1);
        StateIndex v = idx;
        for (std::uint64_t k = p.n() - 1; k-- > 0;) {
            digits[k] = v % p.m();
            v /= p.m();
        }
        out.push_back(digits_to_text(digits));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(sbham, mod) {
    mod.doc() =
        "Shift-and-save-or-bump digraph toolkit: successor permutations, "
        "Hamiltonian certificates, necklace/bracelet counting and the sign "
        "obstruction.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    mod.def(
        "necklace_count",
        [](std::uint64_t m, std::uint64_t n) { return necklace_count(Params(m, n)); },
        py::arg("m"), py::arg("n"));

    mod.def(
        "necklace_count_bruteforce",
        [](std::uint64_t m, std::uint64_t n, std::uint64_t cap) {
            return necklace_count_bruteforce(Params(m, n), cap);
        },
        py::arg("m"), py::arg("n"), py::arg("cap") = kDefaultBruteForceCap);

    mod.def(
        "burnside",
        [](std::uint64_t m, std::uint64_t n) {
            CountingReport r = counting_report(Params(m, n));
            py::dict d;
            d["m"] = m;
            d["n"] = n;
            d["necklaces"] = r.necklaces;
            d["rotation_fixes"] = r.rotation_fixes;
            d["reflection_fixes"] = r.reflection_fixes;
            d["dihedral_orbits"] = r.dihedral_orbits;
            d["rfix"] = r.rfix ? py::cast(*r.rfix) : py::none();
            d["n_parity"] = r.n_even ? "even" : "odd";
            return d;
        },
        py::arg("m"), py::arg("n"));

    mod.def(
        "sign_sigma",
        [](std::uint64_t m, std::uint64_t n) { return sign_sigma(Params(m, n)); },
        py::arg("m"), py::arg("n"));

    mod.def(
        "sign_adjust",
        [](std::uint64_t m, std::uint64_t n, const std::vector<std::string>& suffixes) {
            return sign_adjust(table_from_suffixes(m, n, suffixes));
        },
        py::arg("m"), py::arg("n"), py::arg("suffixes"));

    mod.def(
        "verdict",
        [](std::uint64_t m, std::uint64_t n) {
            ObstructionReport r = obstruction_verdict(Params(m, n));
            py::dict d;
            d["m"] = m;
            d["n"] = n;
            d["residue_class"] = residue_class_name(r.residue);
            d["n_parity"] = r.n_even ? "even" : "odd";
            d["sgn_sigma"] = r.sgn_sigma;
            d["required_cycle_sign"] = r.required_cycle_sign;
            d["obstructed"] = r.obstructed;
            d["reason"] = r.reason;
            return d;
        },
        py::arg("m"), py::arg("n"));

    mod.def(
        "verify",
        [](std::uint64_t m, std::uint64_t n, const std::string& cycle) {
            Params p(m, n);
            py::dict d;
            d["valid"] = false;
            try {
                VerifyResult r = verify_certificate(certificate_from_text(p, cycle));
                d["valid"] = r.valid;
                if (r.valid) {
                    d["suffixes"] = suffix_texts(*r.choice_set);
                } else {
                    d["error"] = certificate_fail_name(r.fail);
                    d["error_index"] = r.fail_index;
                }
            } catch (const Error& e) {
                d["error"] = error_kind_name(e.kind());
            }
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("cycle"));

    mod.def(
        "successor",
        [](std::uint64_t m, std::uint64_t n, const std::string& word,
           const std::vector<std::string>& suffixes) {
            FeedbackTable b = table_from_suffixes(m, n, suffixes);
            return word_to_text(successor(word_from_text(word, b.params()), b), b.params());
        },
        py::arg("m"), py::arg("n"), py::arg("word"), py::arg("suffixes"));

    mod.def(
        "predecessor",
        [](std::uint64_t m, std::uint64_t n, const std::string& word,
           const std::vector<std::string>& suffixes) {
            FeedbackTable b = table_from_suffixes(m, n, suffixes);
            return word_to_text(predecessor(word_from_text(word, b.params()), b), b.params());
        },
        py::arg("m"), py::arg("n"), py::arg("word"), py::arg("suffixes"));

    mod.def(
        "orbit_length",
        [](std::uint64_t m, std::uint64_t n, const std::vector<std::string>& suffixes) {
            return hamiltonian_orbit_length(table_from_suffixes(m, n, suffixes));
        },
        py::arg("m"), py::arg("n"), py::arg("suffixes"));

    mod.def(
        "sequence",
        [](std::uint64_t m, std::uint64_t n, const std::vector<std::string>& suffixes,
           const std::string& seed, std::uint64_t length) {
            FeedbackTable b = table_from_suffixes(m, n, suffixes);
            const Params& p = b.params();
            Word w = seed.empty() ? zero_word(p) : word_from_text(seed, p);
            if (length == 0) length = p.state_count();
            return sequence_to_text(sequence_from_feedback(b, w, length));
        },
        py::arg("m"), py::arg("n"), py::arg("suffixes"), py::arg("seed") = "",
        py::arg("length") = 0);

    mod.def(
        "is_debruijn",
        [](std::uint64_t m, std::uint64_t n, const std::string& text) {
            return is_debruijn(sequence_from_text(Params(m, n), text));
        },
        py::arg("m"), py::arg("n"), py::arg("text"));

    mod.def(
        "enumerate_range",
        [](std::uint64_t m, std::uint64_t n, py::object lo, py::object hi, bool track_signs,
           std::uint64_t workers) {
            SearchSpace s = build_search_space(Params(m, n));
            if (!lo.is_none()) s.range_lo = lo.cast<std::uint64_t>();
            if (!hi.is_none()) s.range_hi = hi.cast<std::uint64_t>();
            EnumerateOptions opt;
            opt.track_signs = track_signs;
            opt.workers = workers;
            EnumerationResult r = enumerate_space(s, opt);
            py::dict d;
            d["m"] = m;
            d["n"] = n;
            d["free_bits"] = s.free_bits;
            d["range_lo"] = r.report.range_lo;
            d["range_hi"] = r.report.range_hi;
            d["tested"] = r.report.tested;
            d["hamiltonian_count"] = r.report.hamiltonian_count;
            if (track_signs) {
                d["sign_plus"] = r.report.signs.plus;
                d["sign_minus"] = r.report.signs.minus;
            }
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("lo") = py::none(), py::arg("hi") = py::none(),
        py::arg("track_signs") = false, py::arg("workers") = 1);

    mod.def(
        "sample_signs",
        [](std::uint64_t m, std::uint64_t n, std::uint64_t trials, std::uint64_t seed,
           bool pruned) {
            SampleReport r = sample_signs(Params(m, n), trials, seed, pruned);
            py::dict d;
            d["m"] = m;
            d["n"] = n;
            d["trials"] = r.trials;
            d["seed"] = r.seed;
            d["pruned"] = r.pruned;
            d["mismatches"] = r.mismatches;
            d["sign_plus"] = r.signs.plus;
            d["sign_minus"] = r.signs.minus;
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("trials"), py::arg("seed") = 0,
        py::arg("pruned") = false);
}
