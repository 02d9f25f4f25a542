#include "sbham/choice_set_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sbham/word.hpp"

namespace sbham {

namespace {

using json = nlohmann::ordered_json;

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::uint64_t get_count(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
        fail(ErrorKind::InvalidArgument,
             std::string("choice-set document needs an unsigned integer field '") + key + "'");
    }
    return doc[key].get<std::uint64_t>();
}

FeedbackTable from_mask_hex(const Params& p, const std::string& hex) {
    const std::uint64_t pc = p.prefix_count();
    const std::uint64_t expected = (pc + 3) / 4;
    if (hex.size() != expected) {
        fail(ErrorKind::WrongLength,
             "mask_hex has " + std::to_string(hex.size()) + " digits, expected " +
                 std::to_string(expected));
    }
    FeedbackTable b(p);
    auto& words = b.raw_words();
    for (std::uint64_t h = 0; h < expected; ++h) {
        int nibble = hex_value(hex[expected - 1 - h]);
        if (nibble < 0) {
            fail(ErrorKind::BadDigit, std::string("'") + hex[expected - 1 - h] +
                                          "' is not a hexadecimal digit");
        }
        std::uint64_t bit = 4 * h;
        words[bit >> 6] |= static_cast<std::uint64_t>(nibble) << (bit & 63);
    }
    // Padding bits above m^(n-1) must be zero.
    for (std::uint64_t bit = pc; bit < 4 * expected; ++bit) {
        if ((words[bit >> 6] >> (bit & 63)) & 1) {
            fail(ErrorKind::InvalidArgument, "mask_hex sets bits at or above m^(n-1)");
        }
    }
    return b;
}

std::string to_mask_hex(const FeedbackTable& b) {
    const std::uint64_t pc = b.params().prefix_count();
    const std::uint64_t len = (pc + 3) / 4;
    const auto& words = b.raw_words();
    std::string out;
    out.reserve(len);
    for (std::uint64_t h = len; h-- > 0;) {
        std::uint64_t bit = 4 * h;
        int nibble = static_cast<int>((words[bit >> 6] >> (bit & 63)) & 0xF);
        out.push_back(nibble < 10 ? static_cast<char>('0' + nibble)
                                  : static_cast<char>('a' + nibble - 10));
    }
    return out;
}

}  // namespace

FeedbackTable choice_set_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::InvalidArgument, std::string("choice-set document is not JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        fail(ErrorKind::InvalidArgument, "choice-set document must be a JSON object");
    }
    Params p(get_count(doc, "m"), get_count(doc, "n"));

    const bool has_suffixes = doc.contains("suffixes");
    const bool has_mask = doc.contains("mask_hex");
    if (has_suffixes == has_mask) {
        fail(ErrorKind::InvalidArgument,
             "choice-set document needs exactly one of 'suffixes' and 'mask_hex'");
    }

    if (has_mask) {
        if (!doc["mask_hex"].is_string()) {
            fail(ErrorKind::InvalidArgument, "'mask_hex' must be a string");
        }
        return from_mask_hex(p, doc["mask_hex"].get<std::string>());
    }

    if (!doc["suffixes"].is_array()) {
        fail(ErrorKind::InvalidArgument, "'suffixes' must be an array of digit strings");
    }
    std::vector<StateIndex> s;
    for (const auto& item : doc["suffixes"]) {
        if (!item.is_string()) {
            fail(ErrorKind::InvalidArgument, "'suffixes' must be an array of digit strings");
        }
        auto digits = digits_from_text(item.get<std::string>(), p);
        if (digits.size() + 1 != p.n()) {
            fail(ErrorKind::InvalidWord,
                 "suffix '" + item.get<std::string>() + "' must have n-1 = " +
                     std::to_string(p.n() - 1) + " digits");
        }
        StateIndex idx = 0;
        for (std::uint64_t d : digits) idx = idx * p.m() + d;
        s.push_back(idx);
    }
    return FeedbackTable::from_suffix_set(p, s);
}

std::string choice_set_to_json(const FeedbackTable& b) {
    const Params& p = b.params();
    json doc;
    doc["m"] = p.m();
    doc["n"] = p.n();

    // Prefer the readable form when it stays small.
    const std::uint64_t s_size = p.prefix_count() - b.weight();
    if (p.m() <= 36 && s_size <= 4096) {
        json suffixes = json::array();
        for (StateIndex idx : b.suffixes_in_s()) {
            std::vector<std::uint64_t> digits(p.n() - 1);
            StateIndex v = idx;
            for (std::uint64_t k = p.n() - 1; k-- > 0;) {
                digits[k] = v % p.m();
                v /= p.m();
            }
            suffixes.push_back(digits_to_text(digits));
        }
        doc["suffixes"] = std::move(suffixes);
    } else {
        doc["mask_hex"] = to_mask_hex(b);
    }
    return doc.dump(2) + "\n";
}

FeedbackTable load_choice_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IoError, "cannot open choice-set file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return choice_set_from_json(ss.str());
}

void save_choice_set(const FeedbackTable& b, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(ErrorKind::IoError, "cannot write choice-set file " + path);
    out << choice_set_to_json(b);
    if (!out.flush()) fail(ErrorKind::IoError, "short write to " + path);
}

}  // namespace sbham
