#pragma once

#include <string>

#include "sbham/feedback.hpp"

namespace sbham {

// Canonical choice-set document, shared by all commands. JSON with fields
// m, n and exactly one of:
//   "suffixes": the (n-1)-digit strings in S (where the register saves,
//               b = 0), text charset 0-9a-z, so m <= 36;
//   "mask_hex": hex string of length ceil(m^(n-1)/4); bit p of its value
//               (little-endian) is b(p).
FeedbackTable choice_set_from_json(const std::string& text);
std::string choice_set_to_json(const FeedbackTable& b);

FeedbackTable load_choice_set(const std::string& path);
void save_choice_set(const FeedbackTable& b, const std::string& path);

}  // namespace sbham
