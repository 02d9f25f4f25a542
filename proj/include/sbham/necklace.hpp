#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbham/feedback.hpp"
#include "sbham/params.hpp"

namespace sbham {

// Default cap on m^n for the brute-force orbit counters (3^12).
inline constexpr std::uint64_t kDefaultBruteForceCap = 531441;

// N(n,m): number of necklaces (rotation orbits of Sigma^n). Evaluates both
// the gcd-sum and the phi-sum closed forms and insists they agree. All
// arithmetic is exact; overflow raises CapacityExceeded.
std::uint64_t necklace_count(const Params& p);

// Counts strings that are lexicographically minimal among their rotations.
// Independent of the closed forms; m^n must not exceed the cap.
std::uint64_t necklace_count_bruteforce(const Params& p,
                                        std::uint64_t cap = kDefaultBruteForceCap);

// Entry k = m^gcd(k,n) = #Fix(sigma^k), for k = 0..n-1.
std::vector<std::uint64_t> rotation_fix_counts(const Params& p);

// Entry k = #Fix(R sigma^k) = m^(number of orbits of the index involution
// psi_k : i -> (n-1+k-i) mod n). Counted directly; the even-n closed form
// (m^(n/2+1) for odd k, m^(n/2) for even k) and the odd-n constant
// m^((n+1)/2) are asserted against it.
std::vector<std::uint64_t> reflection_fix_counts(const Params& p);

// Burnside average over the 2n dihedral group elements. For even n the
// closed form N/2 + ((m+1)/4) m^(n/2) is checked exactly (as a rational
// with denominator 4, so m = 1 mod 4 needs no special casing).
std::uint64_t dihedral_orbit_count(const Params& p);

// Number of rotation orbits fixed setwise by reversal, for even n:
// (m+1)/2 * m^(n/2). Satisfies 2 * dihedral_orbit_count = N + rfix.
// Odd n raises UnsupportedParity.
std::uint64_t rfix_count(const Params& p);

struct NecklaceParity {
    bool is_even = false;
    // For m = 3 mod 4 and even n: dihedral_orbits - ((m+1)/4) m^(n/2),
    // the integer witness equal to N/2.
    std::optional<std::uint64_t> half_witness;
};

NecklaceParity necklace_parity(const Params& p);

// sgn(sigma) = (-1)^(m^n - N(n,m)); for odd m also -(-1)^N(n,m), and the
// two must agree.
int sign_sigma(const Params& p);

// sgn(A_b) = (-1)^((m-1) * weight(b)): +1 for every b when m is odd.
int sign_adjust(const FeedbackTable& b);

struct CountingReport {
    Params params;
    std::uint64_t necklaces = 0;
    std::vector<std::uint64_t> rotation_fixes;
    std::vector<std::uint64_t> reflection_fixes;
    std::uint64_t dihedral_orbits = 0;
    std::optional<std::uint64_t> rfix;  // even n only
    bool n_even = false;
};

CountingReport counting_report(const Params& p);

enum class ResidueClass {
    OddThreeModFour,
    OddOneModFour,
    Even,
};

const char* residue_class_name(ResidueClass r);

struct ObstructionReport {
    Params params;
    ResidueClass residue = ResidueClass::Even;
    int sgn_sigma = +1;
    bool n_even = false;
    int required_cycle_sign = +1;  // (-1)^(m^n - 1)
    bool obstructed = false;
    std::string reason;
};

// obstructed exactly when m is odd, m = 3 mod 4 and n is even: then
// sgn(f_S) = sgn(sigma) = -1 for every b, while a single m^n-cycle would
// need sign +1.
ObstructionReport obstruction_verdict(const Params& p);

}  // namespace sbham
