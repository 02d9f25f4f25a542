#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>

#include "sbham/necklace.hpp"
#include "sbham/permutation.hpp"
#include "sbham/splitmix.hpp"
#include "sbham/word.hpp"

using namespace sbham;

namespace {

FeedbackTable random_b(const Params& p, std::uint64_t seed) {
    FeedbackTable b(p);
    SplitMix64 gen{SplitMix64::mix64(seed)};
    for (auto& w : b.raw_words()) w = gen.next();
    b.mask_tail();
    return b;
}

// Brute-force oracles, all by direct orbit scans over the index space.

std::uint64_t pow_u64(std::uint64_t m, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= m;
    return r;
}

StateIndex apply_reflection(StateIndex x, const Params& p, std::uint64_t k) {
    // (R sigma^k)(x)_i = x_{(n-1+k-i) mod n}
    const std::uint64_t n = p.n();
    std::vector<std::uint64_t> digits(n);
    for (std::uint64_t i = n; i-- > 0;) {
        digits[i] = x % p.m();
        x /= p.m();
    }
    StateIndex out = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        out = out * p.m() + digits[(n - 1 + k + n - i) % n];
    }
    return out;
}

std::uint64_t brute_reflection_fixes(const Params& p, std::uint64_t k) {
    std::uint64_t count = 0;
    for (StateIndex x = 0; x < p.state_count(); ++x) {
        if (apply_reflection(x, p, k) == x) ++count;
    }
    return count;
}

StateIndex min_rotation(StateIndex x, const Params& p) {
    StateIndex best = x;
    StateIndex j = rotate_index(x, p);
    while (j != x) {
        best = std::min(best, j);
        j = rotate_index(j, p);
    }
    return best;
}

std::uint64_t brute_dihedral_orbits(const Params& p) {
    std::uint64_t count = 0;
    for (StateIndex x = 0; x < p.state_count(); ++x) {
        StateIndex canon = min_rotation(x, p);
        canon = std::min(canon, min_rotation(apply_reflection(x, p, 0), p));
        if (canon == x) ++count;
    }
    return count;
}

// Rotation orbits fixed setwise by reversal, counted at the minimal
// representative.
std::uint64_t brute_rfix(const Params& p) {
    std::uint64_t count = 0;
    for (StateIndex x = 0; x < p.state_count(); ++x) {
        if (min_rotation(x, p) != x) continue;
        if (min_rotation(apply_reflection(x, p, 0), p) == x) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("necklace counts") {
    CHECK(necklace_count(Params(3, 4)) == 24);
    for (std::uint64_t m = 2; m <= 12; ++m) CHECK(necklace_count(Params(m, 1)) == m);
    CHECK(necklace_count(Params(3, 6)) == 130);
    CHECK(necklace_count(Params(3, 3)) == 11);
    CHECK(necklace_count(Params(5, 2)) == 15);
}

TEST_CASE("brute-force necklace counter") {
    CHECK(necklace_count_bruteforce(Params(3, 2)) == 6);
    CHECK(necklace_count_bruteforce(Params(3, 4)) == 24);
    CHECK(necklace_count_bruteforce(Params(3, 3)) == 11);
    CHECK_THROWS_AS(necklace_count_bruteforce(Params(3, 13)), Error);  // over the cap
    CHECK_THROWS_AS(necklace_count_bruteforce(Params(3, 4), 10), Error);

    // formula agreement up to 3^8 here (the acceptance suite runs 3^12)
    for (std::uint64_t m = 2; m <= 81; ++m) {
        std::uint64_t power = m;
        for (std::uint64_t n = 1; power <= 6561; ++n) {
            Params p(m, n);
            CHECK(necklace_count(p) == necklace_count_bruteforce(p, 6561));
            if (power > 6561 / m) break;
            power *= m;
        }
    }
}

TEST_CASE("rotation fixed-point table") {
    CHECK(rotation_fix_counts(Params(3, 4)) == std::vector<std::uint64_t>{81, 3, 9, 3});
    CHECK(rotation_fix_counts(Params(7, 1)) == std::vector<std::uint64_t>{7});

    std::uint64_t sum = 0;
    for (std::uint64_t f : rotation_fix_counts(Params(3, 4))) sum += f;
    CHECK(sum == 96);
    CHECK(sum == 4 * necklace_count(Params(3, 4)));
}

TEST_CASE("reflection fixed-point table") {
    CHECK(reflection_fix_counts(Params(3, 4)) == std::vector<std::uint64_t>{9, 27, 9, 27});
    CHECK(reflection_fix_counts(Params(3, 3)) == std::vector<std::uint64_t>{9, 9, 9});

    std::uint64_t sum = 0;
    for (std::uint64_t f : reflection_fix_counts(Params(3, 4))) sum += f;
    CHECK(sum == 72);

    // direct enumeration oracle over a spread of shapes
    for (const Params& p : {Params(3, 4), Params(3, 3), Params(2, 6), Params(5, 2),
                            Params(4, 5), Params(2, 1)}) {
        auto fixes = reflection_fix_counts(p);
        for (std::uint64_t k = 0; k < p.n(); ++k) {
            CHECK(fixes[k] == brute_reflection_fixes(p, k));
        }
    }
}

TEST_CASE("dihedral orbit count") {
    CHECK(dihedral_orbit_count(Params(3, 4)) == 21);
    for (std::uint64_t m = 2; m <= 9; ++m) CHECK(dihedral_orbit_count(Params(m, 1)) == m);
    CHECK(dihedral_orbit_count(Params(3, 2)) == 6);

    for (const Params& p : {Params(3, 2), Params(3, 4), Params(2, 6), Params(4, 3),
                            Params(5, 4), Params(6, 2)}) {
        CHECK(dihedral_orbit_count(p) == brute_dihedral_orbits(p));
    }
}

TEST_CASE("rfix closed form and bracelet identity") {
    CHECK(rfix_count(Params(3, 4)) == 18);
    CHECK(2 * dihedral_orbit_count(Params(3, 4)) == necklace_count(Params(3, 4)) + 18);

    CHECK(rfix_count(Params(3, 2)) == 6);
    CHECK(2 * dihedral_orbit_count(Params(3, 2)) == necklace_count(Params(3, 2)) + 6);

    CHECK_THROWS_AS(rfix_count(Params(3, 3)), Error);  // odd n

    for (const Params& p : {Params(3, 2), Params(3, 4), Params(2, 6), Params(5, 4),
                            Params(4, 2), Params(7, 2)}) {
        CHECK(rfix_count(p) == brute_rfix(p));
        CHECK(2 * dihedral_orbit_count(p) == necklace_count(p) + rfix_count(p));
    }
}

TEST_CASE("Burnside integrality over m <= 9, n <= 16") {
    for (std::uint64_t m = 2; m <= 9; ++m) {
        for (std::uint64_t n = 1; n <= 16; ++n) {
            Params p(m, n);
            unsigned __int128 rot = 0, refl = 0;
            for (std::uint64_t f : rotation_fix_counts(p)) rot += f;
            for (std::uint64_t f : reflection_fix_counts(p)) refl += f;
            CHECK(rot % n == 0);
            CHECK((rot + refl) % (2 * n) == 0);
            CHECK(rot / n == necklace_count(p));
        }
    }
}

TEST_CASE("even-n dihedral closed form, exact rationals") {
    // 4*orbits == 2*N + (m+1)*m^(n/2); for m = 1 mod 4 both summands of the
    // paper form are half-integers, the common-denominator form is exact.
    for (std::uint64_t m : {3ull, 5ull, 7ull, 9ull}) {
        for (std::uint64_t n = 2; n <= 12; n += 2) {
            Params p(m, n);
            unsigned __int128 lhs = (unsigned __int128)4 * dihedral_orbit_count(p);
            unsigned __int128 rhs =
                (unsigned __int128)2 * necklace_count(p) + (unsigned __int128)(m + 1) * pow_u64(m, n / 2);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("parity dichotomy for even n") {
    for (std::uint64_t m = 3; m <= 19; m += 2) {
        for (std::uint64_t n = 2; n <= 12; n += 2) {
            bool even = necklace_parity(Params(m, n)).is_even;
            CHECK(even == (m % 4 == 3));
        }
    }

    NecklaceParity p34 = necklace_parity(Params(3, 4));
    CHECK(p34.is_even);
    REQUIRE(p34.half_witness.has_value());
    CHECK(*p34.half_witness == 12);
    CHECK(2 * *p34.half_witness == necklace_count(Params(3, 4)));

    for (std::uint64_t n = 2; n <= 16; n += 2) {
        CHECK(necklace_parity(Params(3, n)).is_even);
    }
    CHECK_FALSE(necklace_parity(Params(5, 2)).is_even);  // N = 15
}

TEST_CASE("sign of sigma") {
    CHECK(sign_sigma(Params(3, 2)) == -1);
    CHECK(sign_sigma(Params(3, 4)) == -1);
    CHECK(sign_sigma(Params(3, 3)) == +1);

    // direct cycle-decomposition bridge on small spaces (the acceptance
    // suite runs the full 3^10 sweep)
    for (const Params& p : {Params(3, 2), Params(3, 4), Params(2, 10), Params(5, 3),
                            Params(7, 1), Params(3, 9), Params(6, 4)}) {
        CHECK(sign_sigma(p) == cycle_decomposition(rotation_permutation(p)).sign);
    }
}

TEST_CASE("sign of the adjustment map") {
    Params p3(3, 3);
    for (std::uint64_t s = 0; s < 50; ++s) {
        CHECK(sign_adjust(random_b(p3, s)) == +1);
    }
    CHECK(sign_adjust(FeedbackTable::all_zero(p3)) == +1);

    // m=2, n=2, weight 1: one 2-cycle on one fibre
    FeedbackTable w1(Params(2, 2));
    w1.set_bit(1, true);
    CHECK(sign_adjust(w1) == -1);
    CHECK(cycle_decomposition(adjust_permutation(w1)).sign == -1);

    // formula equals the direct table sign across shapes and weights
    std::uint64_t mismatches = 0;
    for (const Params& p : {Params(2, 3), Params(3, 3), Params(4, 2), Params(5, 2),
                            Params(2, 8), Params(6, 3), Params(9, 2)}) {
        for (std::uint64_t s = 0; s < 25; ++s) {
            FeedbackTable b = random_b(p, 1000 * p.m() + s);
            mismatches += sign_adjust(b) != cycle_decomposition(adjust_permutation(b)).sign;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("counting report ties the pieces together") {
    CountingReport r = counting_report(Params(3, 4));
    CHECK(r.necklaces == 24);
    CHECK(r.rotation_fixes == std::vector<std::uint64_t>{81, 3, 9, 3});
    CHECK(r.reflection_fixes == std::vector<std::uint64_t>{9, 27, 9, 27});
    CHECK(r.dihedral_orbits == 21);
    REQUIRE(r.rfix.has_value());
    CHECK(*r.rfix == 18);
    CHECK(r.n_even);

    CountingReport odd = counting_report(Params(3, 3));
    CHECK_FALSE(odd.rfix.has_value());

    // Burnside invariants straight off the report
    std::uint64_t rot = 0, refl = 0;
    for (auto f : r.rotation_fixes) rot += f;
    for (auto f : r.reflection_fixes) refl += f;
    CHECK(4 * r.necklaces == rot);
    CHECK(8 * r.dihedral_orbits == rot + refl);
    CHECK(2 * r.dihedral_orbits == r.necklaces + *r.rfix);
}

TEST_CASE("obstruction verdict") {
    ObstructionReport r34 = obstruction_verdict(Params(3, 4));
    CHECK(r34.obstructed);
    CHECK(r34.residue == ResidueClass::OddThreeModFour);
    CHECK(r34.sgn_sigma == -1);
    CHECK(r34.required_cycle_sign == +1);
    CHECK(r34.n_even);

    CHECK_FALSE(obstruction_verdict(Params(3, 3)).obstructed);
    CHECK(obstruction_verdict(Params(7, 4)).obstructed);
    CHECK(obstruction_verdict(Params(11, 6)).obstructed);
    CHECK_FALSE(obstruction_verdict(Params(5, 4)).obstructed);
    CHECK_FALSE(obstruction_verdict(Params(4, 4)).obstructed);

    // the two characterizations coincide on a grid
    for (std::uint64_t m = 2; m <= 12; ++m) {
        for (std::uint64_t n = 1; n <= 8; ++n) {
            ObstructionReport r = obstruction_verdict(Params(m, n));
            bool by_residue = (m % 4 == 3) && (n % 2 == 0);
            bool by_signs = (m % 2 == 1) && r.sgn_sigma == -1 && r.required_cycle_sign == +1;
            CHECK(r.obstructed == by_residue);
            CHECK(r.obstructed == by_signs);
            // m^n - 1 is even exactly when m is odd
            CHECK(r.required_cycle_sign == (m % 2 == 1 ? +1 : -1));
        }
    }
}

TEST_CASE("pinned A001867 fixture matches N(n,3)") {
    std::ifstream in(std::string(SBHAM_FIXTURE_DIR) + "/A001867.txt");
    REQUIRE(in.good());
    std::map<std::uint64_t, std::uint64_t> reference;
    std::uint64_t idx, value;
    while (in >> idx >> value) reference[idx] = value;
    REQUIRE(reference.size() == 17);
    for (std::uint64_t n = 1; n <= 16; ++n) {
        CHECK(necklace_count(Params(3, n)) == reference.at(n));
    }
}
