#include "sbham/necklace.hpp"

#include <numeric>

namespace sbham {

namespace {

using u128 = unsigned __int128;

constexpr u128 kU64Max = ~0ull;

std::uint64_t narrow(u128 v, const char* what) {
    if (v > kU64Max) {
        fail(ErrorKind::CapacityExceeded, std::string(what) + " exceeds 64-bit capacity");
    }
    return static_cast<std::uint64_t>(v);
}

// m^e, exact; CapacityExceeded beyond 64 bits.
std::uint64_t pow_checked(std::uint64_t m, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, m, &r)) {
            fail(ErrorKind::CapacityExceeded,
                 "m^" + std::to_string(e) + " exceeds 64-bit capacity");
        }
    }
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

[[noreturn]] void inconsistent(const char* what) {
    // The closed forms are mathematically equal; a mismatch means a bug,
    // not bad input.
    throw std::logic_error(std::string("internal inconsistency: ") + what);
}

}  // namespace

std::uint64_t necklace_count(const Params& p) {
    const std::uint64_t m = p.m();
    const std::uint64_t n = p.n();

    u128 gcd_sum = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        gcd_sum += pow_checked(m, std::gcd(k, n));
    }
    if (gcd_sum % n != 0) inconsistent("gcd-sum not divisible by n");

    u128 phi_sum = 0;
    for (std::uint64_t d : divisors(n)) {
        phi_sum += static_cast<u128>(euler_phi(d)) * pow_checked(m, n / d);
    }
    if (phi_sum % n != 0) inconsistent("phi-sum not divisible by n");

    if (gcd_sum != phi_sum) inconsistent("gcd-sum and phi-sum disagree");
    return narrow(gcd_sum / n, "necklace count");
}

std::uint64_t necklace_count_bruteforce(const Params& p, std::uint64_t cap) {
    const std::uint64_t size = p.state_count();
    if (size > cap) {
        fail(ErrorKind::CapacityExceeded,
             "m^n = " + std::to_string(size) + " exceeds the brute-force cap " +
                 std::to_string(cap));
    }
    const std::uint64_t m = p.m();
    const std::uint64_t pc = p.prefix_count();

    std::uint64_t count = 0;
    for (StateIndex i = 0; i < size; ++i) {
        bool minimal = true;
        StateIndex j = (i % pc) * m + i / pc;
        while (j != i) {
            if (j < i) {
                minimal = false;
                break;
            }
            j = (j % pc) * m + j / pc;
        }
        if (minimal) ++count;
    }
    return count;
}

std::vector<std::uint64_t> rotation_fix_counts(const Params& p) {
    std::vector<std::uint64_t> fixes(p.n());
    for (std::uint64_t k = 0; k < p.n(); ++k) {
        fixes[k] = pow_checked(p.m(), std::gcd(k, p.n()));
    }
    return fixes;
}

std::vector<std::uint64_t> reflection_fix_counts(const Params& p) {
    const std::uint64_t m = p.m();
    const std::uint64_t n = p.n();

    std::vector<std::uint64_t> fixes(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        // psi_k : i -> (n-1+k-i) mod n is an involution; strings fixed by
        // R sigma^k are constant on its orbits. Orbits of size 1 are the
        // solutions of 2i = k-1 (mod n).
        std::uint64_t fixed_indices = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            if ((2 * i) % n == (n - 1 + k) % n) ++fixed_indices;
        }
        std::uint64_t orbits = fixed_indices + (n - fixed_indices) / 2;
        fixes[k] = pow_checked(m, orbits);

        if (n % 2 == 0) {
            std::uint64_t expected =
                (k % 2 == 1) ? pow_checked(m, n / 2 + 1) : pow_checked(m, n / 2);
            if (fixes[k] != expected) inconsistent("even-n reflection closed form");
        } else {
            if (fixes[k] != pow_checked(m, (n + 1) / 2)) {
                inconsistent("odd-n reflection closed form");
            }
        }
    }
    return fixes;
}

std::uint64_t dihedral_orbit_count(const Params& p) {
    const std::uint64_t n = p.n();

    u128 total = 0;
    for (std::uint64_t f : rotation_fix_counts(p)) total += f;
    for (std::uint64_t f : reflection_fix_counts(p)) total += f;
    if (total % (2 * n) != 0) inconsistent("Burnside dihedral sum not divisible by 2n");
    std::uint64_t orbits = narrow(total / (2 * n), "dihedral orbit count");

    if (n % 2 == 0) {
        // Closed form N/2 + ((m+1)/4) m^(n/2), checked as a rational over
        // the common denominator 4: both summands may be half-integers for
        // m = 1 mod 4 yet the sum is exact.
        u128 rhs_times_4 = u128(2) * necklace_count(p) +
                           u128(p.m() + 1) * pow_checked(p.m(), n / 2);
        if (u128(4) * orbits != rhs_times_4) inconsistent("dihedral closed form");
    }
    return orbits;
}

std::uint64_t rfix_count(const Params& p) {
    if (p.n() % 2 != 0) {
        fail(ErrorKind::UnsupportedParity, "rfix closed form requires even n");
    }
    u128 twice = u128(p.m() + 1) * pow_checked(p.m(), p.n() / 2);
    if (twice % 2 != 0) inconsistent("rfix closed form not an integer");
    std::uint64_t rfix = narrow(twice / 2, "rfix count");

    // Bracelet identity: 2 * |D_n-orbits| = N + rfix.
    if (u128(2) * dihedral_orbit_count(p) != u128(necklace_count(p)) + rfix) {
        inconsistent("bracelet identity");
    }
    return rfix;
}

NecklaceParity necklace_parity(const Params& p) {
    NecklaceParity out;
    std::uint64_t necklaces = necklace_count(p);
    out.is_even = necklaces % 2 == 0;
    if (p.m() % 4 == 3 && p.n() % 2 == 0) {
        // (m+1)/4 is an integer here, so N/2 = orbits - ((m+1)/4) m^(n/2)
        // is an integer difference; record it as the witness.
        std::uint64_t orbits = dihedral_orbit_count(p);
        std::uint64_t term = narrow(
            u128(p.m() + 1) / 4 * pow_checked(p.m(), p.n() / 2), "parity witness term");
        std::uint64_t witness = orbits - term;
        if (2 * witness != necklaces) inconsistent("parity witness");
        out.half_witness = witness;
    }
    return out;
}

int sign_sigma(const Params& p) {
    std::uint64_t necklaces = necklace_count(p);
    int sign = ((p.state_count() - necklaces) & 1) ? -1 : +1;
    if (p.m() % 2 == 1) {
        // Odd m: m^n is odd, so the sign reduces to -(-1)^N.
        int odd_form = (necklaces % 2 == 0) ? -1 : +1;
        if (odd_form != sign) inconsistent("odd-m sign formula");
    }
    return sign;
}

int sign_adjust(const FeedbackTable& b) {
    // Each prefix with b = 1 contributes one m-cycle of sign (-1)^(m-1).
    if (b.params().m() % 2 == 1) return +1;
    return (b.weight() & 1) ? -1 : +1;
}

CountingReport counting_report(const Params& p) {
    CountingReport r{p};
    r.necklaces = necklace_count(p);
    r.rotation_fixes = rotation_fix_counts(p);
    r.reflection_fixes = reflection_fix_counts(p);
    r.dihedral_orbits = dihedral_orbit_count(p);
    r.n_even = p.n() % 2 == 0;
    if (r.n_even) r.rfix = rfix_count(p);
    return r;
}

const char* residue_class_name(ResidueClass r) {
    switch (r) {
        case ResidueClass::OddThreeModFour: return "m=3 mod 4";
        case ResidueClass::OddOneModFour: return "m=1 mod 4";
        case ResidueClass::Even: return "m even";
    }
    return "unknown";
}

ObstructionReport obstruction_verdict(const Params& p) {
    ObstructionReport r{p};
    const std::uint64_t m = p.m();
    r.residue = (m % 2 == 0) ? ResidueClass::Even
                : (m % 4 == 3) ? ResidueClass::OddThreeModFour
                               : ResidueClass::OddOneModFour;
    r.n_even = p.n() % 2 == 0;
    r.sgn_sigma = sign_sigma(p);
    r.required_cycle_sign = ((p.state_count() - 1) & 1) ? -1 : +1;
    r.obstructed = r.residue == ResidueClass::OddThreeModFour && r.n_even;

    if (r.obstructed) {
        r.reason =
            "m odd with m=3 mod 4 and n even: N(n,m) is even, so sgn(sigma) = -1, "
            "while sgn(f_S) = sgn(sigma) for every choice set and a single "
            "m^n-cycle needs sign +1";
    } else if (m % 2 == 0) {
        r.reason =
            "m even: sgn(A_b) = (-1)^weight(b) varies with the choice set, so the "
            "sign argument does not apply";
    } else if (!r.n_even) {
        r.reason =
            "n odd: every rotation orbit has odd size, so N(n,m) is odd and "
            "sgn(sigma) = +1 matches the required cycle sign";
    } else {
        r.reason =
            "m=1 mod 4 with n even: N(n,m) is odd, so sgn(sigma) = +1 matches the "
            "required cycle sign";
    }
    return r;
}

}  // namespace sbham
