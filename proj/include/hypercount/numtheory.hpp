#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hypercount::nt {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in ascending order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

struct PrimePower {
    std::uint64_t p;
    unsigned e;
};

/// Returns {p, e} when n = p^e with p prime and e >= 1.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Integer power without overflow checks; callers bound their inputs.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Residue of a (possibly negative) integer modulo m, in [0, m).
inline std::uint64_t reduce(std::int64_t value, std::uint64_t m)
{
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t r = value % sm;
    if (r < 0)
        r += sm;
    return static_cast<std::uint64_t>(r);
}

} // namespace hypercount::nt
