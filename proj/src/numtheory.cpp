#include "hypercount/numtheory.hpp"
#include "hypercount/errors.hpp"

#include <array>

namespace hypercount {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::TableBudgetExceeded: return "TableBudgetExceeded";
    case ErrorCode::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorCode::MixedFieldContexts: return "MixedFieldContexts";
    case ErrorCode::MalformedSeries: return "MalformedSeries";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::CongruenceViolated: return "CongruenceViolated";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::AuxiliaryPrimeOutOfRange: return "AuxiliaryPrimeOutOfRange";
    }
    return "Unknown";
}

namespace nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<nt::uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : kBases) {
        if (n % b == 0)
            return n == b;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0)
                n /= f;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n)
{
    if (n < 2)
        return std::nullopt;
    auto factors = prime_factors(n);
    if (factors.size() != 1)
        return std::nullopt;
    PrimePower pp{factors.front(), 0};
    while (n > 1) {
        n /= pp.p;
        ++pp.e;
    }
    return pp;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

} // namespace nt
} // namespace hypercount
