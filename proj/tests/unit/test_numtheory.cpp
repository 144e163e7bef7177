#include "hypercount/numtheory.hpp"

#include <gtest/gtest.h>

namespace nt = hypercount::nt;

namespace {

bool trial_division_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

} // namespace

TEST(NumberTheory, PrimalityMatchesTrialDivision)
{
    for (std::uint64_t n = 0; n < 5000; ++n)
        EXPECT_EQ(nt::is_prime(n), trial_division_prime(n)) << n;
}

TEST(NumberTheory, PrimalityLargeKnownValues)
{
    EXPECT_TRUE(nt::is_prime(4611686018427387847ULL)); // 2^62 - 57
    EXPECT_FALSE(nt::is_prime(3215031751ULL));          // strong pseudoprime to 2, 3, 5, 7
    EXPECT_FALSE(nt::is_prime(4611686018427387903ULL)); // 2^62 - 1
}

TEST(NumberTheory, PowModAgainstRepeatedMultiplication)
{
    const std::uint64_t m = 1000003;
    std::uint64_t acc = 1;
    for (std::uint64_t e = 0; e < 200; ++e) {
        EXPECT_EQ(nt::pow_mod(12345, e, m), acc);
        acc = acc * 12345 % m;
    }
}

TEST(NumberTheory, PrimeFactorsDistinctAscending)
{
    EXPECT_EQ(nt::prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
    EXPECT_EQ(nt::prime_factors(97), (std::vector<std::uint64_t>{97}));
    EXPECT_TRUE(nt::prime_factors(1).empty());
}

TEST(NumberTheory, PrimePowerRecognition)
{
    auto pp = nt::as_prime_power(243);
    ASSERT_TRUE(pp);
    EXPECT_EQ(pp->p, 3u);
    EXPECT_EQ(pp->e, 5u);
    EXPECT_FALSE(nt::as_prime_power(74));
    EXPECT_FALSE(nt::as_prime_power(1));
    EXPECT_TRUE(nt::as_prime_power(2));
}

TEST(NumberTheory, ReduceHandlesNegatives)
{
    EXPECT_EQ(nt::reduce(-1, 12), 11u);
    EXPECT_EQ(nt::reduce(-24, 12), 0u);
    EXPECT_EQ(nt::reduce(25, 12), 1u);
}
