#include "hypercount/errors.hpp"
#include "hypercount/numtheory.hpp"
#include "hypercount/value_ring.hpp"

#include <gtest/gtest.h>

using namespace hypercount;

TEST(ExactRing, AuxiliaryPrimeIsLeastAdmissible)
{
    for (std::uint64_t q : {9u, 13u, 25u, 41u, 121u}) {
        for (int d : {2, 3, 4, 5}) {
            auto f = build_field_of_order(q);
            ExactRing ring(*f, d);
            const std::uint64_t ell = ring.modulus();
            const std::uint64_t m = std::uint64_t{f->p()} * f->group_order();
            std::uint64_t bound = 4;
            for (int i = 0; i < (d + 1) / 2 + 1; ++i)
                bound *= q;
            EXPECT_TRUE(nt::is_prime(ell));
            EXPECT_EQ(ell % m, 1u);
            EXPECT_GT(ell, bound);
            for (std::uint64_t c = ell - m; c > bound; c -= m)
                EXPECT_FALSE(nt::is_prime(c)) << "smaller admissible prime " << c;
        }
    }
}

TEST(ExactRing, RootHasExactOrder)
{
    auto f = build_field(5, 2);
    ExactRing ring(*f);
    const std::uint64_t m = 5 * 24;
    const std::uint64_t w = ring.root();
    EXPECT_EQ(nt::pow_mod(w, m, ring.modulus()), 1u);
    for (auto r : nt::prime_factors(m))
        EXPECT_NE(nt::pow_mod(w, m / r, ring.modulus()), 1u);
    EXPECT_EQ(ring.mult_root(1), nt::pow_mod(w, 5, ring.modulus()));
    EXPECT_EQ(ring.add_root(1), nt::pow_mod(w, 24, ring.modulus()));
}

TEST(ExactRing, BalancedLift)
{
    auto f = build_field(13, 1);
    ExactRing ring(*f);
    EXPECT_EQ(ring.to_integer(ring.from_int(-7)), -7);
    EXPECT_EQ(ring.to_integer(ring.from_int(338)), 338);
    EXPECT_EQ(ring.to_integer(ring.sub(ring.from_int(3), ring.from_int(10))), -7);
    EXPECT_THROW((void)ring.to_integer(ring.from_int(339)), Error);
    EXPECT_THROW((void)ring.to_integer(ring.mult_root(1)), Error);
}

TEST(ExactRing, InverseAndPower)
{
    auto f = build_field(7, 1);
    ExactRing ring(*f);
    for (std::int64_t v = 1; v < 50; ++v) {
        const auto x = ring.from_int(v);
        EXPECT_EQ(ring.mul(x, ring.inv(x)), ring.one());
        EXPECT_EQ(ring.pow(x, 3), ring.mul(x, ring.mul(x, x)));
    }
}

TEST(ExactRing, BoundOutOfRangeIsReported)
{
    auto f = build_field(1048573, 1);
    try {
        ExactRing ring(*f, 9);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AuxiliaryPrimeOutOfRange);
    }
}

TEST(FloatRing, RootsOfUnity)
{
    auto f = build_field(13, 1);
    FloatRing ring(*f);
    EXPECT_EQ(ring.mult_root(3), std::complex<double>(0, 1));
    EXPECT_EQ(ring.mult_root(6), std::complex<double>(-1, 0));
    EXPECT_NEAR(std::abs(ring.pow(ring.mult_root(1), 12) - ring.one()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(ring.pow(ring.add_root(1), 13) - ring.one()), 0.0, 1e-12);
}

TEST(FloatRing, IntegerRounding)
{
    auto f = build_field(13, 1);
    FloatRing ring(*f, 1e-6);
    EXPECT_EQ(ring.to_integer({41.0000001, 0.0}), 41);
    EXPECT_EQ(ring.to_integer({-3.0, 1e-8}), -3);
    EXPECT_THROW((void)ring.to_integer({41.01, 0.0}), Error);
    EXPECT_THROW((void)ring.to_integer({41.0, 0.01}), Error);
    EXPECT_THROW(FloatRing(*f, 0.0), std::invalid_argument);
}

TEST(FloatRing, RelativeResidual)
{
    auto f = build_field(13, 1);
    FloatRing ring(*f);
    EXPECT_DOUBLE_EQ(ring.residual({1000.0, 0.0}, {1001.0, 0.0}), 1.0 / 1001.0);
    EXPECT_DOUBLE_EQ(ring.residual({0.0, 0.0}, {0.5, 0.0}), 0.5);
}
