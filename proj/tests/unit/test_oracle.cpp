#include "hypercount/errors.hpp"
#include "hypercount/numtheory.hpp"
#include "hypercount/oracle.hpp"
#include "reference.hpp"

#include <gtest/gtest.h>

using namespace hypercount;

namespace {

std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = lo; q <= hi; ++q) {
        auto pp = nt::as_prime_power(q);
        if (pp && pp->p != 2)
            out.push_back(q);
    }
    return out;
}

} // namespace

TEST(BruteCount, SmallestConicByHand)
{
    // y^2 = x^2 + x + 1 over F_3: f(0)=1, f(1)=0, f(2)=1, giving 2 + 1 + 2 points.
    std::int64_t by_hand = 0;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            by_hand += (y * y - (x * x + x + 1)) % 3 == 0;
    EXPECT_EQ(by_hand, 5);
    auto f = build_field(3, 1);
    const CurveParams curve{Family::A, 2, f->one(), f->one()};
    EXPECT_EQ(brute_count(*f, curve), 5);
    EXPECT_EQ(brute_count_pairs(*f, curve), 5);
}

TEST(BruteCount, RangeBound)
{
    auto f = build_field(13, 1);
    const auto n = brute_count(*f, CurveParams{Family::A, 3, f->one(), f->one()});
    EXPECT_GE(n, 0);
    EXPECT_LE(n, 26);
}

TEST(BruteCount, ParityMethodMatchesAllPairs)
{
    for (auto q : odd_prime_powers(3, 100)) {
        auto f = build_field_of_order(q);
        const auto qq = static_cast<std::uint32_t>(q);
        for (int d = 2; d <= 6; ++d) {
            for (auto fam : {Family::A, Family::B}) {
                for (std::uint32_t a : {1u, 2u, qq - 1}) {
                    for (std::uint32_t b : {1u, qq / 2, qq - 1}) {
                        const CurveParams c{fam, d, f->element(a), f->element(b)};
                        ASSERT_EQ(brute_count(*f, c), brute_count_pairs(*f, c))
                            << "q=" << q << " d=" << d << " a=" << a << " b=" << b;
                    }
                }
            }
        }
    }
}

TEST(BruteCount, RejectsZeroCoefficients)
{
    auto f = build_field(13, 1);
    EXPECT_THROW((void)brute_count(*f, CurveParams{Family::A, 3, f->zero(), f->one()}), Error);
}

TEST(ThetaSum, IsQAtZeroAndVanishesElsewhere)
{
    for (std::uint64_t q : {13u, 25u}) {
        auto f = build_field_of_order(q);
        ExactSums es(f, ExactRing(*f));
        EXPECT_EQ(es.ring().to_integer(theta_sum(es, f->zero())), std::int64_t(q));
        for (std::uint32_t c = 1; c < q; ++c)
            EXPECT_EQ(es.ring().to_integer(theta_sum(es, FieldElem{c})), 0);
    }
}

TEST(Lemmas, AllPassOnSmallFields)
{
    for (std::uint64_t q : {13u, 25u, 27u, 9u}) {
        auto f = build_field_of_order(q);
        ExactSums es(f, ExactRing(*f));
        FloatSums fs(f, FloatRing(*f));
        const auto er = verify_lemmas(es);
        const auto fr = verify_lemmas(fs);
        EXPECT_TRUE(er.passed()) << q;
        EXPECT_TRUE(fr.passed()) << q;
        ASSERT_EQ(er.checks.size(), 7u);
        for (const auto& c : fr.checks) {
            EXPECT_LT(c.max_residual, 1e-9) << c.name;
            EXPECT_GT(c.cases, 0u) << c.name;
        }
        for (const auto& c : er.checks)
            EXPECT_EQ(c.mismatches, 0u) << c.name;
    }
}

TEST(Lemmas, TrivialIndexSkipped)
{
    auto f = build_field(13, 1);
    ExactSums es(f, ExactRing(*f));
    const auto r = verify_lemmas(es);
    const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                                 [](const IdentityCheck& c) { return c.name == "gauss_sum_inverse"; });
    ASSERT_NE(it, r.checks.end());
    EXPECT_EQ(it->skipped, 1u);
    EXPECT_EQ(it->cases, 11u);
}

TEST(Lemmas, CorruptedIdentityIsDetected)
{
    IdentityCheck c{"demo"};
    c.record(true, 0.0, "ok");
    c.record(false, 0.5, "bad");
    EXPECT_FALSE(c.passed());
    EXPECT_EQ(c.mismatches, 1u);
    EXPECT_EQ(c.failures, std::vector<std::string>{"bad"});
    IdentityCheck total{"total"};
    total.merge(c);
    EXPECT_EQ(total.cases, 2u);
    EXPECT_DOUBLE_EQ(total.max_residual, 0.5);
}

TEST(DavenportHasse, ThirdRootsOverThirteen)
{
    auto f = build_field(13, 1);
    ExactSums es(f, ExactRing(*f));
    FloatSums fs(f, FloatRing(*f));
    const auto er = verify_davenport_hasse(es, 3, 1);
    EXPECT_TRUE(er.passed());
    EXPECT_EQ(er.relation.cases, 1u);
    EXPECT_TRUE(verify_davenport_hasse(fs, 3, 1).passed());
}

TEST(DavenportHasse, TrivialModulus)
{
    auto f = build_field(13, 1);
    ExactSums es(f, ExactRing(*f));
    const auto r = verify_davenport_hasse(es, 1, 5);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.product_formula.skipped, 1u);
}

TEST(DavenportHasse, ProductFormulaOddDegreeFive)
{
    auto f = build_field(41, 1);
    ExactSums es(f, ExactRing(*f));
    FloatSums fs(f, FloatRing(*f));
    const auto ec = verify_product_formula(es, 5);
    EXPECT_TRUE(ec.passed());
    EXPECT_EQ(ec.cases, 80u); // 40 values of l, two signs
    EXPECT_TRUE(verify_product_formula(fs, 5).passed());
}

TEST(DavenportHasse, ProductFormulaBothParities)
{
    for (auto [q, d] : {std::pair{73u, 4u}, {73u, 3u}, {97u, 4u}, {61u, 6u}, {61u, 5u}, {25u, 4u}, {49u, 6u}}) {
        auto f = build_field_of_order(q);
        ExactSums es(f, ExactRing(*f));
        EXPECT_TRUE(verify_product_formula(es, d).passed()) << "q=" << q << " d=" << d;
    }
}

TEST(DavenportHasse, EveryDivisorAndCharacter)
{
    for (std::uint64_t q : {13u, 25u, 37u, 49u}) {
        auto f = build_field_of_order(q);
        ExactSums es(f, ExactRing(*f));
        const auto r = verify_davenport_hasse_all(es);
        EXPECT_TRUE(r.passed()) << q;
        EXPECT_GT(r.relation.cases, 0u);
    }
}

TEST(DavenportHasse, RequiresDivisor)
{
    auto f = build_field(13, 1);
    ExactSums es(f, ExactRing(*f));
    try {
        (void)verify_davenport_hasse(es, 5, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CongruenceViolated);
    }
}

TEST(Decomposition, WaypointsOverThirteen)
{
    auto f = build_field(13, 1);
    ExactSums es(f, ExactRing(*f));
    const auto& ring = es.ring();
    const CurveParams curve{Family::A, 3, f->one(), f->one()};
    const auto r = decompose_theta_sum(es, curve);
    EXPECT_EQ(ring.to_integer(r.a_term), -1);
    EXPECT_EQ(ring.to_integer(r.b_term), 14);
    EXPECT_EQ(r.n_reconstructed, brute_count(*f, curve));
    EXPECT_EQ(ring.add(r.c_term, r.d_term), r.d_half);
    const std::int64_t n = brute_count(*f, curve);
    EXPECT_EQ(ring.to_integer(r.d_half), 13 * n - 169 - 13);
}

TEST(Decomposition, TermsMatchDirectLoops)
{
    // The four terms by their defining multi-variable sums.
    for (auto fam : {Family::A, Family::B}) {
        auto f = build_field(13, 1);
        FloatSums fs(f, FloatRing(*f));
        reference::Sums ref(*f);
        const CurveParams curve{fam, 4, f->element(2), f->element(5)};
        const auto r = decompose_theta_sum(fs, curve);
        reference::C A = 0, B = 0, C = 0, D = 0;
        for (std::uint32_t zc = 1; zc < 13; ++zc) {
            const FieldElem z{zc};
            A += ref.theta(f->mul(z, curve.b));
            for (std::uint32_t yc = 1; yc < 13; ++yc) {
                const FieldElem y{yc};
                B += ref.theta(f->mul(z, f->sub(curve.b, f->mul(y, y))));
            }
            for (std::uint32_t xc = 1; xc < 13; ++xc) {
                const FieldElem rhs = curve_rhs(*f, curve, FieldElem{xc});
                C += ref.theta(f->mul(z, rhs));
                for (std::uint32_t yc = 1; yc < 13; ++yc) {
                    const FieldElem y{yc};
                    D += ref.theta(f->mul(z, f->sub(rhs, f->mul(y, y))));
                }
            }
        }
        EXPECT_LT(std::abs(r.a_term - reference::to_double(A)), 1e-9);
        EXPECT_LT(std::abs(r.b_term - reference::to_double(B)), 1e-9);
        EXPECT_LT(std::abs(r.c_term - reference::to_double(C)), 1e-9);
        EXPECT_LT(std::abs(r.d_term - reference::to_double(D)), 1e-9);
    }
}

TEST(Decomposition, WaypointsAcrossFieldsAndFamilies)
{
    for (std::uint64_t q : {7u, 13u, 25u, 27u, 31u}) {
        auto f = build_field_of_order(q);
        ExactSums es(f, ExactRing(*f));
        const auto& ring = es.ring();
        for (auto fam : {Family::A, Family::B}) {
            for (int d : {2, 3, 4, 5}) {
                if (d % f->p() == 0 || (d - 1) % f->p() == 0)
                    continue;
                ThetaDecomposer<ExactRing> dec(es, fam, d);
                for (std::uint32_t a = 1; a < q; a += 3) {
                    for (std::uint32_t b = 1; b < q; b += 2) {
                        const CurveParams curve{fam, d, FieldElem{a}, FieldElem{b}};
                        const auto r = dec.decompose(curve.a, curve.b);
                        const std::int64_t phi_b = f->is_square(curve.b) ? 1 : -1;
                        const std::int64_t n = brute_count(*f, curve);
                        ASSERT_EQ(ring.to_integer(r.a_term), -1);
                        ASSERT_EQ(ring.to_integer(r.b_term), 1 + std::int64_t(q) * phi_b);
                        ASSERT_EQ(r.n_reconstructed, n);
                        ASSERT_EQ(ring.add(r.c_term, r.d_term), r.d_half)
                            << "q=" << q << " d=" << d << " family=" << to_string(fam) << " a=" << a << " b=" << b;
                        ASSERT_EQ(ring.to_integer(r.d_half),
                                  std::int64_t(q) * n - std::int64_t(q * q) - std::int64_t(q) * phi_b);
                    }
                }
            }
        }
    }
}
