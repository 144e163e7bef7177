#include "hypercount/errors.hpp"
#include "hypercount/hypergeom.hpp"
#include "reference.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hypercount;

namespace {

std::vector<MultChar> chars(const FieldCtx& f, const std::vector<std::int64_t>& idx)
{
    std::vector<MultChar> out;
    for (auto k : idx)
        out.emplace_back(f, k);
    return out;
}

} // namespace

TEST(Hypergeometric, ZeroArgumentGivesZero)
{
    auto f = build_field(13, 1);
    FloatSums fs(f, FloatRing(*f));
    ExactSums es(f, ExactRing(*f));
    const HgfSpec spec{chars(*f, {6, 0}), chars(*f, {6}), f->zero()};
    EXPECT_EQ(evaluate_hgf(fs, spec), std::complex<double>(0, 0));
    EXPECT_EQ(evaluate_hgf(es, spec), 0u);
}

TEST(Hypergeometric, QuadraticSeriesMatchesDefinition)
{
    auto f = build_field(13, 1);
    FloatSums fs(f, FloatRing(*f));
    reference::Sums ref(*f);
    const HgfSpec spec{chars(*f, {6, 0}), chars(*f, {6}), f->generator()};
    const auto expected = reference::to_double(ref.hgf({6, 0}, {6}, f->generator()));
    EXPECT_LT(std::abs(evaluate_hgf(fs, spec) - expected), 1e-9);
}

TEST(Hypergeometric, RandomSeriesMatchDefinition)
{
    std::mt19937_64 rng(20261015);
    for (std::uint64_t q : {7u, 13u, 25u, 27u, 31u, 49u, 61u, 97u}) {
        auto f = build_field_of_order(q);
        FloatSums fs(f, FloatRing(*f));
        ExactSums es(f, ExactRing(*f));
        reference::Sums ref(*f);
        std::uniform_int_distribution<std::int64_t> idx(0, f->group_order() - 1);
        std::uniform_int_distribution<std::uint32_t> elem(0, f->q() - 1);
        for (int trial = 0; trial < 4; ++trial) {
            const std::size_t len = 1 + trial % 3;
            std::vector<std::int64_t> tops, bottoms;
            for (std::size_t i = 0; i <= len; ++i)
                tops.push_back(idx(rng));
            for (std::size_t i = 0; i < len; ++i)
                bottoms.push_back(idx(rng));
            PreparedHgf<FloatRing> fseries(fs, chars(*f, tops), chars(*f, bottoms));
            PreparedHgf<ExactRing> eseries(es, chars(*f, tops), chars(*f, bottoms));
            for (int k = 0; k < 3; ++k) {
                const FieldElem x{elem(rng)};
                const auto expected = reference::to_double(ref.hgf(tops, bottoms, x));
                const auto got = fseries(x);
                EXPECT_LT(std::abs(got - expected), 1e-9 * std::max(1.0, std::abs(expected)))
                    << "q=" << q << " x=" << x.code;
                EXPECT_EQ(evaluate_hgf(fs, HgfSpec{chars(*f, tops), chars(*f, bottoms), x}), got);
                EXPECT_EQ(evaluate_hgf(es, HgfSpec{chars(*f, tops), chars(*f, bottoms), x}), eseries(x));
            }
        }
    }
}

TEST(Hypergeometric, ExactAndFloatAgreeOnIntegerCombination)
{
    // q * 2F1(phi, phi; eps | x) is an integer (a Legendre-family trace).
    for (std::uint64_t q : {13u, 25u, 29u}) {
        auto f = build_field_of_order(q);
        FloatSums fs(f, FloatRing(*f));
        ExactSums es(f, ExactRing(*f));
        const std::int64_t h = f->group_order() / 2;
        PreparedHgf<FloatRing> fseries(fs, chars(*f, {h, h}), chars(*f, {0}));
        PreparedHgf<ExactRing> eseries(es, chars(*f, {h, h}), chars(*f, {0}));
        for (std::uint32_t c = 0; c < f->q(); ++c) {
            const FieldElem x{c};
            const auto fv = fs.ring().to_integer(fseries(x) * double(q));
            const auto ev = es.ring().to_integer(es.ring().mul(eseries(x), es.q_value()));
            EXPECT_EQ(fv, ev) << "q=" << q << " x=" << c;
        }
    }
}

TEST(Hypergeometric, PermutingLowerSlotsLeavesValueUnchanged)
{
    std::mt19937_64 rng(7);
    auto f = build_field(41, 1);
    ExactSums es(f, ExactRing(*f));
    std::uniform_int_distribution<std::int64_t> idx(0, 39);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::int64_t> tops{idx(rng), idx(rng), idx(rng), idx(rng)};
        std::vector<std::int64_t> bottoms{idx(rng), idx(rng), idx(rng)};
        PreparedHgf<ExactRing> base(es, chars(*f, tops), chars(*f, bottoms));
        std::vector<std::int64_t> t2{tops[0], tops[3], tops[1], tops[2]};
        std::vector<std::int64_t> b2{bottoms[2], bottoms[0], bottoms[1]};
        PreparedHgf<ExactRing> permuted(es, chars(*f, t2), chars(*f, b2));
        for (std::uint32_t c = 0; c < 41; ++c)
            EXPECT_EQ(base(FieldElem{c}), permuted(FieldElem{c}));
    }
}

TEST(Hypergeometric, MalformedSeriesRejected)
{
    auto f = build_field(13, 1);
    FloatSums fs(f, FloatRing(*f));
    try {
        PreparedHgf<FloatRing> bad(fs, chars(*f, {1, 2}), chars(*f, {1, 2}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedSeries);
    }
}

TEST(Hypergeometric, MixedFieldRejected)
{
    auto f = build_field(13, 1);
    auto g = build_field(13, 1);
    FloatSums fs(f, FloatRing(*f));
    try {
        (void)evaluate_hgf(fs, HgfSpec{chars(*g, {1, 2}), chars(*g, {3}), f->one()});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedFieldContexts);
    }
    PreparedHgf<FloatRing> ok(fs, chars(*f, {1, 2}), chars(*f, {3}));
    EXPECT_THROW((void)ok(FieldElem{13}), Error);
}
