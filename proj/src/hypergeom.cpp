#include "hypercount/hypergeom.hpp"
#include "hypercount/errors.hpp"

#include <string>

namespace hypercount {

template <class Ring>
PreparedHgf<Ring>::PreparedHgf(const CharacterSums<Ring>& sums, std::vector<MultChar> tops,
                               std::vector<MultChar> bottoms)
    : sums_(&sums), tops_(std::move(tops)), bottoms_(std::move(bottoms))
{
    if (tops_.empty() || tops_.size() != bottoms_.size() + 1)
        throw Error(ErrorCode::MalformedSeries,
                    "series needs one more top than bottom characters (got " + std::to_string(tops_.size()) +
                        " and " + std::to_string(bottoms_.size()) + ")");
    for (const auto& c : tops_)
        sums.check_same_field(c);
    for (const auto& c : bottoms_)
        sums.check_same_field(c);

    const Ring& ring = sums.ring();
    const std::int64_t n = sums.field().group_order();
    const Value scale = ring.mul(sums.q_value(), ring.inv(ring.from_int(n)));

    // Slot 0 pairs A_0 with the trivial bottom character.
    std::vector<std::int64_t> top_idx, bottom_idx;
    top_idx.reserve(tops_.size());
    bottom_idx.reserve(tops_.size());
    top_idx.push_back(tops_[0].index());
    bottom_idx.push_back(0);
    for (std::size_t i = 0; i < bottoms_.size(); ++i) {
        top_idx.push_back(tops_[i + 1].index());
        bottom_idx.push_back(bottoms_[i].index());
    }

    // Ascending chi index keeps floating-point results reproducible.
    coeffs_.resize(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        Value c = scale;
        for (std::size_t i = 0; i < top_idx.size(); ++i)
            c = ring.mul(c, sums.binom_power(top_idx[i] + k, bottom_idx[i] + k));
        coeffs_[static_cast<std::size_t>(k)] = c;
    }
}

template <class Ring>
typename Ring::Value PreparedHgf<Ring>::evaluate(FieldElem x) const
{
    const Ring& ring = sums_->ring();
    if (x.code >= sums_->field().q())
        throw Error(ErrorCode::MixedFieldContexts, "series argument is not an element of this field");
    if (x.is_zero())
        return ring.zero();
    const std::uint64_t n = sums_->field().group_order();
    const std::uint64_t lg = sums_->field().dlog(x);
    auto acc = ring.accumulator();
    std::uint64_t e = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        acc.add(ring.mul(coeffs_[k], ring.mult_root(e)));
        e += lg;
        if (e >= n)
            e -= n;
    }
    return acc.value();
}

template <class Ring>
typename Ring::Value evaluate_hgf(const CharacterSums<Ring>& sums, const HgfSpec& spec)
{
    PreparedHgf<Ring> series(sums, spec.tops, spec.bottoms);
    return series.evaluate(spec.argument);
}

template class PreparedHgf<FloatRing>;
template class PreparedHgf<ExactRing>;
template FloatRing::Value evaluate_hgf(const CharacterSums<FloatRing>&, const HgfSpec&);
template ExactRing::Value evaluate_hgf(const CharacterSums<ExactRing>&, const HgfSpec&);

} // namespace hypercount
