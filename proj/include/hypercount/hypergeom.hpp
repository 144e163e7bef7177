#pragma once

#include "hypercount/characters.hpp"

#include <span>
#include <vector>

namespace hypercount {

/// Parameters of a Gaussian hypergeometric series
///
///     n+1 F n ( A_0, A_1, ..., A_n ; B_1, ..., B_n | x )
///
/// tops holds A_0..A_n and bottoms B_1..B_n, so tops.size() == bottoms.size() + 1.
struct HgfSpec {
    std::vector<MultChar> tops;
    std::vector<MultChar> bottoms;
    FieldElem argument;
};

/// A series with fixed characters, ready to be evaluated at many arguments.
///
/// The value at x is q/(q-1) * sum_chi c(chi) chi(x) with
/// c(chi) = (A_0 chi choose chi) prod_i (A_i chi choose B_i chi). Construction
/// computes all q-1 coefficients (O(n q^2)); each evaluation is then O(q).
template <class Ring>
class PreparedHgf {
public:
    using Value = typename Ring::Value;

    /// Throws MalformedSeries on a length mismatch and MixedFieldContexts when
    /// a character is not over the engine's field.
    PreparedHgf(const CharacterSums<Ring>& sums, std::vector<MultChar> tops, std::vector<MultChar> bottoms);

    Value evaluate(FieldElem x) const;
    Value operator()(FieldElem x) const { return evaluate(x); }

    /// Coefficient of T^k, already scaled by q/(q-1).
    std::span<const Value> coefficients() const noexcept { return coeffs_; }
    const std::vector<MultChar>& tops() const noexcept { return tops_; }
    const std::vector<MultChar>& bottoms() const noexcept { return bottoms_; }

private:
    const CharacterSums<Ring>* sums_;
    std::vector<MultChar> tops_;
    std::vector<MultChar> bottoms_;
    std::vector<Value> coeffs_;
};

/// One-shot evaluation of the defining character sum.
template <class Ring>
typename Ring::Value evaluate_hgf(const CharacterSums<Ring>& sums, const HgfSpec& spec);

extern template class PreparedHgf<FloatRing>;
extern template class PreparedHgf<ExactRing>;

} // namespace hypercount
