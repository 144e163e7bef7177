#pragma once

#include "hypercount/ffield.hpp"
#include "hypercount/value_ring.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace hypercount {

/// The multiplicative character T^k, where T is the character sending the
/// field generator g to zeta_{q-1}. Extended to F_q by chi(0) = 0.
class MultChar {
public:
    /// T^index on the given field; index is reduced mod q-1.
    MultChar(const FieldCtx& field, std::int64_t index);

    std::uint32_t index() const noexcept { return index_; }
    const FieldCtx& field() const noexcept { return *field_; }
    /// (q-1) / gcd(index, q-1).
    std::uint32_t order() const noexcept;
    bool is_trivial() const noexcept { return index_ == 0; }

    MultChar operator*(const MultChar& other) const;
    MultChar inverse() const;
    MultChar pow(std::int64_t n) const;

    friend bool operator==(const MultChar& a, const MultChar& b) noexcept
    {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }

private:
    const FieldCtx* field_; // non-owning; the field outlives its characters
    std::uint32_t index_;
};

/// Trivial character epsilon = T^0.
MultChar trivial_char(const FieldCtx& field);
/// Quadratic character phi = T^{(q-1)/2}.
MultChar quadratic_char(const FieldCtx& field);
/// T^{(q-1)/n}, a character of exact order n. Throws OrderDoesNotDivide.
MultChar char_of_order(const FieldCtx& field, std::uint64_t n);

/// Character-sum engine over one field and one value-ring backend: character
/// evaluation, the additive character theta, Gauss sums (memoized), Jacobi
/// sums and Greene's binomial coefficient.
///
/// Not copyable; the Gauss-sum table is filled once on first use and is then
/// read-only, so a single engine may be shared by concurrent readers.
template <class Ring>
class CharacterSums {
public:
    using Value = typename Ring::Value;

    CharacterSums(FieldPtr field, Ring ring);
    CharacterSums(const CharacterSums&) = delete;
    CharacterSums& operator=(const CharacterSums&) = delete;

    const FieldCtx& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Ring& ring() const noexcept { return ring_; }

    /// chi(x); zero at x = 0 for every chi including epsilon.
    Value eval(const MultChar& chi, FieldElem x) const;
    /// T^k(x) for a raw exponent k.
    Value eval_power(std::int64_t k, FieldElem x) const;

    /// theta(x) = zeta_p^{tr(x)}.
    Value theta(FieldElem x) const noexcept { return ring_.add_root(field_->trace(x)); }

    /// G(chi) = sum_x chi(x) theta(x), from the memoized table.
    Value gauss_sum(const MultChar& chi) const;
    /// G_m = G(T^m) for any integer m.
    Value gauss(std::int64_t m) const;
    /// G(chi) by direct summation, bypassing the table.
    Value gauss_sum_direct(const MultChar& chi) const;

    /// J(A, B) = sum_x A(x) B(1 - x), by direct summation.
    Value jacobi_sum(const MultChar& a, const MultChar& b) const;
    /// J(T^i, T^j) for raw exponents.
    Value jacobi_power(std::int64_t i, std::int64_t j) const;

    /// (A choose B) = B(-1)/q * J(A, conj B).
    Value binom(const MultChar& a, const MultChar& b) const;
    Value binom_power(std::int64_t i, std::int64_t j) const;

    /// q as a ring value and its inverse.
    Value q_value() const noexcept { return q_; }
    Value q_inverse() const noexcept { return q_inv_; }

    void check_same_field(const MultChar& chi) const;

private:
    const std::vector<Value>& gauss_table() const;
    std::uint32_t reduce(std::int64_t k) const noexcept;

    FieldPtr field_;
    Ring ring_;
    Value q_;
    Value q_inv_;
    // (log x, log(1 - x)) for every x outside {0, 1}.
    std::vector<std::uint32_t> jacobi_logs_;
    mutable std::once_flag gauss_once_;
    mutable std::vector<Value> gauss_;
};

using FloatSums = CharacterSums<FloatRing>;
using ExactSums = CharacterSums<ExactRing>;

extern template class CharacterSums<FloatRing>;
extern template class CharacterSums<ExactRing>;

} // namespace hypercount
