#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hypercount {

inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 20;

/// An element of F_q stored as its coefficient vector over F_p packed in
/// base p: code = c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Code 0 is zero and
/// codes below p form the prime subfield.
struct FieldElem {
    std::uint32_t code = 0;

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr bool operator==(FieldElem, FieldElem) = default;
};

/// A realized finite field F_{p^e} with a fixed generator g of F_q^x and
/// dense exp/log/trace tables. Immutable after construction; share it via
/// std::shared_ptr<const FieldCtx> across threads.
class FieldCtx {
public:
    /// Builds F_{p^e}. The modulus is the least monic irreducible of degree e
    /// (ordered by packed code of its lower coefficients) and g is the first
    /// element in code order with multiplicative order q-1.
    static std::shared_ptr<const FieldCtx> build(std::uint64_t p, unsigned e,
                                                 std::uint64_t table_budget = kDefaultTableBudget);

    std::uint32_t p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    /// q - 1, the order of F_q^x and of the character group.
    std::uint32_t group_order() const noexcept { return q_ - 1; }

    /// Lower coefficients c_0..c_{e-1} of the monic modulus x^e + ... .
    std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
    FieldElem generator() const noexcept { return generator_; }

    FieldElem zero() const noexcept { return FieldElem{0}; }
    FieldElem one() const noexcept { return FieldElem{1}; }
    /// Image of an integer in the prime subfield.
    FieldElem from_int(std::int64_t n) const noexcept;
    FieldElem from_coefficients(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coefficients(FieldElem x) const;
    /// The element with the given code; codes run over [0, q).
    FieldElem element(std::uint32_t code) const;

    FieldElem add(FieldElem x, FieldElem y) const noexcept;
    FieldElem sub(FieldElem x, FieldElem y) const noexcept;
    FieldElem neg(FieldElem x) const noexcept;
    FieldElem mul(FieldElem x, FieldElem y) const noexcept;
    FieldElem inv(FieldElem x) const;
    FieldElem div(FieldElem x, FieldElem y) const;
    /// x^n for any integer n; negative n requires x != 0. 0^0 = 1.
    FieldElem pow(FieldElem x, std::int64_t n) const;

    /// g^i for any integer i (reduced mod q-1).
    FieldElem exp(std::int64_t i) const noexcept;
    /// Discrete log base g, in [0, q-1). Throws LogOfZero for x = 0.
    std::uint32_t dlog(FieldElem x) const;
    /// Absolute trace to F_p as an integer in [0, p).
    std::uint32_t trace(FieldElem x) const noexcept { return trace_table_[x.code]; }
    /// True for nonzero squares.
    bool is_square(FieldElem x) const noexcept;

private:
    FieldCtx() = default;

    std::uint32_t p_ = 0;
    unsigned e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> place_values_; // p^i
    FieldElem generator_;
    std::vector<std::uint32_t> exp_table_;  // length q-1
    std::vector<std::uint32_t> log_table_;  // length q, entry 0 unused
    std::vector<std::uint32_t> trace_table_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

inline FieldPtr build_field(std::uint64_t p, unsigned e, std::uint64_t table_budget = kDefaultTableBudget)
{
    return FieldCtx::build(p, e, table_budget);
}

/// Builds F_q from q itself; q must be an odd prime power.
FieldPtr build_field_of_order(std::uint64_t q, std::uint64_t table_budget = kDefaultTableBudget);

} // namespace hypercount
