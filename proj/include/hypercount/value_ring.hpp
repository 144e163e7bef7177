#pragma once

#include "hypercount/ffield.hpp"
#include "hypercount/numtheory.hpp"

#include <complex>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace hypercount {

// Character values, Gauss sums and series values all live in the cyclotomic
// ring Z[zeta_{p(q-1)}]. Two interchangeable realizations are provided:
//
//   FloatRing  complex doubles; integer results are rounded and rejected
//              when the residual exceeds the tolerance.
//   ExactRing  residues modulo an auxiliary prime l = 1 (mod p(q-1)) in
//              which zeta_{p(q-1)} has a fixed image w. Integer results are
//              recovered as balanced residues.
//
// Both expose the same interface, so the character-sum code is written once
// as templates over the ring type.

enum class Backend { Float, Exact };

std::string_view to_string(Backend backend) noexcept;

struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Backend-tagged payload used at API boundaries (reports, bindings).
using CharValue = std::variant<std::complex<double>, Residue>;

inline constexpr double kDefaultTolerance = 1e-6;

class FloatRing {
public:
    using Value = std::complex<double>;
    static constexpr Backend backend = Backend::Float;

    /// Running sum of ring values.
    class Accumulator {
    public:
        void add(const Value& v) noexcept { sum_ += v; }
        Value value() const noexcept { return sum_; }

    private:
        Value sum_{};
    };

    explicit FloatRing(const FieldCtx& field, double tolerance = kDefaultTolerance);

    Value zero() const noexcept { return {}; }
    Value one() const noexcept { return {1.0, 0.0}; }
    Value from_int(std::int64_t n) const noexcept { return {static_cast<double>(n), 0.0}; }

    Value add(const Value& a, const Value& b) const noexcept { return a + b; }
    Value sub(const Value& a, const Value& b) const noexcept { return a - b; }
    Value neg(const Value& a) const noexcept { return -a; }
    Value mul(const Value& a, const Value& b) const noexcept { return a * b; }
    Value inv(const Value& a) const;
    Value pow(Value a, std::uint64_t n) const noexcept;

    /// zeta_{q-1}^k.
    const Value& mult_root(std::uint64_t k) const noexcept { return mult_roots_[k % mult_roots_.size()]; }
    /// zeta_p^t.
    const Value& add_root(std::uint64_t t) const noexcept { return add_roots_[t % add_roots_.size()]; }

    Accumulator accumulator() const noexcept { return {}; }

    /// Relative distance max(1, |a|, |b|)^{-1} |a - b|.
    double residual(const Value& a, const Value& b) const noexcept;
    bool equal(const Value& a, const Value& b, double tol) const noexcept { return residual(a, b) <= tol; }
    bool equal(const Value& a, const Value& b) const noexcept { return equal(a, b, tolerance_); }

    /// Nearest integer; throws NonIntegerResult when either the imaginary
    /// part or the rounding residual exceeds the tolerance.
    std::int64_t to_integer(const Value& v) const;

    CharValue to_char_value(const Value& v) const { return v; }
    std::complex<double> to_complex(const Value& v) const noexcept { return v; }
    double tolerance() const noexcept { return tolerance_; }

private:
    double tolerance_;
    std::vector<Value> mult_roots_;
    std::vector<Value> add_roots_;
};

class ExactRing {
public:
    using Value = std::uint64_t;
    static constexpr Backend backend = Backend::Exact;

    class Accumulator {
    public:
        explicit Accumulator(std::uint64_t modulus) noexcept : modulus_(modulus) {}
        void add(Value v) noexcept { sum_ += v; }
        Value value() const noexcept { return static_cast<Value>(sum_ % modulus_); }

    private:
        nt::uint128 sum_ = 0;
        std::uint64_t modulus_;
    };

    /// Chooses the least prime l = 1 (mod p(q-1)) with
    /// l > 4 q^(ceil(max_degree/2) + 1). Throws AuxiliaryPrimeOutOfRange when
    /// that bound does not fit in 62 bits.
    explicit ExactRing(const FieldCtx& field, int max_degree = 5);

    Value zero() const noexcept { return 0; }
    Value one() const noexcept { return 1; }
    Value from_int(std::int64_t n) const noexcept;

    Value add(Value a, Value b) const noexcept
    {
        const Value s = a + b;
        return s >= ell_ ? s - ell_ : s;
    }
    Value sub(Value a, Value b) const noexcept { return a >= b ? a - b : a + ell_ - b; }
    Value neg(Value a) const noexcept { return a == 0 ? 0 : ell_ - a; }
    Value mul(Value a, Value b) const noexcept
    {
        return static_cast<Value>(static_cast<nt::uint128>(a) * b % ell_);
    }
    Value inv(Value a) const;
    Value pow(Value a, std::uint64_t n) const noexcept;

    Value mult_root(std::uint64_t k) const noexcept { return mult_roots_[k % mult_roots_.size()]; }
    Value add_root(std::uint64_t t) const noexcept { return add_roots_[t % add_roots_.size()]; }

    Accumulator accumulator() const noexcept { return Accumulator(ell_); }

    /// 0 when equal, 1 otherwise.
    double residual(Value a, Value b) const noexcept { return a == b ? 0.0 : 1.0; }
    bool equal(Value a, Value b, double = 0.0) const noexcept { return a == b; }

    /// Balanced residue in (-l/2, l/2]. Throws NonIntegerResult when its
    /// magnitude exceeds 2 q^2, which no legitimate count can reach.
    std::int64_t to_integer(Value v) const;

    CharValue to_char_value(Value v) const { return Residue{v, ell_}; }
    /// Image in C is not recoverable from a residue; returns the balanced
    /// residue on the real axis.
    std::complex<double> to_complex(Value v) const noexcept;

    std::uint64_t modulus() const noexcept { return ell_; }
    /// Image of zeta_{p(q-1)} in F_l.
    std::uint64_t root() const noexcept { return root_; }
    double tolerance() const noexcept { return 0.0; }

private:
    std::uint64_t ell_ = 0;
    std::uint64_t root_ = 0;
    std::int64_t integer_bound_ = 0;
    std::vector<Value> mult_roots_;
    std::vector<Value> add_roots_;
};

} // namespace hypercount
