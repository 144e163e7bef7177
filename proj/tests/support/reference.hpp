#pragma once

// Slow, table-free character sums used as ground truth in tests. Discrete
// logs come from repeated multiplication by the generator and traces from
// the Frobenius orbit, so nothing here reads the engine's caches.

#include "hypercount/characters.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace reference {

using hypercount::FieldCtx;
using hypercount::FieldElem;
using C = std::complex<long double>;

class Sums {
public:
    explicit Sums(const FieldCtx& field) : field_(field), log_(field.q(), 0)
    {
        FieldElem x = field.one();
        for (std::uint32_t i = 0; i + 1 < field.q(); ++i) {
            log_[x.code] = i;
            x = field.mul(x, field.generator());
        }
    }

    std::int64_t n() const { return field_.group_order(); }

    std::int64_t mod(std::int64_t k) const { return ((k % n()) + n()) % n(); }

    C root(std::int64_t num, std::int64_t den) const
    {
        const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(num) /
                                  static_cast<long double>(den);
        return {std::cos(angle), std::sin(angle)};
    }

    C chi(std::int64_t k, FieldElem x) const
    {
        if (x.is_zero())
            return 0;
        return root(mod(k) * log_[x.code] % n(), n());
    }

    std::uint32_t trace(FieldElem x) const
    {
        FieldElem acc = field_.zero();
        FieldElem conj = x;
        for (unsigned i = 0; i < field_.e(); ++i) {
            acc = field_.add(acc, conj);
            conj = field_.pow(conj, field_.p());
        }
        return acc.code;
    }

    C theta(FieldElem x) const { return root(trace(x), field_.p()); }

    C gauss(std::int64_t k) const
    {
        C s = 0;
        for (std::uint32_t c = 0; c < field_.q(); ++c)
            s += chi(k, FieldElem{c}) * theta(FieldElem{c});
        return s;
    }

    C jacobi(std::int64_t i, std::int64_t j) const
    {
        C s = 0;
        for (std::uint32_t c = 0; c < field_.q(); ++c) {
            const FieldElem x{c};
            s += chi(i, x) * chi(j, field_.sub(field_.one(), x));
        }
        return s;
    }

    C binom(std::int64_t i, std::int64_t j) const
    {
        const FieldElem minus_one = field_.neg(field_.one());
        return chi(j, minus_one) * jacobi(i, -j) / static_cast<long double>(field_.q());
    }

    /// Greene's series by its definition; tops/bottoms are T-exponents.
    C hgf(const std::vector<std::int64_t>& tops, const std::vector<std::int64_t>& bottoms, FieldElem x) const
    {
        C s = 0;
        for (std::int64_t k = 0; k < n(); ++k) {
            C term = binom(tops[0] + k, k);
            for (std::size_t i = 0; i < bottoms.size(); ++i)
                term *= binom(tops[i + 1] + k, bottoms[i] + k);
            s += term * chi(k, x);
        }
        return s * static_cast<long double>(field_.q()) / static_cast<long double>(n());
    }

    std::uint32_t log(FieldElem x) const { return log_[x.code]; }

private:
    const FieldCtx& field_;
    std::vector<std::uint32_t> log_;
};

inline std::complex<double> to_double(C v)
{
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

} // namespace reference
