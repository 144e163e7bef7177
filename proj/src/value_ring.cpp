#include "hypercount/value_ring.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hypercount {

std::string_view to_string(Backend backend) noexcept
{
    return backend == Backend::Float ? "float" : "exact";
}

namespace {

std::vector<std::complex<double>> unit_roots(std::uint64_t n)
{
    std::vector<std::complex<double>> out(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        // Exact values on the axes keep sums of real characters exactly real.
        if (4 * k % n == 0) {
            static constexpr std::complex<double> kAxes[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            out[k] = kAxes[4 * k / n];
            continue;
        }
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        out[k] = {std::cos(angle), std::sin(angle)};
    }
    return out;
}

} // namespace

FloatRing::FloatRing(const FieldCtx& field, double tolerance)
    : tolerance_(tolerance), mult_roots_(unit_roots(field.group_order())), add_roots_(unit_roots(field.p()))
{
    if (!(tolerance > 0.0))
        throw std::invalid_argument("tolerance must be positive");
}

FloatRing::Value FloatRing::inv(const Value& a) const
{
    if (a == Value{})
        throw std::domain_error("inverse of zero in the value ring");
    return 1.0 / a;
}

FloatRing::Value FloatRing::pow(Value a, std::uint64_t n) const noexcept
{
    Value r = one();
    while (n > 0) {
        if (n & 1)
            r *= a;
        a *= a;
        n >>= 1;
    }
    return r;
}

double FloatRing::residual(const Value& a, const Value& b) const noexcept
{
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

std::int64_t FloatRing::to_integer(const Value& v) const
{
    const double rounded = std::round(v.real());
    const double err = std::max(std::abs(v.real() - rounded), std::abs(v.imag()));
    if (!(err <= tolerance_)) {
        throw Error(ErrorCode::NonIntegerResult,
                    "value (" + std::to_string(v.real()) + ", " + std::to_string(v.imag()) +
                        ") is not an integer within tolerance " + std::to_string(tolerance_));
    }
    return static_cast<std::int64_t>(rounded);
}

ExactRing::ExactRing(const FieldCtx& field, int max_degree)
{
    if (max_degree < 2)
        max_degree = 2;
    constexpr nt::uint128 kLimit = static_cast<nt::uint128>(1) << 62;
    const std::uint64_t q = field.q();
    const std::uint64_t m = std::uint64_t{field.p()} * field.group_order();

    nt::uint128 bound = 4;
    const int power = (max_degree + 1) / 2 + 1;
    for (int i = 0; i < power; ++i) {
        bound *= q;
        if (bound >= kLimit)
            throw Error(ErrorCode::AuxiliaryPrimeOutOfRange,
                        "auxiliary prime for q=" + std::to_string(q) + ", d=" + std::to_string(max_degree) +
                            " exceeds 62 bits");
    }

    nt::uint128 candidate = (bound / m + 1) * m + 1;
    while (!nt::is_prime(static_cast<std::uint64_t>(candidate))) {
        candidate += m;
        if (candidate >= kLimit)
            throw Error(ErrorCode::AuxiliaryPrimeOutOfRange, "no auxiliary prime below 2^62");
    }
    ell_ = static_cast<std::uint64_t>(candidate);

    // Image of zeta_{p(q-1)}: c^{(l-1)/m} for the first c giving exact order m.
    const auto m_factors = nt::prime_factors(m);
    for (std::uint64_t c = 2;; ++c) {
        const std::uint64_t w = nt::pow_mod(c, (ell_ - 1) / m, ell_);
        bool full = true;
        for (auto r : m_factors) {
            if (nt::pow_mod(w, m / r, ell_) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            root_ = w;
            break;
        }
    }

    const std::uint64_t zeta_mult = nt::pow_mod(root_, field.p(), ell_);
    const std::uint64_t zeta_add = nt::pow_mod(root_, field.group_order(), ell_);
    mult_roots_.resize(field.group_order());
    Value v = 1;
    for (auto& r : mult_roots_) {
        r = v;
        v = mul(v, zeta_mult);
    }
    add_roots_.resize(field.p());
    v = 1;
    for (auto& r : add_roots_) {
        r = v;
        v = mul(v, zeta_add);
    }
    integer_bound_ = 2 * static_cast<std::int64_t>(q) * static_cast<std::int64_t>(q);
}

ExactRing::Value ExactRing::from_int(std::int64_t n) const noexcept
{
    return nt::reduce(n, ell_);
}

ExactRing::Value ExactRing::inv(Value a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero in the value ring");
    return nt::pow_mod(a, ell_ - 2, ell_);
}

ExactRing::Value ExactRing::pow(Value a, std::uint64_t n) const noexcept
{
    return nt::pow_mod(a, n, ell_);
}

std::int64_t ExactRing::to_integer(Value v) const
{
    const std::int64_t balanced = v > ell_ / 2 ? -static_cast<std::int64_t>(ell_ - v) : static_cast<std::int64_t>(v);
    if (balanced > integer_bound_ || balanced < -integer_bound_) {
        throw Error(ErrorCode::NonIntegerResult,
                    "residue " + std::to_string(v) + " mod " + std::to_string(ell_) +
                        " does not lift to an integer of magnitude <= " + std::to_string(integer_bound_));
    }
    return balanced;
}

std::complex<double> ExactRing::to_complex(Value v) const noexcept
{
    const std::int64_t balanced = v > ell_ / 2 ? -static_cast<std::int64_t>(ell_ - v) : static_cast<std::int64_t>(v);
    return {static_cast<double>(balanced), 0.0};
}

} // namespace hypercount
