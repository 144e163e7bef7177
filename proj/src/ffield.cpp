#include "hypercount/ffield.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/numtheory.hpp"

#include <algorithm>
#include <string>

namespace hypercount {

namespace {

// Dense polynomials over F_p, lowest coefficient first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// Remainder of a modulo a nonzero polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const auto lead_inv = static_cast<std::uint32_t>(nt::pow_mod(m.back(), p - 2, p));
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * m[i] % p) % p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    Poly r(acc.begin(), acc.end());
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint32_t p)
{
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (exp > 0) {
        if (exp & 1)
            result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        exp >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool has_root(const Poly& f, std::uint32_t p)
{
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it)
            v = (v * x + *it) % p;
        if (v == 0)
            return true;
    }
    return false;
}

// Rabin's test for a monic f of degree e >= 2: x^{p^e} = x mod f and
// gcd(x^{p^{e/r}} - x, f) = 1 for every prime r | e.
bool is_irreducible(const Poly& f, unsigned e, std::uint32_t p)
{
    if (has_root(f, p))
        return false;
    const Poly x{0, 1};
    std::vector<Poly> frob(e + 1);
    frob[0] = poly_mod(x, f, p);
    for (unsigned k = 1; k <= e; ++k)
        frob[k] = poly_powmod(frob[k - 1], p, f, p);
    if (frob[e] != frob[0])
        return false;
    for (auto r : nt::prime_factors(e)) {
        Poly g = poly_gcd(f, poly_sub(frob[e / r], x, p), p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

Poly unpack(std::uint64_t code, unsigned len, std::uint32_t p)
{
    Poly out(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return out;
}

std::uint32_t pack(const Poly& a, std::uint32_t p)
{
    std::uint64_t code = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        code = code * p + *it;
    return static_cast<std::uint32_t>(code);
}

} // namespace

std::shared_ptr<const FieldCtx> FieldCtx::build(std::uint64_t p, unsigned e, std::uint64_t table_budget)
{
    if (!nt::is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2)
        throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (e == 0)
        throw std::invalid_argument("field degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > table_budget || q > kDefaultTableBudget)
            throw Error(ErrorCode::TableBudgetExceeded,
                        std::to_string(p) + "^" + std::to_string(e) + " exceeds the table budget of " +
                            std::to_string(std::min(table_budget, kDefaultTableBudget)));
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = static_cast<std::uint32_t>(p);
    ctx->e_ = e;
    ctx->q_ = static_cast<std::uint32_t>(q);
    ctx->place_values_.resize(e);
    for (unsigned i = 0; i < e; ++i)
        ctx->place_values_[i] = static_cast<std::uint32_t>(nt::ipow(p, i));

    const auto pp = static_cast<std::uint32_t>(p);
    const std::uint64_t order = q - 1;
    const auto order_factors = nt::prime_factors(order);

    Poly modulus_poly; // full monic polynomial, e >= 2 only
    if (e >= 2) {
        for (std::uint64_t code = 0; code < q; ++code) {
            Poly f = unpack(code, e, pp);
            f.push_back(1);
            if (is_irreducible(f, e, pp)) {
                modulus_poly = std::move(f);
                break;
            }
        }
        if (modulus_poly.empty())
            throw Error(ErrorCode::NoIrreducibleFound,
                        "no irreducible polynomial of degree " + std::to_string(e) + " found");
    }

    auto has_full_order = [&](std::uint32_t code) {
        for (auto r : order_factors) {
            const std::uint64_t k = order / r;
            if (e == 1) {
                if (nt::pow_mod(code, k, p) == 1)
                    return false;
            } else if (poly_powmod(unpack(code, e, pp), k, modulus_poly, pp) == Poly{1}) {
                return false;
            }
        }
        return true;
    };

    std::uint32_t g = 0;
    for (std::uint32_t code = 2; code < q; ++code) {
        if (has_full_order(code)) {
            g = code;
            break;
        }
    }
    if (g == 0)
        throw Error(ErrorCode::NoIrreducibleFound, "no generator found for F_" + std::to_string(q));
    ctx->generator_ = FieldElem{g};

    if (e == 1)
        ctx->modulus_ = {(pp - g) % pp}; // x - g
    else
        ctx->modulus_.assign(modulus_poly.begin(), modulus_poly.end() - 1);

    ctx->exp_table_.resize(order);
    ctx->log_table_.assign(q, 0);
    if (e == 1) {
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            ctx->exp_table_[i] = static_cast<std::uint32_t>(v);
            v = v * g % p;
        }
    } else {
        const Poly gp = unpack(g, e, pp);
        Poly v{1};
        for (std::uint64_t i = 0; i < order; ++i) {
            ctx->exp_table_[i] = pack(v, pp);
            v = poly_mulmod(v, gp, modulus_poly, pp);
        }
    }
    for (std::uint32_t i = 0; i < order; ++i)
        ctx->log_table_[ctx->exp_table_[i]] = i;

    // tr(x) = x + x^p + ... + x^{p^{e-1}}, evaluated through the log table.
    ctx->trace_table_.assign(q, 0);
    for (std::uint32_t code = 1; code < q; ++code) {
        const std::uint64_t lg = ctx->log_table_[code];
        FieldElem acc{0};
        std::uint64_t power = 1;
        for (unsigned i = 0; i < e; ++i) {
            acc = ctx->add(acc, FieldElem{ctx->exp_table_[lg * power % order]});
            power *= p;
        }
        if (acc.code >= p)
            throw Error(ErrorCode::NoIrreducibleFound, "trace left the prime subfield");
        ctx->trace_table_[code] = acc.code;
    }
    return ctx;
}

FieldPtr build_field_of_order(std::uint64_t q, std::uint64_t table_budget)
{
    auto pp = nt::as_prime_power(q);
    if (!pp)
        throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not an odd prime power");
    if (pp->p == 2)
        throw Error(ErrorCode::EvenCharacteristic, std::to_string(q) + " is not an odd prime power");
    return FieldCtx::build(pp->p, pp->e, table_budget);
}

FieldElem FieldCtx::from_int(std::int64_t n) const noexcept
{
    return FieldElem{static_cast<std::uint32_t>(nt::reduce(n, p_))};
}

FieldElem FieldCtx::from_coefficients(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() > e_)
        throw std::invalid_argument("too many coefficients for F_" + std::to_string(q_));
    std::uint64_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        code = code * p_ + coeffs[i] % p_;
    return FieldElem{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> FieldCtx::coefficients(FieldElem x) const
{
    std::vector<std::uint32_t> out(e_);
    std::uint32_t c = x.code;
    for (unsigned i = 0; i < e_; ++i) {
        out[i] = c % p_;
        c /= p_;
    }
    return out;
}

FieldElem FieldCtx::element(std::uint32_t code) const
{
    if (code >= q_)
        throw std::out_of_range("element code " + std::to_string(code) + " outside F_" + std::to_string(q_));
    return FieldElem{code};
}

FieldElem FieldCtx::add(FieldElem x, FieldElem y) const noexcept
{
    if (e_ == 1) {
        const std::uint32_t s = x.code + y.code;
        return FieldElem{s >= p_ ? s - p_ : s};
    }
    std::uint32_t a = x.code, b = y.code, out = 0;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_ + b % p_;
        if (d >= p_)
            d -= p_;
        out += d * place_values_[i];
        a /= p_;
        b /= p_;
    }
    return FieldElem{out};
}

FieldElem FieldCtx::neg(FieldElem x) const noexcept
{
    if (e_ == 1)
        return FieldElem{x.code == 0 ? 0 : p_ - x.code};
    std::uint32_t a = x.code, out = 0;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * place_values_[i];
        a /= p_;
    }
    return FieldElem{out};
}

FieldElem FieldCtx::sub(FieldElem x, FieldElem y) const noexcept
{
    return add(x, neg(y));
}

FieldElem FieldCtx::mul(FieldElem x, FieldElem y) const noexcept
{
    if (x.is_zero() || y.is_zero())
        return zero();
    std::uint32_t s = log_table_[x.code] + log_table_[y.code];
    if (s >= q_ - 1)
        s -= q_ - 1;
    return FieldElem{exp_table_[s]};
}

FieldElem FieldCtx::inv(FieldElem x) const
{
    const std::uint32_t lg = dlog(x);
    return FieldElem{exp_table_[lg == 0 ? 0 : q_ - 1 - lg]};
}

FieldElem FieldCtx::div(FieldElem x, FieldElem y) const
{
    return mul(x, inv(y));
}

FieldElem FieldCtx::pow(FieldElem x, std::int64_t n) const
{
    if (x.is_zero()) {
        if (n < 0)
            throw Error(ErrorCode::LogOfZero, "negative power of zero");
        return n == 0 ? one() : zero();
    }
    const std::uint64_t order = q_ - 1;
    const std::uint64_t k = nt::reduce(n, order);
    return FieldElem{exp_table_[static_cast<std::uint64_t>(log_table_[x.code]) * k % order]};
}

FieldElem FieldCtx::exp(std::int64_t i) const noexcept
{
    return FieldElem{exp_table_[nt::reduce(i, q_ - 1)]};
}

std::uint32_t FieldCtx::dlog(FieldElem x) const
{
    if (x.is_zero())
        throw Error(ErrorCode::LogOfZero, "discrete log of zero");
    return log_table_[x.code];
}

bool FieldCtx::is_square(FieldElem x) const noexcept
{
    return !x.is_zero() && log_table_[x.code] % 2 == 0;
}

} // namespace hypercount
