#include "hypercount/characters.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/numtheory.hpp"

#include <numeric>
#include <string>

namespace hypercount {

MultChar::MultChar(const FieldCtx& field, std::int64_t index)
    : field_(&field), index_(static_cast<std::uint32_t>(nt::reduce(index, field.group_order())))
{
}

std::uint32_t MultChar::order() const noexcept
{
    const std::uint32_t n = field_->group_order();
    return n / std::gcd(index_, n);
}

MultChar MultChar::operator*(const MultChar& other) const
{
    if (field_ != other.field_)
        throw Error(ErrorCode::MixedFieldContexts, "characters belong to different fields");
    return MultChar(*field_, std::int64_t{index_} + other.index_);
}

MultChar MultChar::inverse() const
{
    return MultChar(*field_, -std::int64_t{index_});
}

MultChar MultChar::pow(std::int64_t n) const
{
    const std::uint64_t order = field_->group_order();
    return MultChar(*field_, static_cast<std::int64_t>(index_ * nt::reduce(n, order) % order));
}

MultChar trivial_char(const FieldCtx& field)
{
    return MultChar(field, 0);
}

MultChar quadratic_char(const FieldCtx& field)
{
    return MultChar(field, field.group_order() / 2);
}

MultChar char_of_order(const FieldCtx& field, std::uint64_t n)
{
    if (n == 0 || field.group_order() % n != 0)
        throw Error(ErrorCode::OrderDoesNotDivide,
                    "order " + std::to_string(n) + " does not divide q-1 = " + std::to_string(field.group_order()));
    return MultChar(field, static_cast<std::int64_t>(field.group_order() / n));
}

template <class Ring>
CharacterSums<Ring>::CharacterSums(FieldPtr field, Ring ring)
    : field_(std::move(field)), ring_(std::move(ring))
{
    q_ = ring_.from_int(field_->q());
    q_inv_ = ring_.inv(q_);
    const std::uint32_t q = field_->q();
    jacobi_logs_.reserve(2 * static_cast<std::size_t>(q));
    const FieldElem one = field_->one();
    for (std::uint32_t code = 1; code < q; ++code) {
        const FieldElem x{code};
        const FieldElem rest = field_->sub(one, x);
        if (rest.is_zero())
            continue;
        jacobi_logs_.push_back(field_->dlog(x));
        jacobi_logs_.push_back(field_->dlog(rest));
    }
}

template <class Ring>
std::uint32_t CharacterSums<Ring>::reduce(std::int64_t k) const noexcept
{
    return static_cast<std::uint32_t>(nt::reduce(k, field_->group_order()));
}

template <class Ring>
void CharacterSums<Ring>::check_same_field(const MultChar& chi) const
{
    if (&chi.field() != field_.get())
        throw Error(ErrorCode::MixedFieldContexts, "character does not belong to this engine's field");
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::eval_power(std::int64_t k, FieldElem x) const
{
    if (x.is_zero())
        return ring_.zero();
    const std::uint64_t n = field_->group_order();
    return ring_.mult_root(std::uint64_t{reduce(k)} * field_->dlog(x) % n);
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::eval(const MultChar& chi, FieldElem x) const
{
    check_same_field(chi);
    return eval_power(chi.index(), x);
}

template <class Ring>
const std::vector<typename Ring::Value>& CharacterSums<Ring>::gauss_table() const
{
    std::call_once(gauss_once_, [this] {
        const std::uint64_t n = field_->group_order();
        // theta(g^j) indexed by j, so G_m = sum_j zeta^{mj} theta(g^j).
        std::vector<Value> theta_by_log(n);
        for (std::uint64_t j = 0; j < n; ++j)
            theta_by_log[j] = theta(field_->exp(static_cast<std::int64_t>(j)));
        gauss_.resize(n);
        for (std::uint64_t m = 0; m < n; ++m) {
            auto acc = ring_.accumulator();
            std::uint64_t e = 0;
            for (std::uint64_t j = 0; j < n; ++j) {
                acc.add(ring_.mul(ring_.mult_root(e), theta_by_log[j]));
                e += m;
                if (e >= n)
                    e -= n;
            }
            gauss_[m] = acc.value();
        }
    });
    return gauss_;
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::gauss(std::int64_t m) const
{
    return gauss_table()[reduce(m)];
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::gauss_sum(const MultChar& chi) const
{
    check_same_field(chi);
    return gauss(chi.index());
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::gauss_sum_direct(const MultChar& chi) const
{
    check_same_field(chi);
    auto acc = ring_.accumulator();
    for (std::uint32_t code = 0; code < field_->q(); ++code) {
        const FieldElem x{code};
        acc.add(ring_.mul(eval(chi, x), theta(x)));
    }
    return acc.value();
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::jacobi_power(std::int64_t i, std::int64_t j) const
{
    const std::uint64_t n = field_->group_order();
    const std::uint64_t a = reduce(i);
    const std::uint64_t b = reduce(j);
    auto acc = ring_.accumulator();
    for (std::size_t t = 0; t < jacobi_logs_.size(); t += 2)
        acc.add(ring_.mult_root((a * jacobi_logs_[t] + b * jacobi_logs_[t + 1]) % n));
    return acc.value();
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::jacobi_sum(const MultChar& a, const MultChar& b) const
{
    check_same_field(a);
    check_same_field(b);
    return jacobi_power(a.index(), b.index());
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::binom_power(std::int64_t i, std::int64_t j) const
{
    // B(-1) = T^j(-1) = (-1)^j since T(-1) = -1.
    Value v = ring_.mul(jacobi_power(i, -j), q_inv_);
    return reduce(j) % 2 == 0 ? v : ring_.neg(v);
}

template <class Ring>
typename Ring::Value CharacterSums<Ring>::binom(const MultChar& a, const MultChar& b) const
{
    check_same_field(a);
    check_same_field(b);
    return binom_power(a.index(), b.index());
}

template class CharacterSums<FloatRing>;
template class CharacterSums<ExactRing>;

} // namespace hypercount
