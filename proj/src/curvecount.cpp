#include "hypercount/curvecount.hpp"
#include "hypercount/errors.hpp"

#include <string>

namespace hypercount {

std::string_view to_string(Family family) noexcept
{
    return family == Family::A ? "A" : "B";
}

std::string_view to_string(CountMethod method) noexcept
{
    switch (method) {
    case CountMethod::EvenA: return "THM_1_1";
    case CountMethod::OddA: return "THM_1_2";
    case CountMethod::EvenB: return "THM_1_3";
    case CountMethod::OddB: return "THM_1_4";
    case CountMethod::BruteForce: return "BRUTE_FORCE";
    }
    return "UNKNOWN";
}

CountMethod theorem_for(Family family, int d)
{
    if (d < 2)
        throw Error(ErrorCode::InvalidDegree, "degree must be at least 2, got " + std::to_string(d));
    const bool even = d % 2 == 0;
    if (family == Family::A)
        return even ? CountMethod::EvenA : CountMethod::OddA;
    return even ? CountMethod::EvenB : CountMethod::OddB;
}

std::uint64_t required_modulus(CountMethod method, int d)
{
    const auto dd = static_cast<std::uint64_t>(d);
    switch (method) {
    case CountMethod::EvenA:
    case CountMethod::OddA:
    case CountMethod::EvenB:
        return 2 * dd * (dd - 1);
    case CountMethod::OddB:
        return dd * (dd - 1);
    case CountMethod::BruteForce:
        break;
    }
    return 1;
}

void check_degree(CountMethod method, int d)
{
    switch (method) {
    case CountMethod::EvenA:
    case CountMethod::EvenB:
        if (d < 2 || d % 2 != 0)
            throw Error(ErrorCode::InvalidDegree,
                        std::string(to_string(method)) + " needs an even degree d >= 2, got " + std::to_string(d));
        break;
    case CountMethod::OddA:
    case CountMethod::OddB:
        if (d < 3 || d % 2 == 0)
            throw Error(ErrorCode::InvalidDegree,
                        std::string(to_string(method)) + " needs an odd degree d >= 3, got " + std::to_string(d));
        break;
    case CountMethod::BruteForce:
        if (d < 2)
            throw Error(ErrorCode::InvalidDegree, "degree must be at least 2, got " + std::to_string(d));
        break;
    }
}

void check_congruence(const FieldCtx& field, CountMethod method, int d)
{
    const std::uint64_t m = required_modulus(method, d);
    if (field.group_order() % m != 0)
        throw Error(ErrorCode::CongruenceViolated,
                    "congruence violated: q=" + std::to_string(field.q()) + " is not 1 mod " + std::to_string(m));
}

SeriesTemplate series_template(CountMethod method, int d)
{
    check_degree(method, d);
    const auto dd = static_cast<std::uint32_t>(d);
    SeriesTemplate t;
    switch (method) {
    case CountMethod::EvenA:
    case CountMethod::EvenB: {
        // (phi, eps, chi^j) over (phi, psi^{2j-1}), j = 1..d-1 without j = d/2.
        const std::uint32_t psi_order = 2 * (dd - 1);
        t.tops.push_back({"phi", 2, 1});
        t.tops.push_back({"eps", 1, 0});
        t.bottoms.push_back({"phi", 2, 1});
        for (std::uint32_t j = 1; j < dd; ++j) {
            if (2 * j == dd)
                continue;
            t.tops.push_back({"chi", dd, j});
            t.bottoms.push_back({"psi", psi_order, 2 * j - 1});
        }
        break;
    }
    case CountMethod::OddA: {
        // xi^{d-2+2k(d-1)}, k = 0..d-2, over psi^{2k}, k = 1..d-2.
        const std::uint32_t xi_order = 2 * dd * (dd - 1);
        const std::uint32_t psi_order = 2 * (dd - 1);
        t.tops.push_back({"xi", xi_order, dd - 2});
        for (std::uint32_t k = 1; k + 2 <= dd; ++k) {
            t.tops.push_back({"xi", xi_order, dd - 2 + 2 * k * (dd - 1)});
            t.bottoms.push_back({"psi", psi_order, 2 * k});
        }
        break;
    }
    case CountMethod::OddB: {
        // (eta, eta^{2j+1}) over rho^j, j = 1..d-1 without j = (d-1)/2;
        // rho^{d-1} is written as eps.
        const std::uint32_t eta_order = 2 * dd;
        const std::uint32_t rho_order = dd - 1;
        t.tops.push_back({"eta", eta_order, 1});
        for (std::uint32_t j = 1; j < dd; ++j) {
            if (2 * j == dd - 1)
                continue;
            t.tops.push_back({"eta", eta_order, 2 * j + 1});
            if (j == dd - 1)
                t.bottoms.push_back({"eps", 1, 0});
            else
                t.bottoms.push_back({"rho", rho_order, j});
        }
        break;
    }
    case CountMethod::BruteForce:
        throw Error(ErrorCode::MalformedSeries, "brute force has no series");
    }
    return t;
}

std::vector<MultChar> realize(const FieldCtx& field, const std::vector<TemplateChar>& chars)
{
    std::vector<MultChar> out;
    out.reserve(chars.size());
    for (const auto& c : chars) {
        const MultChar base = char_of_order(field, c.base_order);
        out.push_back(base.pow(c.power));
    }
    return out;
}

namespace {

void require_nonzero(FieldElem a, FieldElem b)
{
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorCode::ZeroCoefficient, "curve coefficients a and b must be nonzero");
}

void require_invertible_degree(const FieldCtx& field, int d)
{
    if (field.from_int(d).is_zero() || field.from_int(d - 1).is_zero())
        throw Error(ErrorCode::ZeroCoefficient,
                    "d(d-1) vanishes in F_" + std::to_string(field.q()) + " for d=" + std::to_string(d));
}

} // namespace

FieldElem alpha_param(const FieldCtx& field, int d, FieldElem a, FieldElem b)
{
    require_nonzero(a, b);
    require_invertible_degree(field, d);
    const FieldElem fd = field.from_int(d);
    const FieldElem fd1 = field.from_int(d - 1);
    const FieldElem inner = field.div(field.mul(b, fd), field.mul(a, fd1));
    return field.mul(field.div(fd, a), field.pow(inner, d - 1));
}

FieldElem beta_param(const FieldCtx& field, int d, FieldElem a, FieldElem b)
{
    require_nonzero(a, b);
    require_invertible_degree(field, d);
    const FieldElem num = field.mul(b, field.pow(field.from_int(d), d));
    const FieldElem den = field.mul(field.pow(a, d), field.pow(field.from_int(d - 1), d - 1));
    return field.div(num, den);
}

template <class Ring>
TheoremCounter<Ring>::TheoremCounter(const CharacterSums<Ring>& sums, CountMethod method, int d)
    : sums_(&sums),
      method_(method),
      d_(d),
      series_([&] {
          check_degree(method, d);
          check_congruence(sums.field(), method, d);
          const SeriesTemplate t = series_template(method, d);
          return PreparedHgf<Ring>(sums, realize(sums.field(), t.tops), realize(sums.field(), t.bottoms));
      }())
{
}

template <class Ring>
CountResult TheoremCounter<Ring>::count(FieldElem a, FieldElem b) const
{
    require_nonzero(a, b);
    const FieldCtx& field = sums_->field();
    const Ring& ring = sums_->ring();
    const std::int64_t n = field.group_order();
    const int d = d_;
    auto phi = [&](FieldElem x) { return sums_->eval_power(n / 2, x); };
    const auto q = sums_->q_value();
    const FieldElem minus_one = field.neg(field.one());

    CountResult result;
    result.method = method_;
    typename Ring::Value total{};
    typename Ring::Value series_value{};

    switch (method_) {
    case CountMethod::EvenA: {
        const FieldElem alpha = alpha_param(field, d, a, b);
        series_value = series_(alpha);
        const auto sign = phi(field.mul(b, field.from_int(d - 1)));
        total = ring.add(ring.add(q, phi(b)), ring.mul(ring.mul(ring.pow(q, d / 2), sign), series_value));
        result.argument = alpha;
        break;
    }
    case CountMethod::OddA: {
        const FieldElem alpha = alpha_param(field, d, a, b);
        series_value = series_(field.neg(alpha));
        const auto s = phi(field.neg(field.mul(b, field.from_int(d - 1))));
        const auto t4 = sums_->eval_power(n / 4, minus_one);
        const auto twist = sums_->eval_power(n / (2 * (d - 1)), field.neg(field.inv(alpha)));
        const auto st4 = ring.mul(s, t4);
        total = ring.sub(ring.add(q, phi(b)), st4);
        total = ring.add(total, ring.mul(ring.mul(ring.mul(ring.pow(q, (d - 1) / 2), st4), twist), series_value));
        result.argument = alpha;
        break;
    }
    case CountMethod::EvenB: {
        const FieldElem beta = beta_param(field, d, a, b);
        series_value = series_(beta);
        const auto sign = phi(field.from_int(d - 1));
        total = ring.add(ring.add(q, phi(b)), ring.mul(ring.mul(ring.pow(q, d / 2), sign), series_value));
        result.argument = beta;
        break;
    }
    case CountMethod::OddB: {
        const FieldElem beta = beta_param(field, d, a, b);
        series_value = series_(field.neg(beta));
        const auto sign = phi(field.neg(field.mul(a, field.from_int(d))));
        total = ring.add(q, ring.mul(ring.mul(ring.pow(q, (d - 1) / 2), sign), series_value));
        result.argument = beta;
        break;
    }
    case CountMethod::BruteForce:
        throw Error(ErrorCode::MalformedSeries, "brute force has no closed form");
    }

    result.n_points = ring.to_integer(total);
    result.hgf_value = ring.to_char_value(series_value);
    if (result.n_points < 0 || result.n_points > 2 * static_cast<std::int64_t>(field.q()))
        throw Error(ErrorCode::NonIntegerResult,
                    "closed form produced " + std::to_string(result.n_points) + " points, outside [0, 2q]");
    return result;
}

template <class Ring>
CountResult count_thm1(const CharacterSums<Ring>& sums, int d, FieldElem a, FieldElem b)
{
    return TheoremCounter<Ring>(sums, CountMethod::EvenA, d).count(a, b);
}

template <class Ring>
CountResult count_thm2(const CharacterSums<Ring>& sums, int d, FieldElem a, FieldElem b)
{
    return TheoremCounter<Ring>(sums, CountMethod::OddA, d).count(a, b);
}

template <class Ring>
CountResult count_thm3(const CharacterSums<Ring>& sums, int d, FieldElem a, FieldElem b)
{
    return TheoremCounter<Ring>(sums, CountMethod::EvenB, d).count(a, b);
}

template <class Ring>
CountResult count_thm4(const CharacterSums<Ring>& sums, int d, FieldElem a, FieldElem b)
{
    return TheoremCounter<Ring>(sums, CountMethod::OddB, d).count(a, b);
}

template <class Ring>
CountResult count_theorem(const CharacterSums<Ring>& sums, const CurveParams& curve)
{
    return TheoremCounter<Ring>(sums, theorem_for(curve.family, curve.d), curve.d).count(curve.a, curve.b);
}

template <class Ring>
FrobeniusTrace<Ring>::FrobeniusTrace(const CharacterSums<Ring>& sums, TraceFormula formula)
    : sums_(&sums),
      formula_(formula),
      series_([&] {
          const FieldCtx& field = sums.field();
          const std::int64_t n = field.group_order();
          const std::int64_t m = formula == TraceFormula::ShortWeierstrass ? 12 : 6;
          if (n % m != 0)
              throw Error(ErrorCode::CongruenceViolated, "congruence violated: q=" + std::to_string(field.q()) +
                                                             " is not 1 mod " + std::to_string(m));
          if (formula == TraceFormula::ShortWeierstrass)
              return PreparedHgf<Ring>(sums, {MultChar(field, n / 12), MultChar(field, 5 * n / 12)},
                                       {MultChar(field, n / 2)});
          return PreparedHgf<Ring>(sums, {MultChar(field, n / 6), MultChar(field, 5 * n / 6)},
                                   {trivial_char(field)});
      }())
{
}

template <class Ring>
std::int64_t FrobeniusTrace<Ring>::trace(FieldElem a, FieldElem b) const
{
    require_nonzero(a, b);
    const FieldCtx& field = sums_->field();
    const Ring& ring = sums_->ring();
    const std::int64_t n = field.group_order();
    const FieldElem a3 = field.pow(a, 3);
    const FieldElem four_a3 = field.mul(field.from_int(4), a3);

    typename Ring::Value twist{};
    FieldElem argument;
    if (formula_ == TraceFormula::ShortWeierstrass) {
        twist = sums_->eval_power(n / 4, field.div(a3, field.from_int(27)));
        argument = field.neg(field.div(field.mul(field.from_int(27), field.pow(b, 2)), four_a3));
    } else {
        twist = sums_->eval_power(n / 2, field.mul(field.from_int(-3), a));
        argument = field.neg(field.div(field.mul(field.from_int(27), b), four_a3));
    }
    const auto value = ring.neg(ring.mul(ring.mul(sums_->q_value(), twist), series_(argument)));
    return ring.to_integer(value);
}

template <class Ring>
std::int64_t trace_frobenius_a(const CharacterSums<Ring>& sums, FieldElem a, FieldElem b)
{
    return FrobeniusTrace<Ring>(sums, TraceFormula::ShortWeierstrass).trace(a, b);
}

template <class Ring>
std::int64_t trace_frobenius_b(const CharacterSums<Ring>& sums, FieldElem a, FieldElem b)
{
    return FrobeniusTrace<Ring>(sums, TraceFormula::QuadraticTerm).trace(a, b);
}

template class TheoremCounter<FloatRing>;
template class TheoremCounter<ExactRing>;
template class FrobeniusTrace<FloatRing>;
template class FrobeniusTrace<ExactRing>;

#define HYPERCOUNT_INSTANTIATE(R)                                                                \
    template CountResult count_thm1(const CharacterSums<R>&, int, FieldElem, FieldElem);         \
    template CountResult count_thm2(const CharacterSums<R>&, int, FieldElem, FieldElem);         \
    template CountResult count_thm3(const CharacterSums<R>&, int, FieldElem, FieldElem);         \
    template CountResult count_thm4(const CharacterSums<R>&, int, FieldElem, FieldElem);         \
    template CountResult count_theorem(const CharacterSums<R>&, const CurveParams&);             \
    template std::int64_t trace_frobenius_a(const CharacterSums<R>&, FieldElem, FieldElem); \
    template std::int64_t trace_frobenius_b(const CharacterSums<R>&, FieldElem, FieldElem);

HYPERCOUNT_INSTANTIATE(FloatRing)
HYPERCOUNT_INSTANTIATE(ExactRing)

#undef HYPERCOUNT_INSTANTIATE

} // namespace hypercount
