#include "hypercount/oracle.hpp"
#include "hypercount/errors.hpp"
#include "hypercount/numtheory.hpp"

#include <algorithm>
#include <string>

namespace hypercount {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

void validate_curve(const CurveParams& curve)
{
    if (curve.d < 2)
        throw Error(ErrorCode::InvalidDegree, "degree must be at least 2, got " + std::to_string(curve.d));
    if (curve.a.is_zero() || curve.b.is_zero())
        throw Error(ErrorCode::ZeroCoefficient, "curve coefficients a and b must be nonzero");
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k * k <= n; ++k) {
        if (n % k == 0) {
            out.push_back(k);
            if (k * k != n)
                out.push_back(n / k);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

FieldElem curve_rhs(const FieldCtx& field, const CurveParams& curve, FieldElem x)
{
    const FieldElem lower = curve.family == Family::A ? x : field.pow(x, curve.d - 1);
    return field.add(field.add(field.pow(x, curve.d), field.mul(curve.a, lower)), curve.b);
}

std::int64_t brute_count(const FieldCtx& field, const CurveParams& curve)
{
    validate_curve(curve);
    std::int64_t total = 0;
    for (std::uint32_t code = 0; code < field.q(); ++code) {
        const FieldElem f = curve_rhs(field, curve, FieldElem{code});
        if (f.is_zero())
            total += 1;
        else if (field.is_square(f))
            total += 2;
    }
    return total;
}

std::int64_t brute_count_pairs(const FieldCtx& field, const CurveParams& curve)
{
    validate_curve(curve);
    std::int64_t total = 0;
    for (std::uint32_t xc = 0; xc < field.q(); ++xc) {
        const FieldElem f = curve_rhs(field, curve, FieldElem{xc});
        for (std::uint32_t yc = 0; yc < field.q(); ++yc) {
            const FieldElem y{yc};
            if (field.mul(y, y) == f)
                ++total;
        }
    }
    return total;
}

void IdentityCheck::record(bool ok, double residual, const std::string& where)
{
    ++cases;
    max_residual = std::max(max_residual, residual);
    if (!ok) {
        ++mismatches;
        if (failures.size() < kMaxRecordedFailures)
            failures.push_back(where);
    }
}

void IdentityCheck::merge(const IdentityCheck& other)
{
    cases += other.cases;
    skipped += other.skipped;
    mismatches += other.mismatches;
    max_residual = std::max(max_residual, other.max_residual);
    for (const auto& f : other.failures) {
        if (failures.size() >= kMaxRecordedFailures)
            break;
        failures.push_back(f);
    }
}

bool LemmaReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

template <class Ring>
LemmaReport verify_lemmas(const CharacterSums<Ring>& sums)
{
    const FieldCtx& field = sums.field();
    const Ring& ring = sums.ring();
    const std::int64_t n = field.group_order();
    const auto q = sums.q_value();
    const FieldElem minus_one = field.neg(field.one());
    auto check = [&](IdentityCheck& c, const auto& lhs, const auto& rhs, const std::string& where) {
        c.record(ring.equal(lhs, rhs), ring.residual(lhs, rhs), where);
    };

    LemmaReport report;

    IdentityCheck trivial{"gauss_sum_trivial"};
    check(trivial, sums.gauss(0), ring.from_int(-1), "G_0");
    report.checks.push_back(trivial);

    IdentityCheck inverse{"gauss_sum_inverse"};
    inverse.skipped = 1; // k = 0 excluded by T^k != eps
    for (std::int64_t k = 1; k < n; ++k)
        check(inverse, ring.mul(sums.gauss(k), sums.gauss(-k)), ring.mul(q, sums.eval_power(k, minus_one)),
              "k=" + std::to_string(k));
    report.checks.push_back(inverse);

    IdentityCheck binom_rel{"gauss_jacobi_binom"};
    IdentityCheck jacobi_rel{"gauss_jacobi"};
    for (std::int64_t m = 0; m < n; ++m) {
        for (std::int64_t k = 0; k < n; ++k) {
            if (m == k) {
                ++binom_rel.skipped;
                ++jacobi_rel.skipped;
                continue;
            }
            const auto lhs = ring.mul(sums.gauss(m), sums.gauss(-k));
            const auto g_diff = sums.gauss(m - k);
            const auto via_binom =
                ring.mul(ring.mul(ring.mul(q, sums.binom_power(m, k)), g_diff), sums.eval_power(k, minus_one));
            const auto via_jacobi = ring.mul(sums.jacobi_power(m, -k), g_diff);
            const std::string where = "m=" + std::to_string(m) + ",n=" + std::to_string(k);
            check(binom_rel, lhs, via_binom, where);
            check(jacobi_rel, lhs, via_jacobi, where);
        }
    }
    report.checks.push_back(binom_rel);
    report.checks.push_back(jacobi_rel);

    IdentityCheck orth_chars{"orthogonality_over_elements"};
    for (std::int64_t k = 0; k < n; ++k) {
        auto acc = ring.accumulator();
        for (std::uint32_t code = 0; code < field.q(); ++code)
            acc.add(sums.eval_power(k, FieldElem{code}));
        check(orth_chars, acc.value(), ring.from_int(k == 0 ? n : 0), "n=" + std::to_string(k));
    }
    report.checks.push_back(orth_chars);

    IdentityCheck orth_elems{"orthogonality_over_characters"};
    for (std::uint32_t code = 0; code < field.q(); ++code) {
        auto acc = ring.accumulator();
        for (std::int64_t k = 0; k < n; ++k)
            acc.add(sums.eval_power(k, FieldElem{code}));
        check(orth_elems, acc.value(), ring.from_int(code == 1 ? n : 0), "x=" + std::to_string(code));
    }
    report.checks.push_back(orth_elems);

    IdentityCheck expansion{"theta_gauss_expansion"};
    expansion.skipped = 1; // alpha = 0
    const auto inv_n = ring.inv(ring.from_int(n));
    for (std::uint32_t code = 1; code < field.q(); ++code) {
        const FieldElem alpha{code};
        auto acc = ring.accumulator();
        for (std::int64_t m = 0; m < n; ++m)
            acc.add(ring.mul(sums.gauss(-m), sums.eval_power(m, alpha)));
        check(expansion, sums.theta(alpha), ring.mul(acc.value(), inv_n), "alpha=" + std::to_string(code));
    }
    report.checks.push_back(expansion);

    return report;
}

template <class Ring>
IdentityCheck verify_product_formula(const CharacterSums<Ring>& sums, std::uint64_t d)
{
    const FieldCtx& field = sums.field();
    const Ring& ring = sums.ring();
    const std::int64_t n = field.group_order();
    if (d == 0 || n % static_cast<std::int64_t>(d) != 0)
        throw Error(ErrorCode::CongruenceViolated,
                    "congruence violated: q=" + std::to_string(field.q()) + " is not 1 mod " + std::to_string(d));

    IdentityCheck c{"davenport_hasse_product"};
    if (d < 2) {
        c.skipped = 1;
        return c;
    }
    const auto dd = static_cast<std::int64_t>(d);
    const std::int64_t step = n / dd;
    const auto q = sums.q_value();
    const FieldElem minus_one = field.neg(field.one());
    const FieldElem d_to_d = field.pow(field.from_int(dd), dd);

    // Sign exponent and power of q in the closed product, by parity of d.
    std::int64_t sign_exp = 0;
    typename Ring::Value scale{};
    if (dd % 2 == 1) {
        sign_exp = (dd * dd - 1) / 8 * step;
        scale = ring.pow(q, static_cast<std::uint64_t>((dd - 1) / 2));
    } else {
        sign_exp = (dd - 2) * n / 8;
        scale = ring.mul(ring.pow(q, static_cast<std::uint64_t>((dd - 2) / 2)), sums.gauss(n / 2));
    }
    scale = ring.mul(scale, sums.eval_power(sign_exp, minus_one));

    for (std::int64_t l = 0; l < n; ++l) {
        const auto rhs = ring.mul(ring.mul(scale, sums.eval_power(-l, d_to_d)), sums.gauss(l * dd));
        for (std::int64_t t : {1, -1}) {
            auto lhs = ring.one();
            for (std::int64_t j = 0; j < dd; ++j)
                lhs = ring.mul(lhs, sums.gauss(l + t * j * step));
            c.record(ring.equal(lhs, rhs), ring.residual(lhs, rhs),
                     "d=" + std::to_string(d) + ",l=" + std::to_string(l) + ",t=" + std::to_string(t));
        }
    }
    return c;
}

template <class Ring>
DavenportHasseReport verify_davenport_hasse(const CharacterSums<Ring>& sums, std::uint64_t m, std::uint64_t psi_index)
{
    const FieldCtx& field = sums.field();
    const Ring& ring = sums.ring();
    const std::int64_t n = field.group_order();
    if (m == 0 || n % static_cast<std::int64_t>(m) != 0)
        throw Error(ErrorCode::CongruenceViolated,
                    "congruence violated: q=" + std::to_string(field.q()) + " is not 1 mod " + std::to_string(m));

    DavenportHasseReport report;
    const auto mm = static_cast<std::int64_t>(m);
    const std::int64_t step = n / mm;
    const auto psi = static_cast<std::int64_t>(psi_index % static_cast<std::uint64_t>(n));

    auto lhs = ring.one();
    auto chars_product = ring.one();
    for (std::int64_t j = 0; j < mm; ++j) {
        lhs = ring.mul(lhs, sums.gauss(j * step + psi));
        chars_product = ring.mul(chars_product, sums.gauss(j * step));
    }
    const FieldElem m_pow = field.pow(field.from_int(mm), -mm);
    auto rhs = ring.mul(ring.mul(sums.gauss(psi * mm), sums.eval_power(psi, m_pow)), chars_product);
    rhs = ring.neg(rhs);
    report.relation.record(ring.equal(lhs, rhs), ring.residual(lhs, rhs),
                           "m=" + std::to_string(m) + ",psi=" + std::to_string(psi));

    report.product_formula = verify_product_formula(sums, m);
    return report;
}

template <class Ring>
DavenportHasseReport verify_davenport_hasse_all(const CharacterSums<Ring>& sums)
{
    const std::uint64_t n = sums.field().group_order();
    DavenportHasseReport total;
    for (auto m : divisors(n)) {
        for (std::uint64_t psi = 0; psi < n; ++psi) {
            auto r = verify_davenport_hasse(sums, m, psi);
            total.relation.merge(r.relation);
            if (psi == 0)
                total.product_formula.merge(r.product_formula);
        }
    }
    return total;
}

template <class Ring>
typename Ring::Value theta_sum(const CharacterSums<Ring>& sums, FieldElem v)
{
    const FieldCtx& field = sums.field();
    auto acc = sums.ring().accumulator();
    for (std::uint32_t code = 0; code < field.q(); ++code)
        acc.add(sums.theta(field.mul(FieldElem{code}, v)));
    return acc.value();
}

template <class Ring>
typename Ring::Value d_half_closed_form(const CharacterSums<Ring>& sums, const CurveParams& curve)
{
    validate_curve(curve);
    const FieldCtx& field = sums.field();
    const Ring& ring = sums.ring();
    const std::int64_t n = field.group_order();
    const std::int64_t half = n / 2;
    const std::int64_t d = curve.d;
    const FieldElem a_d = field.pow(curve.a, d);

    auto acc = ring.accumulator();
    if (curve.family == Family::A) {
        const FieldElem arg = field.div(field.pow(curve.b, d - 1), a_d);
        for (std::int64_t m = 0; m < n; ++m) {
            const auto g = ring.mul(ring.mul(sums.gauss(half - (d - 1) * m), sums.gauss(-m)), sums.gauss(d * m));
            acc.add(ring.mul(g, sums.eval_power(m, arg)));
        }
    } else {
        const FieldElem arg = field.div(curve.b, a_d);
        for (std::int64_t m = 0; m < n; ++m) {
            const auto g = ring.mul(ring.mul(sums.gauss(half - m), sums.gauss(-(d - 1) * m)), sums.gauss(d * m));
            acc.add(ring.mul(g, sums.eval_power(m, arg)));
        }
    }
    const auto prefactor = ring.mul(ring.mul(sums.eval_power(half, field.neg(curve.b)), sums.gauss(half)),
                                    ring.inv(ring.from_int(n)));
    return ring.mul(prefactor, acc.value());
}

template <class Ring>
ThetaDecomposer<Ring>::ThetaDecomposer(const CharacterSums<Ring>& sums, Family family, int d)
    : sums_(&sums), family_(family), d_(d)
{
    if (d < 2)
        throw Error(ErrorCode::InvalidDegree, "degree must be at least 2, got " + std::to_string(d));
    const FieldCtx& field = sums.field();
    const Ring& ring = sums.ring();
    const std::uint32_t n = field.group_order();
    y_sums_.resize(n);
    for (std::uint32_t lz = 0; lz < n; ++lz) {
        const FieldElem minus_z = field.neg(field.exp(lz));
        auto acc = ring.accumulator();
        for (std::uint32_t yc = 1; yc < field.q(); ++yc) {
            const FieldElem y{yc};
            acc.add(sums.theta(field.mul(minus_z, field.mul(y, y))));
        }
        y_sums_[lz] = acc.value();
    }
}

template <class Ring>
void ThetaDecomposer<Ring>::prepare_x_sums(FieldElem a)
{
    if (cached_a_ && *cached_a_ == a)
        return;
    const FieldCtx& field = sums_->field();
    const Ring& ring = sums_->ring();
    const std::uint32_t n = field.group_order();
    std::vector<FieldElem> top(field.q()), lower(field.q());
    for (std::uint32_t xc = 1; xc < field.q(); ++xc) {
        const FieldElem x{xc};
        top[xc] = field.pow(x, d_);
        lower[xc] = field.mul(a, family_ == Family::A ? x : field.pow(x, d_ - 1));
    }
    x_sums_.resize(n);
    for (std::uint32_t lz = 0; lz < n; ++lz) {
        const FieldElem z = field.exp(lz);
        auto acc = ring.accumulator();
        for (std::uint32_t xc = 1; xc < field.q(); ++xc)
            acc.add(ring.mul(sums_->theta(field.mul(z, top[xc])), sums_->theta(field.mul(z, lower[xc]))));
        x_sums_[lz] = acc.value();
    }
    cached_a_ = a;
}

template <class Ring>
DecompositionReport<Ring> ThetaDecomposer<Ring>::decompose(FieldElem a, FieldElem b)
{
    const CurveParams curve{family_, d_, a, b};
    validate_curve(curve);
    prepare_x_sums(a);
    const FieldCtx& field = sums_->field();
    const Ring& ring = sums_->ring();
    const std::uint32_t n = field.group_order();

    auto acc_a = ring.accumulator();
    auto acc_b = ring.accumulator();
    auto acc_c = ring.accumulator();
    auto acc_d = ring.accumulator();
    for (std::uint32_t lz = 0; lz < n; ++lz) {
        const auto tb = sums_->theta(field.mul(field.exp(lz), b));
        acc_a.add(tb);
        acc_b.add(ring.mul(tb, y_sums_[lz]));
        const auto tc = ring.mul(tb, x_sums_[lz]);
        acc_c.add(tc);
        acc_d.add(ring.mul(tc, y_sums_[lz]));
    }

    DecompositionReport<Ring> r;
    r.a_term = acc_a.value();
    r.b_term = acc_b.value();
    r.c_term = acc_c.value();
    r.d_term = acc_d.value();
    r.d_half = d_half_closed_form(*sums_, curve);
    const auto q = sums_->q_value();
    auto qn = ring.mul(q, q);
    for (const auto& t : {r.a_term, r.b_term, r.c_term, r.d_term})
        qn = ring.add(qn, t);
    r.n_reconstructed = ring.to_integer(ring.mul(qn, sums_->q_inverse()));
    return r;
}

template <class Ring>
DecompositionReport<Ring> decompose_theta_sum(const CharacterSums<Ring>& sums, const CurveParams& curve)
{
    ThetaDecomposer<Ring> decomposer(sums, curve.family, curve.d);
    return decomposer.decompose(curve.a, curve.b);
}

#define HYPERCOUNT_INSTANTIATE(R)                                                                                \
    template LemmaReport verify_lemmas(const CharacterSums<R>&);                                                 \
    template IdentityCheck verify_product_formula(const CharacterSums<R>&, std::uint64_t);                       \
    template DavenportHasseReport verify_davenport_hasse(const CharacterSums<R>&, std::uint64_t, std::uint64_t); \
    template DavenportHasseReport verify_davenport_hasse_all(const CharacterSums<R>&);                           \
    template R::Value theta_sum(const CharacterSums<R>&, FieldElem);                                             \
    template R::Value d_half_closed_form(const CharacterSums<R>&, const CurveParams&);                           \
    template class ThetaDecomposer<R>;                                                                           \
    template DecompositionReport<R> decompose_theta_sum(const CharacterSums<R>&, const CurveParams&);

HYPERCOUNT_INSTANTIATE(FloatRing)
HYPERCOUNT_INSTANTIATE(ExactRing)

#undef HYPERCOUNT_INSTANTIATE

} // namespace hypercount
