#pragma once

#include "hypercount/hypergeom.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypercount {

/// A: y^2 = x^d + a x + b.   B: y^2 = x^d + a x^{d-1} + b.
enum class Family { A, B };

enum class CountMethod { EvenA, OddA, EvenB, OddB, BruteForce };

std::string_view to_string(Family family) noexcept;
std::string_view to_string(CountMethod method) noexcept;

struct CurveParams {
    Family family = Family::A;
    int d = 2;
    FieldElem a;
    FieldElem b;
};

/// Affine point count (no points at infinity) plus the data that produced it.
struct CountResult {
    std::int64_t n_points = 0;
    CountMethod method = CountMethod::BruteForce;
    std::optional<CharValue> hgf_value;
    /// alpha or beta as handed to the series (before any sign change).
    FieldElem argument;
};

/// One character slot of a theorem's series, written as base^power where
/// base is a named character of the given order.
struct TemplateChar {
    std::string base;        // "phi", "eps", "chi", "psi", "xi", "eta", "rho"
    std::uint32_t base_order = 1;
    std::uint32_t power = 0;

    friend bool operator==(const TemplateChar&, const TemplateChar&) = default;
};

struct SeriesTemplate {
    std::vector<TemplateChar> tops;
    std::vector<TemplateChar> bottoms;
};

/// Closed form used for a family at degree d, chosen by the parity of d.
CountMethod theorem_for(Family family, int d);

/// Modulus m with q = 1 (mod m) required by the closed form: d(d-1) for
/// OddB and 2d(d-1) otherwise.
std::uint64_t required_modulus(CountMethod method, int d);

/// Throws InvalidDegree when d has the wrong parity or is too small.
void check_degree(CountMethod method, int d);
/// Throws CongruenceViolated.
void check_congruence(const FieldCtx& field, CountMethod method, int d);

/// Character lists of the series appearing in each theorem.
SeriesTemplate series_template(CountMethod method, int d);
/// T-exponents of a template's characters over a concrete field.
std::vector<MultChar> realize(const FieldCtx& field, const std::vector<TemplateChar>& chars);

/// alpha = (d/a) (b d / (a (d-1)))^{d-1}.
FieldElem alpha_param(const FieldCtx& field, int d, FieldElem a, FieldElem b);
/// beta = b d^d / (a^d (d-1)^{d-1}).
FieldElem beta_param(const FieldCtx& field, int d, FieldElem a, FieldElem b);

/// Closed-form counter for one theorem at one degree. The series
/// coefficients are computed once; each count() is then O(q).
template <class Ring>
class TheoremCounter {
public:
    TheoremCounter(const CharacterSums<Ring>& sums, CountMethod method, int d);

    CountResult count(FieldElem a, FieldElem b) const;

    CountMethod method() const noexcept { return method_; }
    int degree() const noexcept { return d_; }
    const PreparedHgf<Ring>& series() const noexcept { return series_; }

private:
    const CharacterSums<Ring>* sums_;
    CountMethod method_;
    int d_;
    PreparedHgf<Ring> series_;
};

template <class Ring>
CountResult count_thm1(const CharacterSums<Ring>& sums, int d, FieldElem a, FieldElem b);
template <class Ring>
CountResult count_thm2(const CharacterSums<Ring>& sums, int d, FieldElem a, FieldElem b);
template <class Ring>
CountResult count_thm3(const CharacterSums<Ring>& sums, int d, FieldElem a, FieldElem b);
template <class Ring>
CountResult count_thm4(const CharacterSums<Ring>& sums, int d, FieldElem a, FieldElem b);
/// Dispatches on family and parity of d.
template <class Ring>
CountResult count_theorem(const CharacterSums<Ring>& sums, const CurveParams& curve);

enum class TraceFormula {
    /// y^2 = x^3 + a x + b, q = 1 (mod 12).
    ShortWeierstrass,
    /// y^2 = x^3 + a x^2 + b, q = 1 (mod 6).
    QuadraticTerm,
};

/// Trace of Frobenius q - N of the d = 3 curves from a single 2F1 value.
template <class Ring>
class FrobeniusTrace {
public:
    FrobeniusTrace(const CharacterSums<Ring>& sums, TraceFormula formula);

    std::int64_t trace(FieldElem a, FieldElem b) const;
    TraceFormula formula() const noexcept { return formula_; }

private:
    const CharacterSums<Ring>* sums_;
    TraceFormula formula_;
    PreparedHgf<Ring> series_;
};

/// -q T^{(q-1)/4}(a^3/27) 2F1(T^{(q-1)/12}, T^{5(q-1)/12}; T^{(q-1)/2} | -27b^2/(4a^3)).
template <class Ring>
std::int64_t trace_frobenius_a(const CharacterSums<Ring>& sums, FieldElem a, FieldElem b);
/// -q T^{(q-1)/2}(-3a) 2F1(T^{(q-1)/6}, T^{5(q-1)/6}; eps | -27b/(4a^3)).
template <class Ring>
std::int64_t trace_frobenius_b(const CharacterSums<Ring>& sums, FieldElem a, FieldElem b);

extern template class TheoremCounter<FloatRing>;
extern template class TheoremCounter<ExactRing>;
extern template class FrobeniusTrace<FloatRing>;
extern template class FrobeniusTrace<ExactRing>;

} // namespace hypercount
