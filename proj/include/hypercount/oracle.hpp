#pragma once

#include "hypercount/curvecount.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypercount {

/// Right-hand side f(x) of the curve y^2 = f(x).
FieldElem curve_rhs(const FieldCtx& field, const CurveParams& curve, FieldElem x);

/// Affine point count: each x contributes 1 + phi(f(x)), with squareness
/// read off the parity of the discrete log.
std::int64_t brute_count(const FieldCtx& field, const CurveParams& curve);

/// The same count by testing all q^2 pairs (x, y).
std::int64_t brute_count_pairs(const FieldCtx& field, const CurveParams& curve);

/// Outcome of checking one identity over a range of cases.
struct IdentityCheck {
    IdentityCheck() = default;
    explicit IdentityCheck(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t skipped = 0;
    std::uint64_t mismatches = 0;
    /// Worst relative residual (float) or 0/1 (exact).
    double max_residual = 0.0;
    /// Descriptions of the first few mismatching cases.
    std::vector<std::string> failures;

    bool passed() const noexcept { return mismatches == 0; }
    void record(bool ok, double residual, const std::string& where);
    void merge(const IdentityCheck& other);
};

struct LemmaReport {
    std::vector<IdentityCheck> checks;
    bool passed() const noexcept;
};

struct DavenportHasseReport {
    IdentityCheck relation{"davenport_hasse"};
    IdentityCheck product_formula{"davenport_hasse_product"};
    bool passed() const noexcept { return relation.passed() && product_formula.passed(); }
};

/// Checks G_0 = -1, G_k G_{-k} = q T^k(-1), both Gauss/Jacobi relations
/// G_m G_{-n} = q (T^m choose T^n) G_{m-n} T^n(-1) = J(T^m, T^{-n}) G_{m-n},
/// both orthogonality relations and the Gauss-sum expansion of theta,
/// exhaustively over the field. Cost is O(q^3), dominated by the Jacobi sums.
template <class Ring>
LemmaReport verify_lemmas(const CharacterSums<Ring>& sums);

/// For m | q-1 checks prod_{chi^m=1} G(chi psi) = -G(psi^m) psi(m^{-m})
/// prod_{chi^m=1} G(chi) for psi = T^psi_index, and (for m >= 2) the
/// closed product prod_j G_{l + t j (q-1)/m} for every l and t = +-1.
/// Throws CongruenceViolated when m does not divide q-1.
template <class Ring>
DavenportHasseReport verify_davenport_hasse(const CharacterSums<Ring>& sums, std::uint64_t m,
                                            std::uint64_t psi_index);

/// The product formula alone for one d | q-1, all l and t.
template <class Ring>
IdentityCheck verify_product_formula(const CharacterSums<Ring>& sums, std::uint64_t d);

/// Every divisor m of q-1 and every psi.
template <class Ring>
DavenportHasseReport verify_davenport_hasse_all(const CharacterSums<Ring>& sums);

/// sum_{z in F_q} theta(z v), which is q when v = 0 and 0 otherwise.
template <class Ring>
typename Ring::Value theta_sum(const CharacterSums<Ring>& sums, FieldElem v);

/// The split q N = q^2 + A + B + C + D of the additive-character count,
/// with A, B, C, D summed over z, (y,z), (x,z), (x,y,z) in (F_q^x)^k, and
/// D_half the phi-part of D from its closed Gauss-sum form.
template <class Ring>
struct DecompositionReport {
    typename Ring::Value a_term{};
    typename Ring::Value b_term{};
    typename Ring::Value c_term{};
    typename Ring::Value d_term{};
    typename Ring::Value d_half{};
    std::int64_t n_reconstructed = 0;
};

/// D_half = phi(-b) G_{(q-1)/2}/(q-1) sum_m G_{(q-1)/2-(d-1)m} G_{-m} G_{dm} T^m(b^{d-1}/a^d)   (family A)
///        = phi(-b) G_{(q-1)/2}/(q-1) sum_m G_{(q-1)/2-m} G_{-(d-1)m} G_{dm} T^m(b/a^d)         (family B)
template <class Ring>
typename Ring::Value d_half_closed_form(const CharacterSums<Ring>& sums, const CurveParams& curve);

/// Decomposes many curves of one family and degree over one field. The
/// x-sums depend only on a and are reused while a stays the same, so
/// iterate b innermost. Not thread-safe.
template <class Ring>
class ThetaDecomposer {
public:
    ThetaDecomposer(const CharacterSums<Ring>& sums, Family family, int d);

    DecompositionReport<Ring> decompose(FieldElem a, FieldElem b);

private:
    void prepare_x_sums(FieldElem a);

    const CharacterSums<Ring>* sums_;
    Family family_;
    int d_;
    std::vector<typename Ring::Value> y_sums_; // indexed by log z
    std::vector<typename Ring::Value> x_sums_; // indexed by log z
    std::optional<FieldElem> cached_a_;
};

template <class Ring>
DecompositionReport<Ring> decompose_theta_sum(const CharacterSums<Ring>& sums, const CurveParams& curve);

} // namespace hypercount
