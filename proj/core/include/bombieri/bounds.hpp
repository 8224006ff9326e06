#ifndef BOMBIERI_BOUNDS_HPP
#define BOMBIERI_BOUNDS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "bombieri/core.hpp"
#include "bombieri/norms.hpp"

namespace bombieri {

/// Identifies a bound family. The string forms (see to_string) are the
/// identifiers written to CSV output.
enum class BoundId {
    span_gram,        ///< ||sum a_i z_i||^2 <= Gram-entry bound
    span_norms,       ///< ||sum a_i z_i||^2 <= vector-norm bound
    combo_gram,       ///< |sum c_i (x, y_i)|^2 <= ||x||^2 * Gram-entry bound
    combo_norms,      ///< |sum c_i (x, y_i)|^2 <= ||x||^2 * vector-norm bound
    refinement_chain, ///< Frobenius refinement of Cauchy-Bunyakovsky-Schwarz
    bessel_holder,    ///< sum |(x, y_i)|^2 <= ||x|| * Hölder bracket
    frobenius,        ///< sum |(x, y_i)|^2 <= ||x||^2 * ||G||_F
    power_mean,       ///< sum |(x, y_i)|^2 <= n^(2/p-1) ||x||^2 ||G||_q, 1 < p <= 2
    bombieri,         ///< sum |(x, y_i)|^2 <= ||x||^2 * max row sum of |G|
    orthonormal,      ///< bessel_holder specialised to orthonormal families
    power_mean_gap,   ///< (sum v^p)^(2/p) <= n^(2/p-1) sum v^2
};

std::string_view to_string(BoundId id) noexcept;

enum class Flavor { gram, norms };

std::string_view to_string(Flavor flavor) noexcept;

struct BoundResult {
    BoundId id;
    std::optional<HolderExponent> p;
    std::optional<Flavor> flavor;
    double value = 0.0; ///< right-hand side
    double lhs = 0.0;   ///< the quantity being bounded

    double margin() const noexcept { return value - lhs; }
};

/// ||sum_i alpha_i z_i||^2.
double lhs_span_sq(const CoefficientSeq& alphas, const VectorFamily& family);

/// |sum_i c_i (x, y_i)|^2.
double lhs_combo_sq(const Vector& x, const VectorFamily& family, const CoefficientSeq& c);

/// sum_i |(x, y_i)|^2.
double lhs_bessel_sum(const Vector& x, const VectorFamily& family);

/// |(x, y_i)| for each i.
std::vector<double> projection_magnitudes(const Vector& x, const VectorFamily& family);

/// Upper bound on ||sum alpha_i z_i||^2 selected by p.
///
/// gram:  ||alpha||_p^2 * ||G||_q (entrywise), so p = inf gives
///        max|alpha|^2 * sum|g_ij| and p = 1 gives (sum|alpha|)^2 * max|g_ij|.
/// norms: ||alpha||_p^2 * ||(||z_i||)_i||_q^2, the same lines with each
///        |g_ij| replaced by ||z_i|| ||z_j||.
BoundResult span_bound(const CoefficientSeq& alphas, const VectorFamily& family, HolderExponent p,
                       Flavor flavor);

/// ||x||^2 times span_bound evaluated at alpha = conj(c).
BoundResult combination_bound(const Vector& x, const VectorFamily& family,
                              const CoefficientSeq& c, HolderExponent p, Flavor flavor);

struct RefinementChain {
    double lhs = 0.0;    ///< ||sum alpha_i z_i||^2
    double middle = 0.0; ///< sum|alpha_i|^2 * ||G||_F
    double outer = 0.0;  ///< sum|alpha_i|^2 * sum ||z_i||^2
};

RefinementChain refinement_chain(const CoefficientSeq& alphas, const VectorFamily& family);

/// ||x|| * ||v||_p * ||G||_q^(1/2) with v_i = |(x, y_i)|.
BoundResult bessel_holder_bound(const Vector& x, const VectorFamily& family, HolderExponent p);

/// Tolerance on |G - I| used to accept a family as orthonormal.
inline constexpr double kOrthonormalTolerance = 1e-10;

/// ||x|| * n^(1/(2q)) * ||v||_p for an orthonormal family; throws
/// NotOrthonormalError otherwise.
BoundResult orthonormal_bound(const Vector& x, const VectorFamily& family, HolderExponent p);

/// ||x||^2 * ||G||_F.
BoundResult frobenius_bound(const Vector& x, const VectorFamily& family);

/// n^(2/p-1) * ||x||^2 * ||G||_q for 1 < p <= 2; ExponentRangeError otherwise.
BoundResult power_mean_bound(const Vector& x, const VectorFamily& family, HolderExponent p);

/// ||x||^2 * max_i sum_j |(y_i, y_j)|.
BoundResult bombieri_bound(const Vector& x, const VectorFamily& family);

struct PowerMeanGap {
    double lhs = 0.0; ///< (sum v_i^p)^(2/p)
    double rhs = 0.0; ///< n^(2/p-1) sum v_i^2
};

/// Throws ExponentRangeError unless 1 < p <= 2, DomainError for negative values.
PowerMeanGap power_mean_gap(std::span<const double> values, HolderExponent p);

/// Throws ExponentRangeError unless 1 < p <= 2.
void require_power_mean_range(HolderExponent p);

} // namespace bombieri

#endif
