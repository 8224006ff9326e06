#include "bombieri/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bombieri {

namespace {

void require_matching(const CoefficientSeq& c, const VectorFamily& family) {
    if (c.size() != family.size()) {
        throw ShapeError("coefficient count " + std::to_string(c.size()) +
                         " does not match family size " + std::to_string(family.size()));
    }
}

void require_dim(const Vector& x, const VectorFamily& family) {
    if (x.dim() != family.dim()) {
        throw DimensionError("x has dimension " + std::to_string(x.dim()) +
                             ", family has dimension " + std::to_string(family.dim()));
    }
}

std::vector<double> member_norms(const VectorFamily& family) {
    std::vector<double> out;
    out.reserve(family.size());
    for (const auto& z : family) {
        out.push_back(norm(z));
    }
    return out;
}

double squared_norm(const Vector& x) {
    const double n = norm(x);
    return n * n;
}

// n^(2/p - 1); the caller handles n = 0.
double count_factor(std::size_t n, HolderExponent p) {
    return std::pow(static_cast<double>(n), 2.0 / p.p() - 1.0);
}

} // namespace

std::string_view to_string(BoundId id) noexcept {
    switch (id) {
    case BoundId::span_gram: return "span_gram";
    case BoundId::span_norms: return "span_norms";
    case BoundId::combo_gram: return "combo_gram";
    case BoundId::combo_norms: return "combo_norms";
    case BoundId::refinement_chain: return "cor22_chain";
    case BoundId::bessel_holder: return "thm27";
    case BoundId::frobenius: return "cor28";
    case BoundId::power_mean: return "eq211";
    case BoundId::bombieri: return "bombieri";
    case BoundId::orthonormal: return "orthonormal_27a";
    case BoundId::power_mean_gap: return "power_mean";
    }
    return "unknown";
}

std::string_view to_string(Flavor flavor) noexcept {
    return flavor == Flavor::gram ? "gram" : "norms";
}

void require_power_mean_range(HolderExponent p) {
    if (!(p.p() > 1.0 && p.p() <= 2.0)) {
        throw ExponentRangeError("exponent must satisfy 1 < p <= 2, got " + format_real(p.p()));
    }
}

double lhs_span_sq(const CoefficientSeq& alphas, const VectorFamily& family) {
    require_matching(alphas, family);
    return squared_norm(linear_combination(alphas.values(), family));
}

double lhs_combo_sq(const Vector& x, const VectorFamily& family, const CoefficientSeq& c) {
    require_dim(x, family);
    require_matching(c, family);
    Scalar s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        s += c[i] * inner(x, family[i]);
    }
    return abs2(s);
}

double lhs_bessel_sum(const Vector& x, const VectorFamily& family) {
    require_dim(x, family);
    double s = 0.0;
    for (const auto& y : family) {
        s += abs2(inner(x, y));
    }
    return s;
}

std::vector<double> projection_magnitudes(const Vector& x, const VectorFamily& family) {
    require_dim(x, family);
    std::vector<double> out;
    out.reserve(family.size());
    for (const auto& y : family) {
        out.push_back(std::abs(inner(x, y)));
    }
    return out;
}

BoundResult span_bound(const CoefficientSeq& alphas, const VectorFamily& family, HolderExponent p,
                       Flavor flavor) {
    require_matching(alphas, family);
    const double a = seq_pnorm(alphas, p);
    const HolderExponent q = p.conjugate();
    double factor = 0.0;
    if (flavor == Flavor::gram) {
        factor = gram_entry_qnorm(gram(family), q);
    } else {
        const double z = magnitude_pnorm(member_norms(family), q);
        factor = z * z;
    }
    const BoundId id = flavor == Flavor::gram ? BoundId::span_gram : BoundId::span_norms;
    return {id, p, flavor, a * a * factor, lhs_span_sq(alphas, family)};
}

BoundResult combination_bound(const Vector& x, const VectorFamily& family,
                              const CoefficientSeq& c, HolderExponent p, Flavor flavor) {
    require_dim(x, family);
    const BoundResult inner_bound = span_bound(c.conjugated(), family, p, flavor);
    return {flavor == Flavor::gram ? BoundId::combo_gram : BoundId::combo_norms, p, flavor,
            squared_norm(x) * inner_bound.value, lhs_combo_sq(x, family, c)};
}

RefinementChain refinement_chain(const CoefficientSeq& alphas, const VectorFamily& family) {
    require_matching(alphas, family);
    const HolderExponent two(2.0);
    double alpha_sq = 0.0;
    for (Scalar a : alphas.values()) {
        alpha_sq += abs2(a);
    }
    double norms_sq = 0.0;
    for (const auto& z : family) {
        norms_sq += squared_norm(z);
    }
    return {lhs_span_sq(alphas, family), alpha_sq * gram_entry_qnorm(gram(family), two),
            alpha_sq * norms_sq};
}

BoundResult bessel_holder_bound(const Vector& x, const VectorFamily& family, HolderExponent p) {
    const auto v = projection_magnitudes(x, family);
    const double g = gram_entry_qnorm(gram(family), p.conjugate());
    return {BoundId::bessel_holder, p, std::nullopt, norm(x) * magnitude_pnorm(v, p) * std::sqrt(g),
            lhs_bessel_sum(x, family)};
}

BoundResult orthonormal_bound(const Vector& x, const VectorFamily& family, HolderExponent p) {
    require_dim(x, family);
    const double off = gram(family).distance_to_identity();
    if (off > kOrthonormalTolerance) {
        throw NotOrthonormalError("family is not orthonormal: max |G - I| = " + std::to_string(off));
    }
    const auto v = projection_magnitudes(x, family);
    const std::size_t n = family.size();
    double value = 0.0;
    if (n > 0) {
        const double count = std::pow(static_cast<double>(n), 0.5 / p.q());
        value = norm(x) * count * magnitude_pnorm(v, p);
    }
    return {BoundId::orthonormal, p, std::nullopt, value, lhs_bessel_sum(x, family)};
}

BoundResult frobenius_bound(const Vector& x, const VectorFamily& family) {
    require_dim(x, family);
    const double value = squared_norm(x) * gram_entry_qnorm(gram(family), HolderExponent(2.0));
    return {BoundId::frobenius, std::nullopt, std::nullopt, value, lhs_bessel_sum(x, family)};
}

BoundResult power_mean_bound(const Vector& x, const VectorFamily& family, HolderExponent p) {
    require_power_mean_range(p);
    require_dim(x, family);
    double value = 0.0;
    if (!family.empty()) {
        const double base = squared_norm(x) * gram_entry_qnorm(gram(family), p.conjugate());
        value = count_factor(family.size(), p) * base;
    }
    return {BoundId::power_mean, p, std::nullopt, value, lhs_bessel_sum(x, family)};
}

BoundResult bombieri_bound(const Vector& x, const VectorFamily& family) {
    require_dim(x, family);
    return {BoundId::bombieri, std::nullopt, std::nullopt,
            squared_norm(x) * max_row_abs_sum(gram(family)), lhs_bessel_sum(x, family)};
}

PowerMeanGap power_mean_gap(std::span<const double> values, HolderExponent p) {
    require_power_mean_range(p);
    double sum_sq = 0.0;
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DomainError("power mean values must be finite and nonnegative");
        }
        sum_sq += v * v;
    }
    if (values.empty()) {
        return {};
    }
    const double pn = magnitude_pnorm(values, p);
    return {pn * pn, count_factor(values.size(), p) * sum_sq};
}

} // namespace bombieri
