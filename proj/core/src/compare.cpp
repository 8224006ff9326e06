#include "bombieri/compare.hpp"

#include <cmath>
#include <random>
#include <string>

#include "bombieri/bounds.hpp"

namespace bombieri {

namespace {

void require_comparison_domain(double b, double p) {
    if (!(b >= 0.0 && b <= 1.0)) {
        throw DomainError("b must lie in [0, 1], got " + std::to_string(b));
    }
    if (!(p > 1.0 && p <= 2.0)) {
        throw DomainError("p must lie in (1, 2], got " + std::to_string(p));
    }
}

} // namespace

double m1(const GramMatrix& g) { return max_row_abs_sum(g); }

double m2(const GramMatrix& g, double p) {
    const HolderExponent exponent(p);
    require_power_mean_range(exponent);
    if (g.size() == 0) {
        return 0.0;
    }
    const double count = std::pow(static_cast<double>(g.size()), 2.0 / p - 1.0);
    return count * gram_entry_qnorm(g, exponent.conjugate());
}

VectorFamily two_point_family(double a, double b) { return VectorFamily::real_scalars({a, b}); }

double f_comparison(double b, double p) {
    require_comparison_domain(b, p);
    const double q = p / (p - 1.0);
    const double bq = b == 0.0 ? 0.0 : std::pow(b, q);
    return std::pow(2.0, 2.0 / p - 1.0) * std::pow(1.0 + bq, 2.0 / q) - 1.0 - b;
}

double f_from_gram(double b, double p) {
    require_comparison_domain(b, p);
    const GramMatrix g = gram(two_point_family(1.0, b));
    return m2(g, p) - m1(g);
}

SignScanReport scan_f(const ScanOptions& options) {
    if (options.nb < 2 || options.np < 2) {
        throw DomainError("scan grid needs at least 2 points per axis");
    }
    if (!(options.eps > 0.0 && options.eps <= 1.0)) {
        throw DomainError("eps must lie in (0, 1]");
    }
    SignScanReport r;
    r.grid_b.resize(options.nb);
    r.grid_p.resize(options.np);
    for (std::size_t i = 0; i < options.nb; ++i) {
        r.grid_b[i] = static_cast<double>(i) / static_cast<double>(options.nb - 1);
    }
    const double p_lo = 1.0 + options.eps;
    for (std::size_t k = 0; k < options.np; ++k) {
        r.grid_p[k] = p_lo + (2.0 - p_lo) * static_cast<double>(k) /
                                 static_cast<double>(options.np - 1);
    }
    r.grid_p.back() = 2.0;

    r.values.resize(options.nb * options.np);
    bool first = true;
    for (std::size_t i = 0; i < options.nb; ++i) {
        for (std::size_t k = 0; k < options.np; ++k) {
            const double v = f_comparison(r.grid_b[i], r.grid_p[k]);
            r.values[i * options.np + k] = v;
            if (std::abs(v) <= options.zero_tol) {
                ++r.n_zero;
            } else if (v > 0.0) {
                ++r.n_positive;
            } else {
                ++r.n_negative;
            }
            const ScanCell cell{r.grid_b[i], r.grid_p[k], v};
            if (first || v < r.min_cell.value) {
                r.min_cell = cell;
            }
            if (first || v > r.max_cell.value) {
                r.max_cell = cell;
            }
            first = false;
        }
    }
    return r;
}

DominanceOutcome dominance_search(std::uint64_t seed, std::size_t max_trials, double p) {
    require_power_mean_range(HolderExponent(p));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::optional<double> above, below;
    DominanceOutcome out;
    for (out.trials = 0; out.trials < max_trials;) {
        const double b = unit(rng);
        ++out.trials;
        const double gap = f_from_gram(b, p);
        if (!above && gap > kDominanceTolerance) {
            above = b;
        } else if (!below && gap < -kDominanceTolerance) {
            below = b;
        }
        if (above && below) {
            break;
        }
    }
    if (!(above && below)) {
        return out;
    }
    const GramMatrix ga = gram(two_point_family(1.0, *above));
    const GramMatrix gb = gram(two_point_family(1.0, *below));
    out.pair = DominancePair{p, *above, *below, m1(ga), m2(ga, p), m1(gb), m2(gb, p)};
    return out;
}

bool is_valid(const DominancePair& pair) {
    const GramMatrix ga = gram(pair.family_a());
    const GramMatrix gb = gram(pair.family_b());
    const double gap_a = m2(ga, pair.p) - m1(ga);
    const double gap_b = m2(gb, pair.p) - m1(gb);
    return (gap_a > kDominanceTolerance && gap_b < -kDominanceTolerance) ||
           (gap_a < -kDominanceTolerance && gap_b > kDominanceTolerance);
}

} // namespace bombieri
