#ifndef BOMBIERI_COMPARE_HPP
#define BOMBIERI_COMPARE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bombieri/core.hpp"
#include "bombieri/norms.hpp"

namespace bombieri {

// Classical Bombieri constant M1 against the power-mean constant M2 on the
// two-vector family (1), (b) in R.

/// max_i sum_j |g_ij|.
double m1(const GramMatrix& g);

/// n^(2/p-1) * ||G||_q, 1 < p <= 2.
double m2(const GramMatrix& g, double p);

/// The family (a), (b) in R^1.
VectorFamily two_point_family(double a, double b);

/// Closed form of M2 - M1 for a = 1:
///   2^(2/p-1) (1 + b^(p/(p-1)))^(2(p-1)/p) - 1 - b,  b in [0,1], p in (1,2].
double f_comparison(double b, double p);

/// M2 - M1 recomputed from the Gram matrix of (1), (b).
double f_from_gram(double b, double p);

struct ScanCell {
    double b = 0.0;
    double p = 0.0;
    double value = 0.0;
};

struct ScanOptions {
    std::size_t nb = 201;
    std::size_t np = 100;
    double eps = 0.01;          ///< p grid starts at 1 + eps
    double zero_tol = 1e-12;    ///< |f| <= zero_tol counts as zero
};

struct SignScanReport {
    std::vector<double> grid_b;
    std::vector<double> grid_p;
    std::vector<double> values; ///< row-major, values[ib * np + ip]
    std::size_t n_positive = 0;
    std::size_t n_negative = 0;
    std::size_t n_zero = 0;
    ScanCell min_cell;
    ScanCell max_cell;

    double at(std::size_t ib, std::size_t ip) const { return values[ib * grid_p.size() + ip]; }
    bool both_signs() const noexcept { return n_positive > 0 && n_negative > 0; }
};

/// Uniform grid b in [0, 1] (nb points) by p in [1 + eps, 2] (np points).
/// Requires nb, np >= 2 and 0 < eps <= 1 (DomainError otherwise).
SignScanReport scan_f(const ScanOptions& options);

struct DominancePair {
    double p = 0.0;
    double b_a = 0.0; ///< M2 > M1 here
    double b_b = 0.0; ///< M2 < M1 here
    double m1_a = 0.0, m2_a = 0.0;
    double m1_b = 0.0, m2_b = 0.0;

    VectorFamily family_a() const { return two_point_family(1.0, b_a); }
    VectorFamily family_b() const { return two_point_family(1.0, b_b); }
};

inline constexpr double kDominanceTolerance = 1e-9;

struct DominanceOutcome {
    std::optional<DominancePair> pair; ///< empty means not found
    std::size_t trials = 0;

    bool found() const noexcept { return pair.has_value(); }
};

/// Draws b uniformly from [0, 1] until one draw puts M2 above M1 and another
/// puts it below, each by more than kDominanceTolerance. Deterministic in seed.
DominanceOutcome dominance_search(std::uint64_t seed, std::size_t max_trials, double p);

/// Recomputes both gaps from the Gram matrices and checks they have strictly
/// opposite signs beyond kDominanceTolerance.
bool is_valid(const DominancePair& pair);

} // namespace bombieri

#endif
