#ifndef BOMBIERI_NORMS_HPP
#define BOMBIERI_NORMS_HPP

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bombieri/core.hpp"

namespace bombieri {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Exponents within this distance of 1 are treated as exactly 1.
inline constexpr double kExponentSnap = 1e-12;

/// Returns q with 1/p + 1/q = 1, using 1 <-> inf at the ends.
/// Throws ExponentError for p < 1 or NaN.
double conjugate_exponent(double p);

/// A Hölder pair (p, q) with 1/p + 1/q = 1.
///
/// One exponent indexes all three lines of each bound family: p = inf is the
/// max-coefficient line, p in (1, inf) the Hölder line, p = 1 the
/// sum-coefficient line.
class HolderExponent {
public:
    explicit HolderExponent(double p);

    static HolderExponent infinity() { return HolderExponent(kInfinity); }

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

    bool is_one() const noexcept { return p_ == 1.0; }
    bool is_infinite() const noexcept { return std::isinf(p_); }

    HolderExponent conjugate() const { return HolderExponent(q_); }

    friend bool operator==(const HolderExponent&, const HolderExponent&) = default;

private:
    double p_;
    double q_;
};

/// Finite scalars alpha_1..alpha_n (or c_1..c_n).
class CoefficientSeq {
public:
    CoefficientSeq() = default;
    explicit CoefficientSeq(std::vector<Scalar> values);

    static CoefficientSeq real(std::initializer_list<double> values);
    static CoefficientSeq ones(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const Scalar> values() const noexcept { return values_; }
    Scalar operator[](std::size_t i) const noexcept { return values_[i]; }

    CoefficientSeq conjugated() const;

    friend bool operator==(const CoefficientSeq&, const CoefficientSeq&) = default;

private:
    std::vector<Scalar> values_;
};

/// (sum |v_i|^p)^(1/p) over nonnegative magnitudes; max for p = inf; 0 when
/// empty. Factors out the largest magnitude before powering.
double magnitude_pnorm(std::span<const double> magnitudes, HolderExponent p);

double seq_pnorm(std::span<const Scalar> c, HolderExponent p);
double seq_pnorm(const CoefficientSeq& c, HolderExponent p);

/// Entrywise q-norm of |g_ij| over all n^2 entries.
double gram_entry_qnorm(const GramMatrix& g, HolderExponent q);

/// max_i sum_j |g_ij|.
double max_row_abs_sum(const GramMatrix& g);

} // namespace bombieri

#endif
