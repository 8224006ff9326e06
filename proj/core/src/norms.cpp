#include "bombieri/norms.hpp"

#include <algorithm>
#include <cmath>

namespace bombieri {

double conjugate_exponent(double p) {
    if (std::isnan(p) || p < 1.0 - kExponentSnap) {
        throw ExponentError("Hölder exponent must lie in [1, inf], got " + std::to_string(p));
    }
    if (std::isinf(p)) {
        return 1.0;
    }
    if (p - 1.0 <= kExponentSnap) {
        return kInfinity;
    }
    return p / (p - 1.0);
}

HolderExponent::HolderExponent(double p) : p_(p), q_(conjugate_exponent(p)) {
    if (std::abs(p_ - 1.0) <= kExponentSnap) {
        p_ = 1.0;
    }
}

CoefficientSeq::CoefficientSeq(std::vector<Scalar> values) : values_(std::move(values)) {
    for (Scalar z : values_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("coefficients must be finite");
        }
    }
}

CoefficientSeq CoefficientSeq::real(std::initializer_list<double> values) {
    return CoefficientSeq(std::vector<Scalar>(values.begin(), values.end()));
}

CoefficientSeq CoefficientSeq::ones(std::size_t n) {
    return CoefficientSeq(std::vector<Scalar>(n, 1.0));
}

CoefficientSeq CoefficientSeq::conjugated() const {
    std::vector<Scalar> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(),
                   [](Scalar z) { return std::conj(z); });
    return CoefficientSeq(std::move(out));
}

double magnitude_pnorm(std::span<const double> magnitudes, HolderExponent p) {
    if (magnitudes.empty()) {
        return 0.0;
    }
    if (p.is_one()) {
        double s = 0.0;
        for (double m : magnitudes) {
            s += m;
        }
        return s;
    }
    const double top = *std::max_element(magnitudes.begin(), magnitudes.end());
    if (p.is_infinite() || top == 0.0) {
        return top;
    }
    if (p.p() == 2.0) {
        double s = 0.0;
        for (double m : magnitudes) {
            const double r = m / top;
            s += r * r;
        }
        return top * std::sqrt(s);
    }
    double s = 0.0;
    for (double m : magnitudes) {
        s += std::pow(m / top, p.p());
    }
    return top * std::pow(s, 1.0 / p.p());
}

double seq_pnorm(std::span<const Scalar> c, HolderExponent p) {
    std::vector<double> mags(c.size());
    std::transform(c.begin(), c.end(), mags.begin(), [](Scalar z) { return std::abs(z); });
    return magnitude_pnorm(mags, p);
}

double seq_pnorm(const CoefficientSeq& c, HolderExponent p) { return seq_pnorm(c.values(), p); }

double gram_entry_qnorm(const GramMatrix& g, HolderExponent q) {
    return seq_pnorm(g.entries(), q);
}

double max_row_abs_sum(const GramMatrix& g) {
    double best = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            row += std::abs(g(i, j));
        }
        best = std::max(best, row);
    }
    return best;
}

} // namespace bombieri
