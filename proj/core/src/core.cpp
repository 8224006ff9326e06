#include "bombieri/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace bombieri {

namespace {

bool finite(Scalar z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(const Vector& x, const Vector& y) {
    if (x.dim() != y.dim()) {
        throw DimensionError("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                             std::to_string(y.dim()));
    }
}

} // namespace

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string_view to_string(Field field) noexcept {
    return field == Field::real ? "real" : "complex";
}

Vector::Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw DimensionError("vector must have dimension >= 1");
    }
    if (!std::all_of(coords_.begin(), coords_.end(), finite)) {
        throw DomainError("vector coordinates must be finite");
    }
}

Vector Vector::real(std::initializer_list<double> coords) {
    return real(std::span<const double>(coords.begin(), coords.size()));
}

Vector Vector::real(std::span<const double> coords) {
    return Vector(std::vector<Scalar>(coords.begin(), coords.end()));
}

Vector Vector::zero(std::size_t dim) { return Vector(std::vector<Scalar>(dim)); }

bool Vector::is_real() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Scalar z) { return z.imag() == 0.0; });
}

Vector Vector::scaled(Scalar t) const {
    std::vector<Scalar> out(coords_.size());
    std::transform(coords_.begin(), coords_.end(), out.begin(), [t](Scalar z) { return t * z; });
    return Vector(std::move(out));
}

VectorFamily::VectorFamily(Field field, std::size_t dim, std::vector<Vector> vectors)
    : field_(field), dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) {
        throw DimensionError("family dimension must be >= 1");
    }
    for (const auto& v : vectors_) {
        if (v.dim() != dim_) {
            throw DimensionError("family member has dimension " + std::to_string(v.dim()) +
                                 ", expected " + std::to_string(dim_));
        }
        if (field_ == Field::real && !v.is_real()) {
            throw DomainError("real family contains a coordinate with nonzero imaginary part");
        }
    }
}

VectorFamily VectorFamily::real_scalars(std::initializer_list<double> values) {
    std::vector<Vector> vs;
    vs.reserve(values.size());
    for (double v : values) {
        vs.push_back(Vector::real({v}));
    }
    return VectorFamily(Field::real, 1, std::move(vs));
}

VectorFamily VectorFamily::standard_basis(std::size_t n) {
    std::vector<Vector> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> c(n);
        c[i] = 1.0;
        vs.emplace_back(std::move(c));
    }
    return VectorFamily(Field::real, std::max<std::size_t>(n, 1), std::move(vs));
}

GramMatrix::GramMatrix(std::size_t n, std::vector<Scalar> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) {
        throw ShapeError("gram matrix needs n*n entries");
    }
    if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
        throw DomainError("gram matrix entries must be finite");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        const Scalar d = (*this)(i, i);
        if (std::abs(d.imag()) > kHermitianTolerance || d.real() < -kHermitianTolerance) {
            throw DomainError("gram diagonal must be real and nonnegative");
        }
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (std::abs((*this)(j, i) - std::conj((*this)(i, j))) > kHermitianTolerance) {
                throw DomainError("gram matrix is not Hermitian");
            }
        }
    }
}

GramMatrix GramMatrix::identity(std::size_t n) {
    std::vector<Scalar> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = 1.0;
    }
    return GramMatrix(n, std::move(e));
}

double GramMatrix::distance_to_identity() const noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const Scalar target = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs((*this)(i, j) - target));
        }
    }
    return worst;
}

Scalar inner(const Vector& x, const Vector& y) {
    require_same_dim(x, y);
    // Expanded by hand so that inner(y, x) is the exact conjugate of inner(x, y).
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        const double yr = y[k].real(), yi = y[k].imag();
        re += xr * yr + xi * yi;
        im += xi * yr - xr * yi;
    }
    return {re, im};
}

double norm(const Vector& x) {
    double s = 0.0;
    for (Scalar z : x.coords()) {
        s += abs2(z);
    }
    return std::sqrt(s);
}

GramMatrix gram(const VectorFamily& family) {
    const std::size_t n = family.size();
    std::vector<Scalar> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = Scalar(inner(family[i], family[i]).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scalar g = inner(family[i], family[j]);
            e[i * n + j] = g;
            e[j * n + i] = std::conj(g);
        }
    }
    return GramMatrix(n, std::move(e));
}

double quadratic_form(const GramMatrix& g, std::span<const Scalar> c) {
    if (c.size() != g.size()) {
        throw ShapeError("coefficient count does not match gram size");
    }
    Scalar s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            s += c[i] * std::conj(c[j]) * g(i, j);
        }
    }
    return s.real();
}

Vector linear_combination(std::span<const Scalar> c, const VectorFamily& family) {
    if (c.size() != family.size()) {
        throw ShapeError("coefficient count " + std::to_string(c.size()) +
                         " does not match family size " + std::to_string(family.size()));
    }
    std::vector<Scalar> acc(family.dim());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto coords = family[i].coords();
        for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k] += c[i] * coords[k];
        }
    }
    return Vector(std::move(acc));
}

} // namespace bombieri
