#ifndef BOMBIERI_CORE_HPP
#define BOMBIERI_CORE_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bombieri/error.hpp"

namespace bombieri {

using Scalar = std::complex<double>;

enum class Field { real, complex };

std::string_view to_string(Field field) noexcept;

/// Shortest decimal that round-trips; "inf", "-inf" and "nan" otherwise.
std::string format_real(double v);

/// |z|^2 as re^2 + im^2.
inline double abs2(Scalar z) noexcept { return z.real() * z.real() + z.imag() * z.imag(); }

/// A point of K^d. Always has d >= 1 finite coordinates.
class Vector {
public:
    explicit Vector(std::vector<Scalar> coords);

    static Vector real(std::initializer_list<double> coords);
    static Vector real(std::span<const double> coords);
    static Vector zero(std::size_t dim);

    std::size_t dim() const noexcept { return coords_.size(); }
    std::span<const Scalar> coords() const noexcept { return coords_; }
    Scalar operator[](std::size_t k) const noexcept { return coords_[k]; }

    bool is_real() const noexcept;

    /// t * x, coordinate-wise.
    Vector scaled(Scalar t) const;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Scalar> coords_;
};

/// y_1, ..., y_n in K^d. May be empty, in which case dim is still fixed.
class VectorFamily {
public:
    VectorFamily(Field field, std::size_t dim, std::vector<Vector> vectors);

    /// Real family of 1-dimensional vectors (v_1), ..., (v_n).
    static VectorFamily real_scalars(std::initializer_list<double> values);
    /// Standard basis e_1..e_n of R^n.
    static VectorFamily standard_basis(std::size_t n);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }

    const Vector& operator[](std::size_t i) const noexcept { return vectors_[i]; }
    std::span<const Vector> vectors() const noexcept { return vectors_; }

    auto begin() const noexcept { return vectors_.begin(); }
    auto end() const noexcept { return vectors_.end(); }

    friend bool operator==(const VectorFamily&, const VectorFamily&) = default;

private:
    Field field_;
    std::size_t dim_;
    std::vector<Vector> vectors_;
};

/// Hermitian n x n matrix of pairwise inner products, stored row-major.
class GramMatrix {
public:
    GramMatrix() = default;

    /// Validates the Hermitian structure (1e-12 per entry) and a real,
    /// nonnegative diagonal. Positive semidefiniteness is not checked here.
    GramMatrix(std::size_t n, std::vector<Scalar> entries);

    static GramMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    Scalar operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
    std::span<const Scalar> entries() const noexcept { return entries_; }

    /// Largest |g_ij - delta_ij|.
    double distance_to_identity() const noexcept;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> entries_;
};

inline constexpr double kHermitianTolerance = 1e-12;

/// Standard inner product sum_k x_k conj(y_k), linear in the first slot.
Scalar inner(const Vector& x, const Vector& y);

double norm(const Vector& x);

GramMatrix gram(const VectorFamily& family);

/// sum_{i,j} c_i conj(c_j) g_ij. Real for Hermitian G; equals
/// ||sum_i c_i y_i||^2 when G is the Gram matrix of the y_i.
double quadratic_form(const GramMatrix& g, std::span<const Scalar> c);

/// sum_i c_i y_i.
Vector linear_combination(std::span<const Scalar> c, const VectorFamily& family);

} // namespace bombieri

#endif
