#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "bombieri/core.hpp"
#include "oracle.hpp"

using namespace bombieri;

TEST_CASE("inner product examples") {
    CHECK(inner(Vector::real({1, 0}), Vector::real({0, 1})) == Scalar(0, 0));
    CHECK(inner(Vector({Scalar(1, 1), 0}), Vector::real({1, 0})) == Scalar(1, 1));
    CHECK(inner(Vector::real({2}), Vector::real({3})) == Scalar(6, 0));
}

TEST_CASE("inner product is conjugate-linear in the second slot") {
    const Vector x({Scalar(1, 0)});
    const Vector y({Scalar(0, 1)});
    // (1, i) = 1 * conj(i) = -i
    CHECK(inner(x, y) == Scalar(0, -1));
}

TEST_CASE("inner rejects dimension mismatch") {
    CHECK_THROWS_AS(inner(Vector::real({1, 2}), Vector::real({1})), DimensionError);
}

TEST_CASE("norm examples") {
    CHECK(norm(Vector::real({3, 4})) == 5.0);
    CHECK(norm(Vector::zero(2)) == 0.0);
    CHECK(norm(Vector({Scalar(1, 1)})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("construction rejects non-finite and empty input") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Vector::real({1, nan}), DomainError);
    CHECK_THROWS_AS(Vector({Scalar(0, inf)}), DomainError);
    CHECK_THROWS_AS(Vector(std::vector<Scalar>{}), DimensionError);
}

TEST_CASE("family invariants") {
    CHECK_THROWS_AS(VectorFamily(Field::real, 2, {Vector::real({1, 0}), Vector::real({1})}),
                    DimensionError);
    CHECK_THROWS_AS(VectorFamily(Field::real, 1, {Vector({Scalar(1, 1)})}), DomainError);
    CHECK_NOTHROW(VectorFamily(Field::complex, 1, {Vector({Scalar(1, 1)})}));

    const VectorFamily empty(Field::real, 3, {});
    CHECK(empty.size() == 0);
    CHECK(empty.dim() == 3);
    CHECK(gram(empty).size() == 0);
}

TEST_CASE("gram examples") {
    const GramMatrix id = gram(VectorFamily::standard_basis(2));
    CHECK(id(0, 0) == Scalar(1));
    CHECK(id(0, 1) == Scalar(0));
    CHECK(id(1, 1) == Scalar(1));

    const GramMatrix g = gram(VectorFamily::real_scalars({1, 0.5}));
    CHECK(g(0, 0) == Scalar(1));
    CHECK(g(0, 1) == Scalar(0.5));
    CHECK(g(1, 0) == Scalar(0.5));
    CHECK(g(1, 1) == Scalar(0.25));

    const GramMatrix h =
        gram(VectorFamily(Field::real, 2, {Vector::real({1, 1}), Vector::real({1, -1})}));
    CHECK(h(0, 0) == Scalar(2));
    CHECK(h(0, 1) == Scalar(0));
    CHECK(h(1, 1) == Scalar(2));
}

TEST_CASE("gram matrix constructor validates structure") {
    CHECK_THROWS_AS(GramMatrix(2, {1, 2, 3}), ShapeError);
    CHECK_THROWS_AS(GramMatrix(2, {1, 2, 3, 4}), DomainError);
    CHECK_THROWS_AS(GramMatrix(1, {Scalar(1, 1)}), DomainError);
    CHECK_THROWS_AS(GramMatrix(1, {-1.0}), DomainError);
    CHECK_NOTHROW(GramMatrix(2, {1, Scalar(0, 1), Scalar(0, -1), 1}));
}

TEST_CASE("property: conjugate symmetry is bit-exact") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = 1 + t % 9;
        const Vector x = oracle::random_vector(rng, d, Field::complex);
        const Vector y = oracle::random_vector(rng, d, Field::complex);
        const Scalar a = inner(x, y);
        const Scalar b = inner(y, x);
        REQUIRE(a.real() == b.real());
        REQUIRE(a.imag() == -b.imag());
    }
}

TEST_CASE("property: Cauchy-Schwarz on random pairs") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t d = 1 + t % 12;
        const Field f = t % 2 ? Field::complex : Field::real;
        const Vector x = oracle::random_vector(rng, d, f);
        const Vector y = oracle::random_vector(rng, d, f, 100.0);
        REQUIRE(std::abs(inner(x, y)) <= norm(x) * norm(y) * (1 + 1e-12));
    }
}

TEST_CASE("property: gram is Hermitian PSD and reproduces squared span norms") {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> normal;
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 1 + t % 6;
        const std::size_t n = t % 9;
        const Field f = t % 2 ? Field::complex : Field::real;
        std::vector<Vector> ys;
        for (std::size_t i = 0; i < n; ++i) {
            ys.push_back(oracle::random_vector(rng, d, f));
        }
        const VectorFamily family(f, d, ys);
        const GramMatrix g = gram(family);

        double max_diag = 0;
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(g(i, i).imag() == 0.0);
            REQUIRE(g(i, i).real() >= 0.0);
            max_diag = std::max(max_diag, g(i, i).real());
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE(std::abs(g(j, i) - std::conj(g(i, j))) <= 1e-12);
            }
        }

        std::vector<Scalar> c(n);
        double csq = 0;
        for (auto& z : c) {
            z = {normal(rng), f == Field::complex ? normal(rng) : 0.0};
            csq += abs2(z);
        }
        const double q = quadratic_form(g, c);
        REQUIRE(q >= -1e-10 * csq * max_diag);

        // sum_ij c_i conj(c_j) g_ij equals the squared norm of sum_i c_i y_i
        const double direct = std::pow(norm(linear_combination(c, family)), 2);
        REQUIRE(oracle::close_rel(q, direct, 1e-12, 1e-12));
    }
}

TEST_CASE("property: gram of orthonormal family is the identity") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 1 + t % 8;
        const auto fam = oracle::random_orthonormal(rng, d, 1 + t % d, t % 2 ? Field::complex : Field::real);
        REQUIRE(gram(fam).distance_to_identity() <= 1e-12);
    }
}

TEST_CASE("scaled multiplies every coordinate") {
    const Vector x({Scalar(1, 2), Scalar(-3, 0)});
    const Vector y = x.scaled(Scalar(0, 1));
    CHECK(y[0] == Scalar(-2, 1));
    CHECK(y[1] == Scalar(0, -3));
}

TEST_CASE("format_real produces shortest round-trip text") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(1.25) == "1.25");
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
    const double third = 1.0 / 3.0;
    CHECK(std::stod(format_real(third)) == third);
}
