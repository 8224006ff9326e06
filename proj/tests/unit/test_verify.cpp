#include <doctest.h>

#include <random>

#include "bombieri/verify.hpp"
#include "oracle.hpp"

using namespace bombieri;

TEST_CASE("random_family shapes") {
    const auto empty = random_family({.dim = 1, .n = 0, .field = Field::real, .scale = 1, .seed = 7});
    CHECK(empty.x.dim() == 1);
    CHECK(empty.family.size() == 0);
    CHECK(empty.c.size() == 0);

    const auto inst = random_family({.dim = 4, .n = 6, .field = Field::complex, .scale = 1, .seed = 42});
    CHECK(inst.x.dim() == 4);
    CHECK(inst.family.size() == 6);
    CHECK(inst.family.dim() == 4);
    CHECK(inst.c.size() == 6);
    CHECK_FALSE(inst.x.is_real());

    const auto real = random_family({.dim = 3, .n = 2, .field = Field::real, .scale = 2, .seed = 1});
    CHECK(real.x.is_real());
}

TEST_CASE("random_family is deterministic") {
    const FamilySpec spec{.dim = 5, .n = 7, .field = Field::complex, .scale = 0.5, .seed = 1234};
    const auto a = random_family(spec);
    const auto b = random_family(spec);
    CHECK(a.x == b.x);
    CHECK(a.family == b.family);
    CHECK(a.c == b.c);
}

TEST_CASE("family spec ranges") {
    CHECK_THROWS_AS(random_family({.dim = 0}), DomainError);
    CHECK_THROWS_AS(random_family({.dim = 17}), DomainError);
    CHECK_THROWS_AS(random_family({.dim = 2, .n = 33}), DomainError);
    CHECK_THROWS_AS(random_family({.dim = 2, .n = 1, .field = Field::real, .scale = 0}), DomainError);
    CHECK(FamilySpec{.dim = 2, .n = 3, .field = Field::complex, .scale = 1, .seed = 9}.describe() ==
          "dim=2,n=3,field=complex,scale=1,seed=9");
}

TEST_CASE("verify_all on an orthonormal family") {
    const auto basis = VectorFamily::standard_basis(3);
    const Vector x({Scalar(0.3, 1), Scalar(-2, 0), Scalar(0.5, 0.5)});
    const double p_list[] = {1.0, 2.0, kInfinity};
    const auto report = verify_all(x, basis, CoefficientSeq::ones(3), p_list);
    CHECK(report.ok());
    CHECK(report.n_pass == report.cases.size());

    bool saw_bombieri = false, saw_orthonormal = false;
    const double nx2 = norm(x) * norm(x);
    for (const auto& c : report.cases) {
        if (c.id == BoundId::bombieri) {
            saw_bombieri = true;
            CHECK(c.rhs == doctest::Approx(nx2).epsilon(1e-15));
        }
        saw_orthonormal |= c.id == BoundId::orthonormal;
    }
    CHECK(saw_bombieri);
    CHECK(saw_orthonormal);
}

TEST_CASE("verify_all case inventory") {
    const auto inst = random_family({.dim = 3, .n = 4, .field = Field::real, .scale = 1, .seed = 5});
    const double p_list[] = {1.0, 1.5, 2.0, 3.0, kInfinity};
    const auto r = verify_all(inst.x, inst.family, inst.c, p_list);
    // per p: 2 span + 1 dominance, 2 combo + 1 dominance, 1 Bessel-Hölder = 7
    // p in (1, 2] adds power-mean bound and gap (2 exponents x 2)
    // fixed: 2 chain links, Frobenius, Bombieri
    CHECK(r.cases.size() == 5 * 7 + 2 * 2 + 4);
    CHECK(r.ok());
    REQUIRE(r.worst_margin_case);
    for (const auto& c : r.cases) {
        CHECK(c.margin >= r.cases[*r.worst_margin_case].margin);
    }
}

TEST_CASE("verify_all on an empty family") {
    const VectorFamily empty(Field::complex, 2, {});
    const double p_list[] = {1.0, 1.5, 2.0, kInfinity};
    const auto r = verify_all(Vector::real({1, 2}), empty, CoefficientSeq{}, p_list);
    CHECK(r.ok());
    for (const auto& c : r.cases) {
        CHECK(c.lhs == 0.0);
        CHECK(c.rhs == 0.0);
    }
}

TEST_CASE("verify_all errors") {
    const auto basis = VectorFamily::standard_basis(2);
    const double p_list[] = {2.0};
    CHECK_THROWS_AS(verify_all(Vector::real({1, 0}), basis, CoefficientSeq::ones(3), p_list), ShapeError);
    CHECK_THROWS_AS(verify_all(Vector::real({1}), basis, CoefficientSeq::ones(2), p_list), DimensionError);
    const double bad[] = {0.5};
    CHECK_THROWS_AS(verify_all(Vector::real({1, 0}), basis, CoefficientSeq::ones(2), bad), ExponentError);
}

TEST_CASE("tolerance policy") {
    const Tolerance tol;
    CHECK(tol.admits(1.0, 1.0));
    CHECK(tol.admits(1.0 + 1e-11, 1.0));
    CHECK_FALSE(tol.admits(1.0 + 1e-9, 1.0));
    CHECK(tol.admits(5e-13, 0.0));
    CHECK_FALSE(tol.admits(2e-12, 0.0));
}

TEST_CASE("failing case is reported") {
    VerificationReport r;
    r.add({BoundId::bombieri, std::nullopt, "-", 2.0, 1.0}, Tolerance{});
    r.add({BoundId::frobenius, std::nullopt, "-", 1.0, 3.0}, Tolerance{});
    CHECK(r.n_fail == 1);
    CHECK(r.n_pass == 1);
    CHECK_FALSE(r.cases[0].pass);
    CHECK(r.cases[0].margin == -1.0);
    CHECK(*r.worst_margin_case == 0);
}

TEST_CASE("check_schwarz_chain") {
    CHECK(check_schwarz_chain(VectorFamily::standard_basis(4)));
    CHECK(check_schwarz_chain(VectorFamily::real_scalars({1, 0.5})));
    const auto g = gram(VectorFamily::real_scalars({1, 0.5}));
    CHECK(std::abs(g(0, 1)) == 1.0 * 0.5);
    const auto inst = random_family({.dim = 8, .n = 10, .field = Field::complex, .scale = 1, .seed = 3});
    CHECK(check_schwarz_chain(inst.family));
}

TEST_CASE("scaling x by t multiplies the Bessel-sum cases by t^2") {
    const auto inst = random_family({.dim = 4, .n = 5, .field = Field::complex, .scale = 1, .seed = 77});
    const double p_list[] = {1.5, 2.0};
    const auto a = verify_all(inst.x, inst.family, inst.c, p_list);
    const auto b = verify_all(inst.x.scaled(2.0), inst.family, inst.c, p_list);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        const auto id = a.cases[i].id;
        if (id == BoundId::bombieri || id == BoundId::frobenius || id == BoundId::power_mean) {
            CHECK(b.cases[i].lhs == 4.0 * a.cases[i].lhs);
            CHECK(b.cases[i].rhs == 4.0 * a.cases[i].rhs);
        }
        CHECK(a.cases[i].pass == b.cases[i].pass);
    }
}

TEST_CASE("corpus specs depend only on seed and index") {
    CorpusOptions opt;
    const auto s1 = corpus_spec(opt, 17);
    const auto s2 = corpus_spec(opt, 17);
    CHECK(s1.seed == s2.seed);
    CHECK(s1.dim == s2.dim);
    CHECK(s1.field == Field::complex);
    CHECK(corpus_spec(opt, 18).field == Field::real);
    for (std::size_t i = 0; i < 500; ++i) {
        const auto s = corpus_spec(opt, i);
        REQUIRE(s.dim >= 1);
        REQUIRE(s.dim <= opt.max_dim);
        REQUIRE(s.n <= opt.max_n);
    }
    opt.fields = FieldChoice::real;
    CHECK(corpus_spec(opt, 17).field == Field::real);
}

TEST_CASE("small corpus passes and the visitor sees every trial") {
    CorpusOptions opt;
    opt.trials = 300;
    opt.seed = 5;
    std::size_t visits = 0;
    const auto s = run_corpus(opt, [&](std::size_t, const FamilySpec&, const VerificationReport&) { ++visits; });
    CHECK(visits == 300);
    CHECK(s.ok());
    CHECK(s.n_cases == s.n_pass);
    REQUIRE(s.worst);
}

TEST_CASE("zero trials is a clean run") {
    CorpusOptions opt;
    opt.trials = 0;
    const auto s = run_corpus(opt);
    CHECK(s.ok());
    CHECK(s.n_cases == 0);
}

TEST_CASE("negative tolerances are rejected") {
    CorpusOptions opt;
    opt.tol.abs = -1.0;
    CHECK_THROWS_AS(run_corpus(opt), DomainError);
    opt.tol = {};
    opt.max_dim = 17;
    CHECK_THROWS_AS(run_corpus(opt), DomainError);
}
