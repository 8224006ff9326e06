#include "bombieri/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace bombieri {

namespace {

std::vector<Scalar> draw(std::mt19937_64& rng, std::size_t count, const FamilySpec& spec) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Scalar> out(count);
    for (auto& z : out) {
        const double re = normal(rng) * spec.scale;
        const double im = spec.field == Field::complex ? normal(rng) * spec.scale : 0.0;
        z = {re, im};
    }
    return out;
}

bool in_power_mean_range(double p) { return p > 1.0 && p <= 2.0; }

} // namespace

void FamilySpec::validate() const {
    if (dim < 1 || dim > kMaxDim) {
        throw DomainError("dim must lie in [1, 16], got " + std::to_string(dim));
    }
    if (n > kMaxCount) {
        throw DomainError("n must lie in [0, 32], got " + std::to_string(n));
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("scale must be positive and finite");
    }
}

std::string FamilySpec::describe() const {
    std::ostringstream os;
    os << "dim=" << dim << ",n=" << n << ",field=" << to_string(field)
       << ",scale=" << format_real(scale) << ",seed=" << seed;
    return os.str();
}

RandomInstance random_family(const FamilySpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    Vector x(draw(rng, spec.dim, spec));
    std::vector<Vector> ys;
    ys.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        ys.emplace_back(draw(rng, spec.dim, spec));
    }
    CoefficientSeq c(draw(rng, spec.n, spec));
    return {std::move(x), VectorFamily(spec.field, spec.dim, std::move(ys)), std::move(c)};
}

void VerificationReport::add(Case c, const Tolerance& tol) {
    c.margin = c.rhs - c.lhs;
    c.pass = tol.admits(c.lhs, c.rhs);
    c.pass ? ++n_pass : ++n_fail;
    if (!worst_margin_case || c.margin < cases[*worst_margin_case].margin) {
        worst_margin_case = cases.size();
    }
    cases.push_back(c);
}

VerificationReport verify_all(const Vector& x, const VectorFamily& family, const CoefficientSeq& c,
                              std::span<const double> p_list, const Tolerance& tol) {
    if (c.size() != family.size()) {
        throw ShapeError("coefficient count does not match family size");
    }
    if (x.dim() != family.dim()) {
        throw DimensionError("x and family dimensions differ");
    }
    std::vector<HolderExponent> exponents;
    exponents.reserve(p_list.size());
    for (double p : p_list) {
        exponents.emplace_back(p);
    }

    VerificationReport report;
    auto add_bound = [&](const BoundResult& r) {
        report.add({r.id, r.p ? std::optional<double>(r.p->p()) : std::nullopt,
                    r.flavor ? to_string(*r.flavor) : std::string_view("-"), r.lhs, r.value},
                   tol);
    };
    // The second inequality of each brace: Gram factors never exceed norm factors.
    auto add_dominance = [&](const BoundResult& gram_side, const BoundResult& norm_side) {
        report.add({norm_side.id, gram_side.p->p(), "gram_vs_norms", gram_side.value, norm_side.value},
                   tol);
    };

    const bool orthonormal = gram(family).distance_to_identity() <= kOrthonormalTolerance;
    const auto magnitudes = projection_magnitudes(x, family);

    for (const auto& p : exponents) {
        const auto sg = span_bound(c, family, p, Flavor::gram);
        const auto sn = span_bound(c, family, p, Flavor::norms);
        add_bound(sg);
        add_bound(sn);
        add_dominance(sg, sn);

        const auto cg = combination_bound(x, family, c, p, Flavor::gram);
        const auto cn = combination_bound(x, family, c, p, Flavor::norms);
        add_bound(cg);
        add_bound(cn);
        add_dominance(cg, cn);

        add_bound(bessel_holder_bound(x, family, p));
        if (orthonormal) {
            add_bound(orthonormal_bound(x, family, p));
        }
        if (in_power_mean_range(p.p())) {
            add_bound(power_mean_bound(x, family, p));
            const auto gap = power_mean_gap(magnitudes, p);
            report.add({BoundId::power_mean_gap, p.p(), "-", gap.lhs, gap.rhs}, tol);
        }
    }

    const auto chain = refinement_chain(c, family);
    report.add({BoundId::refinement_chain, 2.0, "lhs_vs_middle", chain.lhs, chain.middle}, tol);
    report.add({BoundId::refinement_chain, 2.0, "middle_vs_outer", chain.middle, chain.outer}, tol);

    add_bound(frobenius_bound(x, family));
    add_bound(bombieri_bound(x, family));
    return report;
}

bool check_schwarz_chain(const VectorFamily& family) {
    const GramMatrix g = gram(family);
    std::vector<double> norms;
    norms.reserve(family.size());
    for (const auto& z : family) {
        norms.push_back(norm(z));
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (std::abs(g(i, j)) > norms[i] * norms[j] * (1.0 + 1e-12)) {
                return false;
            }
        }
    }
    return true;
}

void CorpusOptions::validate() const {
    if (max_dim < 1 || max_dim > FamilySpec::kMaxDim) {
        throw DomainError("max dim must lie in [1, 16], got " + std::to_string(max_dim));
    }
    if (max_n > FamilySpec::kMaxCount) {
        throw DomainError("max n must lie in [0, 32], got " + std::to_string(max_n));
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("scale must be positive and finite");
    }
    if (!(tol.rel >= 0.0) || !(tol.abs >= 0.0)) {
        throw DomainError("tolerances must be nonnegative");
    }
    for (double p : p_list) {
        (void)conjugate_exponent(p);
    }
}

FamilySpec corpus_spec(const CorpusOptions& options, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> dim(1, options.max_dim);
    std::uniform_int_distribution<std::size_t> count(0, options.max_n);

    FamilySpec spec;
    spec.dim = dim(rng);
    spec.n = count(rng);
    switch (options.fields) {
    case FieldChoice::real: spec.field = Field::real; break;
    case FieldChoice::complex: spec.field = Field::complex; break;
    case FieldChoice::both: spec.field = index % 2 == 0 ? Field::real : Field::complex; break;
    }
    spec.scale = options.scale;
    spec.seed = rng();
    return spec;
}

CorpusSummary run_corpus(const CorpusOptions& options, const CorpusVisitor& visit) {
    options.validate();
    CorpusSummary summary;
    for (std::size_t i = 0; i < options.trials; ++i) {
        const FamilySpec spec = corpus_spec(options, i);
        const RandomInstance inst = random_family(spec);
        const VerificationReport report =
            verify_all(inst.x, inst.family, inst.c, options.p_list, options.tol);

        ++summary.trials;
        summary.n_cases += report.cases.size();
        summary.n_pass += report.n_pass;
        summary.n_fail += report.n_fail;
        for (const auto& c : report.cases) {
            if (!c.pass) {
                summary.failures.push_back({spec, c});
            }
        }
        if (report.worst_margin_case) {
            const Case& w = report.cases[*report.worst_margin_case];
            if (!summary.worst || w.margin < summary.worst->failed.margin) {
                summary.worst = Failure{spec, w};
            }
        }
        if (!check_schwarz_chain(inst.family)) {
            ++summary.schwarz_failures;
        }
        if (visit) {
            visit(i, spec, report);
        }
    }
    return summary;
}

} // namespace bombieri
