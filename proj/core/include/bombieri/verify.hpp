#ifndef BOMBIERI_VERIFY_HPP
#define BOMBIERI_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bombieri/bounds.hpp"
#include "bombieri/core.hpp"
#include "bombieri/norms.hpp"

namespace bombieri {

struct FamilySpec {
    std::size_t dim = 1;  ///< 1..16
    std::size_t n = 0;    ///< 0..32
    Field field = Field::real;
    double scale = 1.0;
    std::uint64_t seed = 0;

    static constexpr std::size_t kMaxDim = 16;
    static constexpr std::size_t kMaxCount = 32;

    /// Throws DomainError when a field is out of range.
    void validate() const;

    /// dim=..,n=..,field=..,scale=..,seed=.. for replay.
    std::string describe() const;
};

struct RandomInstance {
    Vector x;
    VectorFamily family;
    CoefficientSeq c;
};

/// i.i.d. standard normal coordinates times spec.scale (imaginary parts too
/// for complex families). Draw order is x, then y_1..y_n, then c.
RandomInstance random_family(const FamilySpec& spec);

struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-12;

    bool admits(double lhs, double rhs) const noexcept { return lhs <= rhs * (1.0 + rel) + abs; }
};

/// One lhs <= rhs check.
struct Case {
    BoundId id;
    std::optional<double> p;
    std::string_view flavor; ///< "gram", "norms", a chain link such as "lhs_vs_middle", or "-"
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = true;
};

struct VerificationReport {
    std::vector<Case> cases;
    std::size_t n_pass = 0;
    std::size_t n_fail = 0;
    std::optional<std::size_t> worst_margin_case; ///< index into cases

    void add(Case c, const Tolerance& tol);
    bool ok() const noexcept { return n_fail == 0; }
};

/// Evaluates every bound family, each flavor and chain link, at every
/// exponent in p_list. The power-mean cases use only the exponents in (1, 2];
/// the orthonormal specialisation is included when the family is orthonormal.
VerificationReport verify_all(const Vector& x, const VectorFamily& family, const CoefficientSeq& c,
                              std::span<const double> p_list, const Tolerance& tol = {});

/// Every |g_ij| <= ||z_i|| ||z_j|| (1 + 1e-12).
bool check_schwarz_chain(const VectorFamily& family);

enum class FieldChoice { real, complex, both };

struct CorpusOptions {
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::size_t max_dim = 8;
    std::size_t max_n = 10;
    FieldChoice fields = FieldChoice::both;
    double scale = 1.0;
    std::vector<double> p_list{1.0, 1.1, 1.5, 2.0, 3.0, kInfinity};
    Tolerance tol;

    void validate() const;
};

/// Spec of corpus element `index`: dim uniform in [1, max_dim], n uniform in
/// [0, max_n], field alternating when both are requested. Depends only on
/// (options.seed, index).
FamilySpec corpus_spec(const CorpusOptions& options, std::size_t index);

struct Failure {
    FamilySpec spec;
    Case failed;
};

struct CorpusSummary {
    std::size_t trials = 0;
    std::size_t n_cases = 0;
    std::size_t n_pass = 0;
    std::size_t n_fail = 0;
    std::size_t schwarz_failures = 0;
    std::vector<Failure> failures;
    std::optional<Failure> worst; ///< smallest margin seen

    bool ok() const noexcept { return n_fail == 0 && schwarz_failures == 0; }
};

using CorpusVisitor =
    std::function<void(std::size_t index, const FamilySpec&, const VerificationReport&)>;

CorpusSummary run_corpus(const CorpusOptions& options, const CorpusVisitor& visit = {});

} // namespace bombieri

#endif
