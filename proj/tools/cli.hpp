#ifndef BOMBIERI_TOOLS_CLI_HPP
#define BOMBIERI_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bombieri/bombieri.hpp"

namespace bombieri::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kRegression = 1, ///< semantic regression: failed checks, or a scan found one sign only
    kUsage = 2,      ///< bad flags or unparseable input
    kIo = 3,
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON input document:
///
///   {
///     "field": "real" | "complex",
///     "x": [...],
///     "family": [[...], ...],
///     "coefficients": [...],        optional, defaults to all ones
///     "p_list": [1, 2, "inf"]       optional
///   }
///
/// Real coordinates are bare numbers, complex ones [re, im] pairs.
struct InputDocument {
    Field field = Field::real;
    Vector x = Vector::zero(1);
    VectorFamily family{Field::real, 1, {}};
    CoefficientSeq coefficients;
    std::vector<double> p_list;
};

/// Throws InputError on malformed JSON or inconsistent shapes.
InputDocument parse_input(std::string_view text);

/// Accepts decimal numbers and "inf" / "infinity".
double parse_exponent(std::string_view text);

inline const std::vector<double> kDefaultComputeP{1.0, 2.0, kInfinity};

/// bound_id,p,flavor,lhs,rhs,margin
std::string compute_csv(const VerificationReport& report);

/// b,p,f rows followed by a "# summary ..." line.
std::string scan_csv(const SignScanReport& report);

std::string scan_summary(const SignScanReport& report);

struct ComputeOptions {
    std::string input_path;
    std::vector<double> p_list; ///< overrides the document's p_list when non-empty
    std::string out_path;       ///< empty or "-" writes to stdout
};

struct VerifyOptions {
    CorpusOptions corpus;
    std::string out_path; ///< optional per-case CSV
};

struct ScanCommandOptions {
    ScanOptions scan;
    std::string out_path;
};

int cmd_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanCommandOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bombieri::cli

#endif
