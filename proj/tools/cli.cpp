#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace bombieri::cli {

namespace {

using nlohmann::json;

Scalar parse_scalar(const json& j, Field field) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (field == Field::complex && j.is_array() && j.size() == 2 && j[0].is_number() &&
        j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw InputError(field == Field::real ? "real coordinates must be bare numbers"
                                          : "complex coordinates must be numbers or [re, im] pairs");
}

std::vector<Scalar> parse_scalars(const json& j, Field field, std::string_view what) {
    if (!j.is_array()) {
        throw InputError(std::string(what) + " must be an array");
    }
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        out.push_back(parse_scalar(e, field));
    }
    return out;
}

double parse_exponent_json(const json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        return parse_exponent(j.get<std::string>());
    }
    throw InputError("p_list entries must be numbers or \"inf\"");
}

int write_output(const std::string& path, const std::string& content, std::ostream& out,
                 std::ostream& err) {
    if (path.empty() || path == "-") {
        out << content;
        out.flush();
        return out ? kOk : kIo;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return kIo;
    }
    f << content;
    f.close();
    if (!f) {
        err << "error: failed writing " << path << "\n";
        return kIo;
    }
    return kOk;
}

std::string case_p(const Case& c) { return c.p ? format_real(*c.p) : "-"; }

} // namespace

double parse_exponent(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") {
        return kInfinity;
    }
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw InputError("not an exponent: '" + std::string(text) + "'");
    }
    return v;
}

InputDocument parse_input(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("input must be a JSON object");
    }
    try {
        InputDocument in;
        const std::string field = doc.value("field", std::string("real"));
        if (field == "real") {
            in.field = Field::real;
        } else if (field == "complex") {
            in.field = Field::complex;
        } else {
            throw InputError("field must be \"real\" or \"complex\"");
        }
        if (!doc.contains("x")) {
            throw InputError("missing \"x\"");
        }
        in.x = Vector(parse_scalars(doc["x"], in.field, "x"));

        std::vector<Vector> ys;
        if (doc.contains("family")) {
            if (!doc["family"].is_array()) {
                throw InputError("family must be an array of vectors");
            }
            for (const auto& y : doc["family"]) {
                ys.emplace_back(parse_scalars(y, in.field, "family member"));
            }
        }
        in.family = VectorFamily(in.field, in.x.dim(), std::move(ys));

        if (doc.contains("coefficients")) {
            in.coefficients = CoefficientSeq(parse_scalars(doc["coefficients"], in.field, "coefficients"));
            if (in.coefficients.size() != in.family.size()) {
                throw InputError("coefficients must have one entry per family member");
            }
        } else {
            in.coefficients = CoefficientSeq::ones(in.family.size());
        }

        if (doc.contains("p_list")) {
            if (!doc["p_list"].is_array()) {
                throw InputError("p_list must be an array");
            }
            for (const auto& p : doc["p_list"]) {
                in.p_list.push_back(parse_exponent_json(p));
            }
        }
        return in;
    } catch (const bombieri::Error& e) {
        throw InputError(e.what());
    } catch (const json::exception& e) {
        throw InputError(e.what());
    }
}

std::string compute_csv(const VerificationReport& report) {
    std::string s = "bound_id,p,flavor,lhs,rhs,margin\n";
    for (const auto& c : report.cases) {
        s += to_string(c.id);
        s += ',' + case_p(c) + ',';
        s += c.flavor;
        s += ',' + format_real(c.lhs) + ',' + format_real(c.rhs) + ',' + format_real(c.margin) + '\n';
    }
    return s;
}

std::string scan_summary(const SignScanReport& r) {
    std::ostringstream os;
    os << "# summary n_positive=" << r.n_positive << " n_negative=" << r.n_negative
       << " n_zero=" << r.n_zero << " min_b=" << format_real(r.min_cell.b)
       << " min_p=" << format_real(r.min_cell.p) << " min_f=" << format_real(r.min_cell.value)
       << " max_b=" << format_real(r.max_cell.b) << " max_p=" << format_real(r.max_cell.p)
       << " max_f=" << format_real(r.max_cell.value);
    return os.str();
}

std::string scan_csv(const SignScanReport& r) {
    std::string s = "b,p,f\n";
    s.reserve(r.values.size() * 40);
    for (std::size_t i = 0; i < r.grid_b.size(); ++i) {
        for (std::size_t k = 0; k < r.grid_p.size(); ++k) {
            s += format_real(r.grid_b[i]) + ',' + format_real(r.grid_p[k]) + ',' +
                 format_real(r.at(i, k)) + '\n';
        }
    }
    s += scan_summary(r) + '\n';
    return s;
}

int cmd_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err) {
    std::ifstream f(options.input_path, std::ios::binary);
    if (!f) {
        err << "error: cannot read " << options.input_path << "\n";
        return kIo;
    }
    std::stringstream buf;
    buf << f.rdbuf();

    std::string csv;
    try {
        const InputDocument doc = parse_input(buf.str());
        std::vector<double> p_list = options.p_list;
        if (p_list.empty()) {
            p_list = doc.p_list.empty() ? kDefaultComputeP : doc.p_list;
        }
        csv = compute_csv(verify_all(doc.x, doc.family, doc.coefficients, p_list));
    } catch (const InputError& e) {
        err << "error: " << options.input_path << ": " << e.what() << "\n";
        return kUsage;
    } catch (const bombieri::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return write_output(options.out_path, csv, out, err);
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    try {
        options.corpus.validate();
    } catch (const bombieri::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    std::string csv;
    CorpusVisitor visit;
    if (!options.out_path.empty()) {
        csv = "trial,bound_id,p,flavor,lhs,rhs,margin,pass\n";
        visit = [&csv](std::size_t index, const FamilySpec&, const VerificationReport& report) {
            const std::string trial = std::to_string(index);
            for (const auto& c : report.cases) {
                csv += trial + ',';
                csv += to_string(c.id);
                csv += ',' + case_p(c) + ',';
                csv += c.flavor;
                csv += ',' + format_real(c.lhs) + ',' + format_real(c.rhs) + ',' +
                       format_real(c.margin) + ',' + (c.pass ? "1" : "0") + '\n';
            }
        };
    }
    const CorpusSummary summary = run_corpus(options.corpus, visit);

    out << "trials=" << summary.trials << " cases=" << summary.n_cases << " pass=" << summary.n_pass
        << " fail=" << summary.n_fail << " schwarz_fail=" << summary.schwarz_failures << "\n";
    if (summary.worst) {
        const Case& w = summary.worst->failed;
        out << "worst_margin=" << format_real(w.margin) << " bound=" << to_string(w.id)
            << " p=" << case_p(w) << " flavor=" << w.flavor << " " << summary.worst->spec.describe()
            << "\n";
    }
    for (const auto& f : summary.failures) {
        out << "replay: " << f.spec.describe() << " bound=" << to_string(f.failed.id)
            << " p=" << case_p(f.failed) << " flavor=" << f.failed.flavor
            << " lhs=" << format_real(f.failed.lhs) << " rhs=" << format_real(f.failed.rhs) << "\n";
    }

    if (!options.out_path.empty()) {
        if (const int rc = write_output(options.out_path, csv, out, err); rc != kOk) {
            return rc;
        }
    }
    return summary.ok() ? kOk : kRegression;
}

int cmd_scan(const ScanCommandOptions& options, std::ostream& out, std::ostream& err) {
    SignScanReport report;
    try {
        report = scan_f(options.scan);
    } catch (const bombieri::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    const bool to_file = !options.out_path.empty() && options.out_path != "-";
    if (const int rc = write_output(options.out_path, scan_csv(report), out, err); rc != kOk) {
        return rc;
    }
    if (to_file) {
        out << scan_summary(report) << "\n";
    }
    if (!report.both_signs()) {
        err << "scan found only one sign of M2 - M1 on the grid\n";
        return kRegression;
    }
    return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bombieri-type bounds on sums of squared inner products"};
    app.require_subcommand(1);

    std::vector<std::string> p_raw;
    auto add_p = [&p_raw](CLI::App* sub) {
        sub->add_option("--p", p_raw, "Hölder exponent (repeatable; \"inf\" allowed)");
    };

    ComputeOptions compute;
    auto* compute_cmd = app.add_subcommand("compute", "Evaluate every bound on an input document");
    compute_cmd->add_option("--input", compute.input_path, "JSON input document")->required();
    compute_cmd->add_option("--out", compute.out_path, "CSV output path (default stdout)");
    add_p(compute_cmd);

    VerifyOptions verify;
    std::string field = "both";
    auto* verify_cmd = app.add_subcommand("verify", "Check every bound on a random corpus");
    verify_cmd->add_option("--dims", verify.corpus.max_dim, "Largest ambient dimension")
        ->check(CLI::Range(std::size_t{1}, FamilySpec::kMaxDim));
    verify_cmd->add_option("--n", verify.corpus.max_n, "Largest family size")
        ->check(CLI::Range(std::size_t{0}, FamilySpec::kMaxCount));
    verify_cmd->add_option("--trials", verify.corpus.trials, "Number of random instances");
    verify_cmd->add_option("--seed", verify.corpus.seed, "Master seed");
    verify_cmd->add_option("--field", field, "real, complex or both")
        ->check(CLI::IsMember({"real", "complex", "both"}));
    verify_cmd->add_option("--rel-tol", verify.corpus.tol.rel, "Relative tolerance")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--abs-tol", verify.corpus.tol.abs, "Absolute tolerance")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--out", verify.out_path, "Per-case CSV output path");
    add_p(verify_cmd);

    ScanCommandOptions scan;
    auto* scan_cmd = app.add_subcommand("scan", "Tabulate M2 - M1 over the (b, p) box");
    scan_cmd->add_option("--nb", scan.scan.nb, "Grid points in b")->check(CLI::Range(2, 1 << 20));
    scan_cmd->add_option("--np", scan.scan.np, "Grid points in p")->check(CLI::Range(2, 1 << 20));
    scan_cmd->add_option("--eps", scan.scan.eps, "p grid starts at 1 + eps")
        ->check(CLI::Range(0.0, 1.0));
    scan_cmd->add_option("--zero-tol", scan.scan.zero_tol, "|f| below this counts as zero")
        ->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--out", scan.out_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    std::vector<double> p_list;
    try {
        for (const auto& s : p_raw) {
            p_list.push_back(parse_exponent(s));
            (void)conjugate_exponent(p_list.back());
        }
    } catch (const std::exception& e) {
        err << "error: --p: " << e.what() << "\n";
        return kUsage;
    }

    if (*compute_cmd) {
        compute.p_list = p_list;
        return cmd_compute(compute, out, err);
    }
    if (*verify_cmd) {
        verify.corpus.fields = field == "real"      ? FieldChoice::real
                               : field == "complex" ? FieldChoice::complex
                                                    : FieldChoice::both;
        if (!p_list.empty()) {
            verify.corpus.p_list = p_list;
        }
        return cmd_verify(verify, out, err);
    }
    return cmd_scan(scan, out, err);
}

} // namespace bombieri::cli
