// Command-line front end: classify / reduce / decompose / verify a
// bivariate germ given as a polynomial expression, emitting JSON
// certificates. Exit codes: 0 success, 1 verification failed, 2 input
// error, 3 internal consistency error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "esing/classify.hpp"
#include "esing/decompose.hpp"
#include "esing/json_io.hpp"
#include "esing/normal_form.hpp"
#include "esing/parse.hpp"
#include "esing/verify.hpp"
#include "esing/version.hpp"

namespace {

struct Options {
    std::string expr;
    std::string batch_file;
    unsigned order = 8;
    int series_order = -1;  // default: same as order
    double radius = 0.1;
    unsigned samples = 500;
    std::uint64_t seed = 0;
    bool pretty = false;
    bool compact = false;  // --json: the default, kept for symmetry
    bool explain = false;

    unsigned working_order() const {
        return series_order < 0 ? order : static_cast<unsigned>(series_order);
    }
};

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kInternalError = 3 };

std::string run_classify(const std::string& expr, const Options& opt, bool pretty) {
    const esing::GermExpr germ = esing::parse_germ(expr, opt.order);
    auto [cls, cert] = esing::classify(germ.jet);
    if (opt.explain) {
        const auto lines = esing::explain_decision(cls, cert);
        return esing::jsonio::classify_document(cls, cert, &lines, pretty);
    }
    return esing::jsonio::classify_document(cls, cert, nullptr, pretty);
}

std::string run_reduce(const std::string& expr, const Options& opt, bool pretty) {
    const esing::GermExpr germ = esing::parse_germ(expr, opt.order);
    auto [cls, cert] = esing::classify(germ.jet);
    if (!cls.is_e_type()) {
        throw esing::PreconditionError(std::string("cannot reduce: verdict ") +
                                       esing::verdict_name(cls.verdict) +
                                       (cls.reason.empty() ? "" : " (" + cls.reason + ")"));
    }
    const esing::PolyJet& rotated = *cert.normalized_jet;
    esing::PolyJet reduced = rotated;
    switch (cls.verdict) {
        case esing::Verdict::E6: {
            auto [step, out] = esing::reduce_e6(rotated);
            cert.transform_chain.push_back(std::move(step));
            reduced = std::move(out);
            break;
        }
        case esing::Verdict::E7: {
            auto [steps, out] = esing::reduce_e7(rotated);
            for (auto& s : steps) cert.transform_chain.push_back(std::move(s));
            reduced = std::move(out);
            break;
        }
        default: {
            auto [steps, out] = esing::reduce_e8(rotated);
            for (auto& s : steps) cert.transform_chain.push_back(std::move(s));
            reduced = std::move(out);
            break;
        }
    }
    cert.normalized_jet = reduced;

    // Certificates must replay: pushing the germ through the recorded maps
    // has to land exactly on the reduced jet.
    esing::PolyJet replayed = germ.jet;
    for (const auto& step : cert.transform_chain) {
        replayed = esing::substitute(replayed, step.map);
    }
    const bool replay_ok = replayed == reduced;
    if (!replay_ok) {
        throw esing::InternalError("transform chain replay diverged from the reduced jet");
    }
    return esing::jsonio::reduce_document(cls, cert, replay_ok, pretty);
}

std::string run_decompose(const std::string& expr, const Options& opt, bool pretty) {
    const esing::GermExpr germ = esing::parse_germ(expr, opt.order);
    const unsigned W = opt.working_order();
    const esing::Decomposition dec = esing::decompose(germ.jet, W);
    return esing::jsonio::decompose_document(dec, W, pretty);
}

std::string run_verify(const std::string& expr, const Options& opt, bool pretty, int& code) {
    const esing::GermExpr germ = esing::parse_germ(expr, opt.order);
    const esing::VerifyReport report =
        esing::verify_normal_form(germ.jet, opt.working_order(), opt.radius, opt.samples, opt.seed);
    if (!report.pass) code = kVerifyFailed;
    return esing::jsonio::verify_document(report, pretty);
}

std::string run_mode(const std::string& mode, const std::string& expr, const Options& opt,
                     bool pretty, int& code) {
    if (mode == "classify") return run_classify(expr, opt, pretty);
    if (mode == "reduce") return run_reduce(expr, opt, pretty);
    if (mode == "decompose") return run_decompose(expr, opt, pretty);
    return run_verify(expr, opt, pretty, code);
}

int dispatch(const std::string& mode, const Options& opt) {
    if (!opt.batch_file.empty()) {
        std::ifstream in(opt.batch_file);
        if (!in) {
            std::cerr << esing::jsonio::error_document("input_error",
                                                       "cannot open batch file: " + opt.batch_file,
                                                       0, 0, false)
                      << "\n";
            return kInputError;
        }
        // One compact JSON line per germ line; a failing line emits an
        // error object in place and never aborts the batch.
        int worst = kOk;
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            int code = kOk;
            try {
                std::cout << run_mode(mode, line, opt, false, code) << "\n";
            } catch (const esing::ParseError& e) {
                code = kInputError;
                std::cout << esing::jsonio::error_document("parse_error", e.what(), e.line,
                                                           e.column, false)
                          << "\n";
            } catch (const esing::PreconditionError& e) {
                code = kInputError;
                std::cout << esing::jsonio::error_document("input_error", e.what(), 0, 0, false)
                          << "\n";
            } catch (const esing::InternalError& e) {
                code = kInternalError;
                std::cout << esing::jsonio::error_document("internal_error", e.what(), 0, 0, false)
                          << "\n";
            }
            worst = std::max(worst, code);
        }
        return worst;
    }

    int code = kOk;
    try {
        std::cout << run_mode(mode, opt.expr, opt, opt.pretty, code) << "\n";
    } catch (const esing::ParseError& e) {
        std::cerr << esing::jsonio::error_document("parse_error", e.what(), e.line, e.column,
                                                   opt.pretty)
                  << "\n";
        return kInputError;
    } catch (const esing::PreconditionError& e) {
        std::cerr << esing::jsonio::error_document("input_error", e.what(), 0, 0, opt.pretty)
                  << "\n";
        return kInputError;
    } catch (const esing::InternalError& e) {
        std::cerr << esing::jsonio::error_document("internal_error", e.what(), 0, 0, opt.pretty)
                  << "\n";
        return kInternalError;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"E6/E7/E8 germ classifier with machine-checkable certificates"};
    app.set_version_flag("--version", esing::kVersion);
    app.require_subcommand(1);

    Options opt;
    const char* const modes[] = {"classify", "reduce", "decompose", "verify"};
    const char* const descriptions[] = {
        "decide the singularity type of a germ and emit the certificate",
        "run the coordinate-change pipeline and emit the transform chain",
        "solve for psi and split the germ as b0 + b1*(x2-psi) + B*(x2-psi)^3",
        "numerically check the constructed reduction to the normal form",
    };
    for (int i = 0; i < 4; ++i) {
        auto* sub = app.add_subcommand(modes[i], descriptions[i]);
        sub->add_option("expr", opt.expr, "germ expression, e.g. \"x2^3 + x1^4\"");
        sub->add_option("--order", opt.order, "jet truncation order (>= 5)")
            ->capture_default_str();
        sub->add_option("--series-order", opt.series_order,
                        "series working order (default: --order)");
        sub->add_option("--batch", opt.batch_file,
                        "file with one germ per line; '#' comments and blank lines are skipped");
        sub->add_flag("--json", opt.compact, "compact JSON output (default)");
        sub->add_flag("--pretty", opt.pretty, "indent JSON output");
        if (std::string(modes[i]) == "classify") {
            sub->add_flag("--explain", opt.explain, "include the decision path in the output");
        }
        if (std::string(modes[i]) == "verify") {
            sub->add_option("--radius", opt.radius, "sampling disk radius")->capture_default_str();
            sub->add_option("--samples", opt.samples, "number of sample points")
                ->capture_default_str();
            sub->add_option("--seed", opt.seed, "pseudo-random seed")->capture_default_str();
        }
    }

    CLI11_PARSE(app, argc, argv);
    if (opt.compact) opt.pretty = false;

    const std::string mode = app.get_subcommands().front()->get_name();
    if (opt.expr.empty() == opt.batch_file.empty()) {
        std::cerr << esing::jsonio::error_document(
                         "input_error", "provide exactly one of: a germ expression or --batch", 0,
                         0, false)
                  << "\n";
        return kInputError;
    }
    if (opt.series_order >= 0 && static_cast<unsigned>(opt.series_order) < opt.order) {
        std::cerr << esing::jsonio::error_document(
                         "input_error", "--series-order must be at least --order", 0, 0, false)
                  << "\n";
        return kInputError;
    }
    try {
        return dispatch(mode, opt);
    } catch (const std::exception& e) {
        std::cerr << esing::jsonio::error_document("internal_error", e.what(), 0, 0, false)
                  << "\n";
        return kInternalError;
    }
}
