// quadcert: error-certified Newton-Cotes quadrature.
//
// Subcommands:
//   integrate       adaptive / uniform / single-interval certified integration
//   bounds          two-sided vs sup-norm error bound comparison
//   verify-kernels  closed-form kernel integrals against their exact values
//   parse           expression diagnostics (canonical s-expression dump)
//
// Exit codes: 0 success, 1 usage/parse error, 2 certification/tolerance/
// budget failure. Failures still emit a full output record with a status
// field.

#include <chrono>
#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quadcert/adaptive.hpp"
#include "quadcert/errors.hpp"
#include "quadcert/expr.hpp"
#include "quadcert/kernels.hpp"
#include "quadcert/rules.hpp"
#include "record.hpp"

namespace {

using namespace quadcert;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int emit(const qcli::Record& rec, const std::string& format) {
    if (format == "csv")
        std::cout << rec.to_csv();
    else if (format == "text")
        std::cout << rec.to_text();
    else
        std::cout << rec.to_json() << "\n";
    return 0;
}

void add_result_fields(qcli::Record& rec, const CertifiedResult& res) {
    rec.add_real("results.estimate", res.estimate);
    rec.add_real("results.bound", res.bound);
    rec.add_int("results.panels", static_cast<long long>(res.panels.size()));
    double gamma = res.panels.empty() ? 0.0 : res.panels.front().gamma;
    double Gamma = res.panels.empty() ? 0.0 : res.panels.front().Gamma;
    double min_w = res.panels.empty() ? 0.0 : res.panels.front().b - res.panels.front().a;
    double max_w = min_w;
    for (const PanelCertificate& p : res.panels) {
        gamma = std::min(gamma, p.gamma);
        Gamma = std::max(Gamma, p.Gamma);
        min_w = std::min(min_w, p.b - p.a);
        max_w = std::max(max_w, p.b - p.a);
    }
    rec.add_real("results.gamma", gamma);
    rec.add_real("results.Gamma", Gamma);
    rec.add_real("results.min_panel_width", min_w);
    rec.add_real("results.max_panel_width", max_w);
    rec.add_int("results.evals", res.evals);
}

struct IntegrateArgs {
    std::string expr;
    double a = 0.0;
    double b = 1.0;
    std::string rule = "simpson";
    double eps = 1e-6;
    std::string mode = "adaptive";
    long long max_panels = 100000;
    int refine_depth = 6;
    int panel_refine_depth = 2;
    std::string format = "json";
};

int run_integrate(const IntegrateArgs& args) {
    const auto start = Clock::now();
    std::string status = "ok";
    std::string message;
    int exit_code = 0;

    ExprPtr ast;
    try {
        ast = parse(args.expr);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at offset " << e.offset() << ": " << e.what()
                  << "\n";
        status = "syntax_error";
        message = std::string(e.what()) + " (offset " +
                  std::to_string(e.offset()) + ")";
        exit_code = 1;
    }

    const auto rule = rule_from_name(args.rule);
    CertifiedResult result;
    bool have_result = false;

    if (exit_code == 0) {
        IntegrateOptions opts;
        opts.refine_depth = args.refine_depth;
        opts.panel_refine_depth = args.panel_refine_depth;
        opts.max_panels = args.max_panels;
        try {
            if (args.mode == "uniform")
                result = integrate_uniform(*ast, *rule, args.a, args.b, args.eps, opts);
            else if (args.mode == "single")
                result = certify_panel(*ast, *rule, args.a, args.b, args.refine_depth);
            else
                result = integrate_adaptive(*ast, *rule, args.a, args.b, args.eps, opts);
            have_result = true;
        } catch (const BudgetExhausted& e) {
            status = "budget_exhausted";
            message = e.what();
            result = e.partial();
            have_result = true;
            exit_code = 2;
        } catch (const CertificationError& e) {
            status = "certification_error";
            message = e.what();
            exit_code = 2;
        } catch (const DomainError& e) {
            status = "certification_error";
            message = e.what();
            exit_code = 2;
        } catch (const EvalError& e) {
            status = "evaluation_error";
            message = e.what();
            exit_code = 2;
        } catch (const std::invalid_argument& e) {
            std::cerr << "invalid arguments: " << e.what() << "\n";
            status = "usage_error";
            message = e.what();
            exit_code = 1;
        }
        if (exit_code == 2) std::cerr << message << "\n";
    }

    qcli::Record rec;
    rec.add("schema_version", "1");
    rec.add("command", "integrate");
    rec.add("status", status);
    if (!message.empty()) rec.add("message", message);
    rec.add("inputs.expr", args.expr);
    rec.add_real("inputs.a", args.a);
    rec.add_real("inputs.b", args.b);
    rec.add("inputs.rule", args.rule);
    rec.add_real("inputs.eps", args.eps);
    rec.add("inputs.mode", args.mode);
    rec.add_int("inputs.max_panels", args.max_panels);
    rec.add_int("inputs.refine_depth", args.refine_depth);
    if (have_result) add_result_fields(rec, result);
    rec.add_real("timing_ms", elapsed_ms(start));
    emit(rec, args.format);
    return exit_code;
}

struct BoundsArgs {
    std::string expr;
    double a = 0.0;
    double b = 1.0;
    std::string rule = "simpson";
    double gamma = 0.0;
    double Gamma = 0.0;
    bool have_overrides = false;
    int refine_depth = 6;
    std::string format = "json";
};

int run_bounds(const BoundsArgs& args) {
    const auto start = Clock::now();
    std::string status = "ok";
    std::string message;
    int exit_code = 0;

    ExprPtr ast;
    try {
        ast = parse(args.expr);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at offset " << e.offset() << ": " << e.what()
                  << "\n";
        status = "syntax_error";
        message = std::string(e.what()) + " (offset " +
                  std::to_string(e.offset()) + ")";
        exit_code = 1;
    }

    const auto rule = rule_from_name(args.rule);
    bool have_comparison = false;
    BoundComparison cmp{0, 0, 0, 0, 0, 0};
    double estimate = 0.0;
    bool have_estimate = false;
    double reference = 0.0;
    bool have_reference = false;

    if (exit_code == 0) {
        try {
            double gamma = args.gamma;
            double Gamma = args.Gamma;
            if (!args.have_overrides) {
                const Interval enc = second_derivative_enclosure(
                    *ast, Interval(args.a, args.b), args.refine_depth);
                gamma = enc.lo;
                Gamma = enc.hi;
            }
            cmp = compare_bounds(*rule, gamma, Gamma, args.a, args.b);
            have_comparison = true;
            estimate = apply_rule(
                *rule, [&](double t) { return eval_real(*ast, t); }, args.a,
                args.b);
            have_estimate = true;
        } catch (const DomainError& e) {
            status = "certification_error";
            message = e.what();
            exit_code = 2;
        } catch (const EvalError& e) {
            status = "evaluation_error";
            message = e.what();
            exit_code = 2;
        } catch (const std::invalid_argument& e) {
            std::cerr << "invalid arguments: " << e.what() << "\n";
            status = "usage_error";
            message = e.what();
            exit_code = 1;
        }
        if (exit_code == 2) std::cerr << message << "\n";
    }

    if (have_estimate) {
        // best-effort high-accuracy reference for the true error report
        try {
            IntegrateOptions opts;
            opts.max_panels = 200000;
            const CertifiedResult ref = integrate_adaptive(
                *ast, RuleId::Boole, args.a, args.b, 1e-12, opts);
            reference = ref.estimate;
            have_reference = true;
        } catch (const std::exception&) {
            have_reference = false;
        }
    }

    qcli::Record rec;
    rec.add("schema_version", "1");
    rec.add("command", "bounds");
    rec.add("status", status);
    if (!message.empty()) rec.add("message", message);
    rec.add("inputs.expr", args.expr);
    rec.add_real("inputs.a", args.a);
    rec.add_real("inputs.b", args.b);
    rec.add("inputs.rule", args.rule);
    rec.add_bool("inputs.gamma_override", args.have_overrides);
    rec.add_int("inputs.refine_depth", args.refine_depth);
    if (have_comparison) {
        rec.add_real("results.gamma", cmp.gamma);
        rec.add_real("results.Gamma", cmp.Gamma);
        rec.add_real("results.sup_norm", cmp.sup_norm);
        rec.add_real("results.peano_like", cmp.peano_like);
        rec.add_real("results.peano_classic", cmp.peano_classic);
        rec.add_real("results.ratio", cmp.ratio);
    }
    if (have_estimate) rec.add_real("results.estimate", estimate);
    if (have_reference) {
        rec.add_real("results.reference", reference);
        rec.add_real("results.true_error", std::fabs(estimate - reference));
    }
    rec.add_real("timing_ms", elapsed_ms(start));
    emit(rec, args.format);
    return exit_code;
}

struct VerifyArgs {
    double a = 0.0;
    double b = 1.0;
    long long oracle_n = 1000000;
    std::string format = "json";
};

int run_verify_kernels(const VerifyArgs& args) {
    const auto start = Clock::now();
    std::string status = "ok";
    std::string message;
    int exit_code = 0;

    qcli::Record rec;
    rec.add("schema_version", "1");
    rec.add("command", "verify-kernels");

    struct Row {
        const char* name;
        double closed = 0, oracle = 0, expected = 0;
        double mean_zero = 0, max_zero = 0;
        bool pass = false;
    };
    std::vector<Row> rows;

    try {
        if (!(args.a < args.b))
            throw std::invalid_argument("verify-kernels requires a < b");
        const double w = args.b - args.a;
        const double w4 = w * w * w * w;
        // trapezoid convergence is O(1/n^2); keep the oracle gate meaningful
        // at small n without loosening the large-n check
        const double oracle_tol =
            std::max(1e-5, 1e4 / (static_cast<double>(args.oracle_n) *
                                  static_cast<double>(args.oracle_n))) * w4;
        for (KernelId k : {KernelId::K1, KernelId::K2, KernelId::K3}) {
            Row row;
            row.name = kernel_name(k);
            row.closed = kernel_abs_integral(k, args.a, args.b);
            row.expected = kernel_abs_integral_coefficient(k).to_double() * w4;
            row.oracle = kernel_abs_integral_oracle(k, args.a, args.b, args.oracle_n);
            row.mean_zero = kernel_integral(k, args.a, args.b);
            for (double z : kernel_zeros(k, args.a, args.b))
                row.max_zero = std::max(row.max_zero,
                                        std::fabs(kernel_eval(k, z, args.a, args.b)));
            const double scale3 = kernel_scale(k) * w * w * w;
            row.pass = std::fabs(row.closed - row.expected) <= 1e-12 * row.expected &&
                       std::fabs(row.oracle - row.closed) <= oracle_tol &&
                       std::fabs(row.mean_zero) <= 1e-12 * kernel_scale(k) * w4 &&
                       row.max_zero <= 1e-10 * scale3;
            rows.push_back(row);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        status = "usage_error";
        message = e.what();
        exit_code = 1;
    }

    bool all_pass = exit_code == 0;
    for (const Row& r : rows) all_pass = all_pass && r.pass;
    if (exit_code == 0 && !all_pass) {
        status = "tolerance_failure";
        exit_code = 2;
        for (const Row& r : rows)
            if (!r.pass) std::cerr << r.name << " outside tolerance\n";
    }

    rec.add("status", status);
    if (!message.empty()) rec.add("message", message);
    rec.add_real("inputs.a", args.a);
    rec.add_real("inputs.b", args.b);
    rec.add_int("inputs.oracle_n", args.oracle_n);
    for (const Row& r : rows) {
        const std::string base = std::string("results.") + r.name + ".";
        rec.add_real(base + "closed_form", r.closed);
        rec.add_real(base + "oracle", r.oracle);
        rec.add_real(base + "expected", r.expected);
        rec.add_real(base + "mean_zero_residual", r.mean_zero);
        rec.add_real(base + "max_zero_residual", r.max_zero);
        rec.add_bool(base + "pass", r.pass);
    }
    rec.add_bool("results.all_pass", all_pass);
    rec.add_real("timing_ms", elapsed_ms(start));
    emit(rec, args.format);
    return exit_code;
}

struct ParseArgs {
    std::string expr;
    std::string format = "text";
};

int run_parse(const ParseArgs& args) {
    const auto start = Clock::now();
    try {
        const ExprPtr ast = parse(args.expr);
        const std::string dump = to_sexpr(*ast);
        if (args.format == "text") {
            std::cout << dump << "\n";
        } else {
            qcli::Record rec;
            rec.add("schema_version", "1");
            rec.add("command", "parse");
            rec.add("status", "ok");
            rec.add("inputs.expr", args.expr);
            rec.add("results.ast", dump);
            rec.add("results.infix", to_infix(*ast));
            rec.add_real("timing_ms", elapsed_ms(start));
            emit(rec, args.format);
        }
        return 0;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at offset " << e.offset() << ": " << e.what()
                  << "\n";
        if (args.format != "text") {
            qcli::Record rec;
            rec.add("schema_version", "1");
            rec.add("command", "parse");
            rec.add("status", "syntax_error");
            rec.add("message", std::string(e.what()) + " (offset " +
                                   std::to_string(e.offset()) + ")");
            rec.add("inputs.expr", args.expr);
            rec.add_real("timing_ms", elapsed_ms(start));
            emit(rec, args.format);
        }
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"error-certified Newton-Cotes quadrature"};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"json", "csv", "text"};
    const std::vector<std::string> rules = {"simpson", "simpson38", "boole"};

    IntegrateArgs integrate_args;
    CLI::App* integrate = app.add_subcommand(
        "integrate", "integrate an expression with a certified error bound");
    integrate->add_option("--expr", integrate_args.expr, "integrand in t")->required();
    integrate->add_option("--a", integrate_args.a, "lower limit")->required();
    integrate->add_option("--b", integrate_args.b, "upper limit")->required();
    integrate->add_option("--rule", integrate_args.rule, "quadrature rule")
        ->required()
        ->check(CLI::IsMember(rules));
    integrate->add_option("--eps", integrate_args.eps, "target bound (default 1e-6)");
    integrate->add_option("--mode", integrate_args.mode, "adaptive|uniform|single")
        ->check(CLI::IsMember({"adaptive", "uniform", "single"}));
    integrate->add_option("--max-panels", integrate_args.max_panels,
                          "adaptive panel budget (default 100000)");
    integrate->add_option("--refine-depth", integrate_args.refine_depth,
                          "whole-interval enclosure subdivision depth (default 6)");
    integrate->add_option("--panel-refine-depth", integrate_args.panel_refine_depth,
                          "per-panel enclosure subdivision depth (default 2)");
    integrate->add_option("--format", integrate_args.format, "json|csv|text")
        ->check(CLI::IsMember(formats));

    BoundsArgs bounds_args;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "compare the two-sided and sup-norm error bounds");
    bounds->add_option("--expr", bounds_args.expr, "integrand in t")->required();
    bounds->add_option("--a", bounds_args.a, "lower limit")->required();
    bounds->add_option("--b", bounds_args.b, "upper limit")->required();
    bounds->add_option("--rule", bounds_args.rule, "quadrature rule")
        ->required()
        ->check(CLI::IsMember(rules));
    CLI::Option* gamma_opt =
        bounds->add_option("--gamma", bounds_args.gamma, "override gamma");
    CLI::Option* Gamma_opt =
        bounds->add_option("--Gamma", bounds_args.Gamma, "override Gamma");
    gamma_opt->needs(Gamma_opt);
    Gamma_opt->needs(gamma_opt);
    bounds->add_option("--refine-depth", bounds_args.refine_depth,
                       "enclosure subdivision depth (default 6)");
    bounds->add_option("--format", bounds_args.format, "json|csv|text")
        ->check(CLI::IsMember(formats));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify-kernels", "check kernel integrals against their exact values");
    verify->add_option("--a", verify_args.a, "lower limit (default 0)");
    verify->add_option("--b", verify_args.b, "upper limit (default 1)");
    verify->add_option("--oracle-n", verify_args.oracle_n,
                       "trapezoid points (default 1000000)");
    verify->add_option("--format", verify_args.format, "json|csv|text")
        ->check(CLI::IsMember(formats));

    ParseArgs parse_args;
    CLI::App* parse_cmd =
        app.add_subcommand("parse", "dump the canonical form of an expression");
    parse_cmd->add_option("--expr", parse_args.expr, "expression in t")->required();
    parse_cmd->add_option("--format", parse_args.format, "json|csv|text")
        ->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (integrate->parsed()) return run_integrate(integrate_args);
    if (bounds->parsed()) {
        bounds_args.have_overrides = gamma_opt->count() > 0;
        return run_bounds(bounds_args);
    }
    if (verify->parsed()) return run_verify_kernels(verify_args);
    if (parse_cmd->parsed()) return run_parse(parse_args);
    return 1;
}
