// Command-line front end: table reproduction runs, boundary-curve export and invariant suites.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ostro/benchmark.hpp"
#include "ostro/problems.hpp"

namespace {

using namespace ostro;

struct RunArgs {
    std::vector<std::string> problems;
    std::vector<std::string> methods;
    std::vector<std::string> dd;
    int digits = PrecisionContext::kDefaultDigits;
    int max_iters = 200;
    std::string ell = "2.5";
    std::string mu;
    bool estimate_mu = false;
    std::string format = "csv";
    std::string operand_order = "base-first";
    int jobs = 1;
};

struct CurveArgs {
    std::string which = "g20";
    std::string ell = "2.5";
    std::string m_min = "3";
    std::string m_max = "20";
    int samples = 50;
    int digits = 64;
};

struct CheckArgs {
    std::vector<std::string> suites;
    int digits = 256;
};

int do_run(const RunArgs& args) {
    RunConfig config;
    config.digits = args.digits;
    config.max_iters = args.max_iters;
    config.ell = args.ell;
    if (!args.mu.empty()) config.mu = args.mu;
    config.estimate_mu = args.estimate_mu;
    config.format = parse_output_format(args.format);
    config.operand_order = args.operand_order == "step-first" ? OperandOrder::StepFirst : OperandOrder::BaseFirst;
    config.jobs = args.jobs;
    for (const auto& m : args.methods) config.methods.push_back(parse_method(m));
    for (const auto& d : args.dd) config.dd_kinds.push_back(parse_dd(d));

    const std::vector<std::string> problems = args.problems.empty() ? problem_names() : args.problems;
    std::vector<BenchmarkRow> rows;
    for (const auto& name : problems) {
        auto part = run_benchmark(find_problem(name), config);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    write_rows(std::cout, rows, config.format);

    int failures = 0;
    for (const auto& row : rows) {
        if (row.error) {
            std::cerr << row.problem << ' ' << to_string(row.method) << ' ' << to_string(row.dd) << ": " << *row.error
                      << '\n';
            ++failures;
        } else if (row.counters_match == false) {
            std::cerr << row.problem << ' ' << to_string(row.method) << ' ' << to_string(row.dd)
                      << ": measured counters differ from the cost formula\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}

int do_curves(const CurveArgs& args) {
    const PrecisionContext ctx(args.digits);
    const auto samples =
        export_boundary_curve(parse_boundary_curve(args.which), args.ell, args.m_min, args.m_max, args.samples, ctx);
    write_curve_csv(std::cout, samples);
    return 0;
}

int do_check(const CheckArgs& args) {
    std::vector<std::string> suites = args.suites;
    if (suites.empty()) suites = {"operators", "counters", "tables", "theorems"};
    int failed = 0;
    int total = 0;
    for (const auto& name : suites) {
        const CheckSuite suite = parse_check_suite(name);
        for (const CheckResult& r : run_check_suite(suite, args.digits)) {
            ++total;
            if (!r.passed) ++failed;
            std::cout << (r.passed ? "PASS " : "FAIL ") << '[' << to_string(suite) << "] " << r.name;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
            std::cout << '\n';
        }
    }
    std::cout << total - failed << '/' << total << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derivative-free Ostrowski-type solvers: benchmark tables, efficiency curves and checks"};
    app.set_config("--config", "", "Read options from a key=value file ([run], [curves], [check] sections)");
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Solve the benchmark systems and print result rows");
    run_cmd->add_option("--problem", run.problems, "exp5, quad2 or cos3 (default: all)")
        ->check(CLI::IsMember(problem_names()));
    run_cmd->add_option("--method", run.methods, "phi0, phi1 or phi2")
        ->check(CLI::IsMember({"phi0", "phi1", "phi2"}));
    run_cmd->add_option("--dd", run.dd, "d1 or d2")->check(CLI::IsMember({"d1", "d2"}));
    run_cmd->add_option("--digits", run.digits, "Working precision in decimal digits")
        ->check(CLI::Range(PrecisionContext::kMinDigits, 1 << 20))
        ->capture_default_str();
    run_cmd->add_option("--max-iters", run.max_iters, "Iteration cap")->check(CLI::Range(2, 100000))->capture_default_str();
    run_cmd->add_option("--ell", run.ell, "Quotient cost in products")->capture_default_str();
    run_cmd->add_option("--mu", run.mu, "Evaluation cost in products (default: the published value)");
    run_cmd->add_flag("--estimate-mu", run.estimate_mu, "Derive mu from the elementary cost table");
    run_cmd->add_option("--format", run.format, "csv, json or md")
        ->check(CLI::IsMember({"csv", "json", "md", "markdown"}))
        ->capture_default_str();
    run_cmd->add_option("--operand-order", run.operand_order, "base-first or step-first")
        ->check(CLI::IsMember({"base-first", "step-first"}))
        ->capture_default_str();
    run_cmd->add_option("--jobs", run.jobs, "Rows solved concurrently")->check(CLI::Range(1, 256))->capture_default_str();

    CurveArgs curves;
    auto* curves_cmd = app.add_subcommand("curves", "Sample a boundary curve mu = G(m, ell) as CSV");
    curves_cmd->add_option("--which", curves.which, "g20, g22 or g11")
        ->check(CLI::IsMember({"g20", "g22", "g11"}))
        ->capture_default_str();
    curves_cmd->add_option("--ell", curves.ell, "Quotient cost in products")->capture_default_str();
    curves_cmd->add_option("--m-min", curves.m_min, "Smallest m")->capture_default_str();
    curves_cmd->add_option("--m-max", curves.m_max, "Largest m")->capture_default_str();
    curves_cmd->add_option("--samples", curves.samples, "Number of samples")->check(CLI::Range(2, 1000000))->capture_default_str();
    curves_cmd->add_option("--digits", curves.digits, "Working precision")
        ->check(CLI::Range(PrecisionContext::kMinDigits, 1 << 16))
        ->capture_default_str();

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Run invariant suites; exit status 1 on any failure");
    check_cmd->add_option("--suite", check.suites, "operators, counters, tables or theorems (default: all)")
        ->check(CLI::IsMember({"operators", "counters", "tables", "theorems"}));
    check_cmd->add_option("--digits", check.digits, "Working precision for solver and operator checks")
        ->check(CLI::Range(PrecisionContext::kMinDigits, 1 << 20))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return do_run(run);
        if (*curves_cmd) return do_curves(curves);
        if (*check_cmd) return do_check(check);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
