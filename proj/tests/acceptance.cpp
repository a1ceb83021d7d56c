// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ostro/benchmark.hpp"
#include "ostro/divided_difference.hpp"
#include "ostro/efficiency.hpp"
#include "ostro/problems.hpp"

using namespace ostro;

namespace {

using DD = DividedDifferenceKind;
using MK = MethodKind;

struct Criterion {
    std::string id;
    std::string title;
    bool passed = true;
    int checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            passed = false;
            failures.push_back(what);
        }
    }
};

struct TableRun {
    std::string problem;
    PublishedRow published;
    BenchmarkRow row;
};

std::string label(const std::string& problem, MK method, DD dd) {
    return problem + " " + std::string(to_string(method)) + " " + std::string(to_string(dd));
}

std::vector<TableRun> run_tables(int digits) {
    RunConfig config;
    config.digits = digits;
    std::vector<TableRun> runs;
    for (const auto& name : problem_names()) {
        const ProblemSpec problem = find_problem(name);
        const auto rows = run_benchmark(problem, config);
        for (std::size_t i = 0; i < rows.size(); ++i) runs.push_back({name, problem.published[i], rows[i]});
    }
    return runs;
}

std::string fixed_from(const std::string& value, int decimals) {
    PrecisionScope scope(bits_for_digits(64));
    return to_fixed(Real(value), decimals);
}

void check_acoc(Criterion& c, const std::vector<TableRun>& runs) {
    PrecisionScope scope(bits_for_digits(64));
    for (const TableRun& run : runs) {
        const std::string name = label(run.problem, run.published.method, run.published.dd);
        if (!run.row.acoc) {
            c.expect(false, name + ": no estimate" + (run.row.error ? " (" + *run.row.error + ")" : ""));
            continue;
        }
        const Real gap = abs(Real(*run.row.acoc) - Real(run.published.order));
        c.expect(gap <= Real("1e-3"), name + ": " + fixed_from(*run.row.acoc, 6) + " vs " +
                                          std::to_string(run.published.order));
    }
}

Criterion cost_tables() {
    Criterion c{"1", "cost() reproduces all 13 published C values"};
    PrecisionScope scope(bits_for_digits(64));
    for (const auto& name : problem_names()) {
        const ProblemSpec problem = find_problem(name);
        const int m = static_cast<int>(problem.dimension());
        for (const PublishedRow& row : problem.published) {
            const std::string got =
                to_fixed(cost({m, Real(problem.mu_published), Real("2.5"), row.method, row.dd}), 1);
            c.expect(got == row.cost, label(name, row.method, row.dd) + ": " + got + " vs " + row.cost);
        }
    }
    return c;
}

Criterion cei_tables() {
    Criterion c{"2", "CEI to 9 decimals and TF to 2 decimals"};
    PrecisionScope scope(bits_for_digits(64));
    for (const auto& name : problem_names()) {
        const ProblemSpec problem = find_problem(name);
        const int m = static_cast<int>(problem.dimension());
        for (const PublishedRow& row : problem.published) {
            const Real e =
                cei(Real(row.order), cost({m, Real(problem.mu_published), Real("2.5"), row.method, row.dd}));
            const std::string e9 = to_fixed(e, 9);
            const std::string tf = to_fixed(time_factor(Real(e9)), 2);
            c.expect(e9 == row.cei, label(name, row.method, row.dd) + " CEI: " + e9 + " vs " + row.cei);
            c.expect(tf == row.time_factor, label(name, row.method, row.dd) + " TF: " + tf + " vs " + row.time_factor);
        }
    }
    return c;
}

Criterion iteration_counts(const std::vector<TableRun>& runs) {
    Criterion c{"3", "published I within 1 at 4096 digits"};
    int exact = 0;
    for (const TableRun& run : runs) {
        const std::string name = label(run.problem, run.published.method, run.published.dd);
        if (!run.row.iterations) {
            c.expect(false, name + ": " + run.row.error.value_or("no result"));
            continue;
        }
        const int diff = *run.row.iterations - run.published.iterations;
        if (diff == 0) ++exact;
        c.expect(std::abs(diff) <= 1, name + ": I = " + std::to_string(*run.row.iterations) + " vs " +
                                          std::to_string(run.published.iterations));
    }
    c.title += " (" + std::to_string(exact) + "/" + std::to_string(runs.size()) + " exact)";
    return c;
}

Criterion order_recovery(const std::vector<TableRun>& runs) {
    Criterion c{"4", "ACOC within 1e-3 of the theoretical order at 4096 digits"};
    check_acoc(c, runs);
    return c;
}

Criterion smoke_tier(const std::vector<TableRun>& runs) {
    Criterion c{"3/4s", "1024-digit smoke tier: runs converge and ACOC within 1e-3"};
    for (const TableRun& run : runs) {
        c.expect(!run.row.error.has_value(),
                 label(run.problem, run.published.method, run.published.dd) + ": " + run.row.error.value_or(""));
    }
    check_acoc(c, runs);
    return c;
}

Criterion operator_axioms() {
    Criterion c{"5", "secant, symmetry, D1 asymmetry and Potra residuals"};
    const PrecisionContext ctx(256);
    PrecisionScope scope(ctx);
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> offset(-1.0, 1.0);
    for (const auto& name : problem_names()) {
        const ProblemSpec problem = find_problem(name);
        const Vector x0 = problem.start(ctx);
        Real worst_secant;
        Real worst_symmetry;
        for (int pair = 0; pair < 100; ++pair) {
            Vector x = x0;
            Vector y = x0;
            for (std::size_t i = 0; i < x0.size(); ++i) {
                x[i] += Real(offset(rng));
                y[i] += Real(offset(rng));
            }
            for (DD kind : {DD::D1, DD::D2}) {
                OpCounters scratch;
                const Matrix op = divided_difference(kind, problem.system, y, x, scratch, ctx);
                worst_secant = std::max(worst_secant, check_secant(op, problem.system, y, x));
            }
            worst_symmetry = std::max(worst_symmetry, check_symmetry(problem.system, y, x, DD::D2, ctx));
        }
        c.expect(worst_secant <= ctx.check_tolerance(), name + " secant residual " + to_string(worst_secant, 3));
        c.expect(worst_symmetry <= ctx.check_tolerance(), name + " D2 symmetry " + to_string(worst_symmetry, 3));
    }
    const ProblemSpec quad2 = make_quad2();
    const Real asym = check_symmetry(quad2.system, Vector{Real(1), Real(1)}, Vector{Real(2), Real(2)}, DD::D1, ctx);
    c.expect(asym > Real(0), "quad2 D1 asymmetry " + to_string(asym, 6));
    const Real potra = check_potra(quad2.system, DD::D1, Vector{Real(1), Real(0)}, Vector{Real(0), Real(1)}, ctx);
    c.expect(abs(potra - Real(2)) <= ctx.check_tolerance(), "quad2 D1 Potra residual " + to_string(potra, 6));
    return c;
}

Criterion accuracy_orders() {
    Criterion c{"6", "h-halving error ratios: D1 in [1.7, 2.3], D2 in [3.4, 4.6]"};
    const PrecisionContext ctx(256);
    PrecisionScope scope(ctx);
    const ProblemSpec cos3 = make_cos3();
    const Vector x = cos3.start(ctx);
    for (DD kind : {DD::D1, DD::D2}) {
        Vector h{Real("1e-3"), Real("-0.6e-3"), Real("0.8e-3")};
        std::vector<Real> errors;
        for (int level = 0; level < 4; ++level) {
            OpCounters scratch;
            const Matrix op = divided_difference(kind, cos3.system, x + h, x, scratch, ctx);
            errors.push_back(max_abs_entry(op - integral_dd_oracle(cos3.system, x + h, x, 12, ctx)));
            h = (Real(1) / Real(2)) * h;
        }
        const double lo = kind == DD::D1 ? 1.7 : 3.4;
        const double hi = kind == DD::D1 ? 2.3 : 4.6;
        for (std::size_t k = 1; k < errors.size(); ++k) {
            const double shrink = (errors[k - 1] / errors[k]).to_double();
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s halving %zu: %.4f", std::string(to_string(kind)).c_str(), k, shrink);
            c.expect(shrink >= lo && shrink <= hi, buf);
        }
    }
    return c;
}

Criterion counter_equality(const std::vector<TableRun>& runs) {
    Criterion c{"7", "measured per-iteration counters equal the formulas"};
    for (const TableRun& run : runs) {
        c.expect(run.row.counters_match.value_or(false),
                 label(run.problem, run.published.method, run.published.dd) + " (table run)");
    }
    RunConfig config;
    config.digits = 256;
    config.methods = {MK::Phi0, MK::Phi1, MK::Phi2};
    config.dd_kinds = {DD::D1, DD::D2};
    for (const auto& name : problem_names()) {
        for (const BenchmarkRow& row : run_benchmark(find_problem(name), config)) {
            c.expect(row.counters_match.value_or(false), label(name, row.method, row.dd) + " at 256 digits");
        }
    }
    return c;
}

Criterion theorem_certificates() {
    Criterion c{"8", "theorem grid sweep and asymptote constants"};
    for (const CheckResult& r : run_check_suite(CheckSuite::Theorems, 64)) {
        if (r.name.find("CEI") != std::string::npos) continue;  // case orderings are criterion 9
        c.expect(r.passed, r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
    }
    return c;
}

Criterion case_orderings() {
    Criterion c{"9", "case orderings at (2, 1.5, 2.5) and (3, 113.3, 2.5)"};
    const PrecisionContext ctx(64);
    PrecisionScope scope(ctx);
    auto rated = [](MK method, DD dd, int order, int m, const char* mu) {
        return cei(Real(order), cost({m, Real(mu), Real("2.5"), method, dd}));
    };
    {
        const Real c0 = rated(MK::Phi0, DD::D1, 2, 2, "1.5");
        const Real c1d1 = rated(MK::Phi1, DD::D1, 3, 2, "1.5");
        const Real c2d1 = rated(MK::Phi2, DD::D1, 4, 2, "1.5");
        const Real c1d2 = rated(MK::Phi1, DD::D2, 4, 2, "1.5");
        const Real c2d2 = rated(MK::Phi2, DD::D2, 6, 2, "1.5");
        c.expect(c2d2 > c1d2, "m=2: CEI2(2) > CEI1(2)");
        c.expect(classify_region(comparisons::kPhi1D2VsPhi0, 2, Real("1.5"), Real("2.5")) == Region::Boundary,
                 "m=2: CEI1(2) = CEI0");
        c.expect(c0 > c1d1, "m=2: CEI0 > CEI1(1)");
        c.expect(c2d2 > c2d1, "m=2: CEI2(2) > CEI2(1)");
    }
    {
        const Real c0 = rated(MK::Phi0, DD::D1, 2, 3, "113.3");
        const Real c1d1 = rated(MK::Phi1, DD::D1, 3, 3, "113.3");
        const Real c2d1 = rated(MK::Phi2, DD::D1, 4, 3, "113.3");
        const Real c1d2 = rated(MK::Phi1, DD::D2, 4, 3, "113.3");
        const Real c2d2 = rated(MK::Phi2, DD::D2, 6, 3, "113.3");
        c.expect(c2d1 > c0, "m=3: CEI2(1) > CEI0");
        c.expect(c0 > c2d2, "m=3: CEI0 > CEI2(2)");
        c.expect(c2d2 > c1d2, "m=3: CEI2(2) > CEI1(2)");
        c.expect(c1d1 > c1d2, "m=3: CEI1(1) > CEI1(2)");
    }
    return c;
}

Criterion correct_decimal_columns(const std::vector<TableRun>& runs) {
    Criterion c{"10", "q within 10% of the published column (T and the +- bounds are not reproduced)"};
    for (const TableRun& run : runs) {
        const std::string name = label(run.problem, run.published.method, run.published.dd);
        if (!run.row.correct_decimals) {
            c.expect(false, name + ": no q");
            continue;
        }
        const int q = *run.row.correct_decimals;
        c.expect(std::abs(q - run.published.correct_decimals) * 10 <= run.published.correct_decimals,
                 name + ": " + std::to_string(q) + " vs " + std::to_string(run.published.correct_decimals));
    }
    return c;
}

}  // namespace

int main() {
    const auto full = run_tables(4096);
    const auto smoke = run_tables(1024);

    std::vector<Criterion> criteria;
    criteria.push_back(cost_tables());
    criteria.push_back(cei_tables());
    criteria.push_back(iteration_counts(full));
    criteria.push_back(order_recovery(full));
    criteria.push_back(smoke_tier(smoke));
    criteria.push_back(operator_axioms());
    criteria.push_back(accuracy_orders());
    criteria.push_back(counter_equality(full));
    criteria.push_back(theorem_certificates());
    criteria.push_back(case_orderings());
    criteria.push_back(correct_decimal_columns(full));

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::printf("%s criterion %s: %s [%d checks]\n", c.passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                    c.checked);
        for (const std::string& f : c.failures) std::printf("     - %s\n", f.c_str());
        if (!c.passed) ++failed;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
