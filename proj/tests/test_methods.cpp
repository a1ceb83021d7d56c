#include <random>

#include "doctest.h"
#include "ostro/efficiency.hpp"
#include "ostro/errors.hpp"
#include "ostro/methods.hpp"
#include "ostro/problems.hpp"
#include "support.hpp"

using namespace ostro;
using ostro::testing::affine_system;
using ostro::testing::random_matrix;
using ostro::testing::random_vector;

namespace {

using DD = DividedDifferenceKind;
using MK = MethodKind;

SolveReport solve_problem(const ProblemSpec& problem, MK method, DD dd, const PrecisionContext& ctx,
                          OperandOrder order = OperandOrder::BaseFirst) {
    SolveOptions options;
    options.d1_preserves_order = problem.d1_preserves_order;
    options.operand_order = order;
    return solve(problem.system, problem.start(ctx), method, dd, ctx, options);
}

}  // namespace

TEST_SUITE("iteration-methods") {

TEST_CASE("theoretical orders") {
    CHECK(theoretical_order(MK::Phi0, DD::D1) == 2);
    CHECK(theoretical_order(MK::Phi0, DD::D2) == 2);
    CHECK(theoretical_order(MK::Phi1, DD::D1) == 3);
    CHECK(theoretical_order(MK::Phi1, DD::D2) == 4);
    CHECK(theoretical_order(MK::Phi2, DD::D1) == 4);
    CHECK(theoretical_order(MK::Phi2, DD::D2) == 6);
    CHECK(theoretical_order(MK::Phi1, DD::D1, true) == 4);
    CHECK(theoretical_order(MK::Phi2, DD::D1, true) == 6);
}

TEST_CASE("Phi0 step on x^2 - 1 from 2") {
    const PrecisionContext ctx(64);
    PrecisionScope scope(ctx);
    OpCounters counters;
    const Phi0Step step = step_phi0(ostro::testing::square_minus(1), Vector{Real(2)}, DD::D1, counters, ctx);
    CHECK(step.y[0] == Real("1.25"));
    CHECK(counters.scalar_fn_evals == 1 * (1 + 2));
}

TEST_CASE("Phi2 leaves an exact root fixed") {
    const PrecisionContext ctx(64);
    PrecisionScope scope(ctx);
    const NonlinearSystem f = ostro::testing::square_minus(4);
    OpCounters counters;
    const Phi0Step first = step_phi0(f, Vector{Real(3)}, DD::D2, counters, ctx);
    const Phi1Step second = step_phi1(f, Vector{Real(3)}, first, DD::D2, counters, ctx);
    const Vector root{Real(2)};
    const Vector x = step_phi2(f, root, second.nu_lu, counters, ctx);
    CHECK(x[0] == Real(2));
}

TEST_CASE("every method solves affine systems in one iteration") {
    const PrecisionContext ctx(256);
    PrecisionScope scope(ctx);
    std::mt19937_64 rng(17);
    for (std::size_t m = 1; m <= 4; ++m) {
        const Matrix a = random_matrix(m, rng);
        const Vector b = random_vector(m, rng);
        const NonlinearSystem f = affine_system(a, b);
        OpCounters scratch;
        const LUFactorization fact = lu_factor(a, scratch, ctx);
        const Vector root = Real(-1) * lu_solve(fact, b, scratch);
        for (MK method : {MK::Phi0, MK::Phi1, MK::Phi2}) {
            for (DD dd : {DD::D1, DD::D2}) {
                const Vector x0 = random_vector(m, rng, 5.0);
                OpCounters counters;
                const Vector x1 = iterate_once(f, x0, method, dd, counters, ctx);
                CHECK(inf_norm(x1 - root) <= ctx.check_tolerance());

                const SolveReport report = solve(f, x0, method, dd, ctx);
                CHECK(report.converged);
                CHECK(report.iterations == 1);
                CHECK(inf_norm(report.final_iterate - root) <= ctx.check_tolerance());
            }
        }
    }
}

TEST_CASE("per-iteration counts of the composed steps") {
    const PrecisionContext ctx(128);
    PrecisionScope scope(ctx);
    for (const auto& name : problem_names()) {
        const ProblemSpec problem = find_problem(name);
        const std::uint64_t m = problem.dimension();
        const Vector x = problem.start(ctx);
        for (DD dd : {DD::D1, DD::D2}) {
            OpCounters counters;
            const Phi0Step first = step_phi0(problem.system, x, dd, counters, ctx);
            const OpCounters after0 = counters;
            const Phi1Step second = step_phi1(problem.system, x, first, dd, counters, ctx);
            const OpCounters after1 = counters;
            step_phi2(problem.system, second.z, second.nu_lu, counters, ctx);
            const OpCounters marginal = counters - after1;

            if (dd == DD::D1) {
                CHECK(after0.scalar_fn_evals == m * (m + 2));
                CHECK(after1.scalar_fn_evals == 2 * m * (m + 1));
            } else {
                CHECK(after1.scalar_fn_evals == 4 * m * m);
            }
            CHECK(marginal == OpCounters{m, m * (m - 1), m});
        }
    }
}

TEST_CASE("solve counters match the cost formulas on every iteration") {
    const PrecisionContext ctx(256);
    for (const auto& name : problem_names()) {
        const ProblemSpec problem = find_problem(name);
        const int m = static_cast<int>(problem.dimension());
        for (MK method : {MK::Phi0, MK::Phi1, MK::Phi2}) {
            for (DD dd : {DD::D1, DD::D2}) {
                const SolveReport report = solve_problem(problem, method, dd, ctx);
                REQUIRE_FALSE(report.trace.per_iteration.empty());
                const OpCounters expected = expected_counters(method, dd, m);
                for (const OpCounters& c : report.trace.per_iteration) CHECK(c == expected);
                if (dd == DD::D1) {
                    CHECK(expected.scalar_fn_evals == evaluations_per_iteration(method, dd, m));
                    CHECK(expected.products == products_per_iteration(method, m));
                    CHECK(expected.quotients == quotients_per_iteration(method, m));
                }
            }
        }
    }
}

TEST_CASE("published iteration counts at 4096 digits") {
    const PrecisionContext ctx(4096);
    SUBCASE("exp5 Phi2 D1") {
        const SolveReport r = solve_problem(make_exp5(), MK::Phi2, DD::D1, ctx);
        CHECK(r.converged);
        CHECK(r.iterations == 4);
    }
    SUBCASE("cos3 Phi1 D2 and its root") {
        const ProblemSpec cos3 = make_cos3();
        const SolveReport r = solve_problem(cos3, MK::Phi1, DD::D2, ctx);
        CHECK(r.iterations == 6);
        PrecisionScope scope(ctx);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(abs(r.final_iterate[i] - Real(cos3.root_prefix[i])) < Real("1e-10"));
        }
    }
    SUBCASE("quad2 Phi0") {
        const SolveReport r = solve_problem(make_quad2(), MK::Phi0, DD::D1, ctx);
        CHECK(r.iterations == 11);
        CHECK(r.iterations_performed == 12);
        CHECK(r.termination == "ratio");
    }
}

TEST_CASE("the typeset operand order stays within one iteration of the tables") {
    const PrecisionContext ctx(4096);
    const ProblemSpec quad2 = make_quad2();
    for (const PublishedRow& row : quad2.published) {
        const SolveReport r = solve_problem(quad2, row.method, row.dd, ctx, OperandOrder::StepFirst);
        CAPTURE(to_string(row.method));
        CAPTURE(to_string(row.dd));
        CHECK(std::abs(r.iterations - row.iterations) <= 1);
    }
}

TEST_CASE("correction norms decrease strictly from the second iteration") {
    const PrecisionContext ctx(1024);
    for (const auto& name : problem_names()) {
        const ProblemSpec problem = find_problem(name);
        for (const PublishedRow& row : problem.published) {
            const SolveReport r = solve_problem(problem, row.method, row.dd, ctx);
            const auto& norms = r.trace.correction_norms;
            for (std::size_t k = 2; k < norms.size(); ++k) CHECK(norms[k] < norms[k - 1]);
        }
    }
}

TEST_CASE("doubling the digits reproduces the iterate sequence") {
    const PrecisionContext ctx(4096);
    const PrecisionContext doubled(8192);
    const ProblemSpec quad2 = make_quad2();
    for (const PublishedRow& row : quad2.published) {
        const SolveReport low = solve_problem(quad2, row.method, row.dd, ctx);
        const SolveReport high = solve_problem(quad2, row.method, row.dd, doubled);
        // The iterate after x_I is built from a step below the working resolution, so only
        // the certified prefix is compared.
        const std::size_t certified = static_cast<std::size_t>(low.iterations) + 1;
        REQUIRE(high.trace.iterates.size() >= certified);
        PrecisionScope scope(doubled);
        // Agreement to 4096 significant digits, up to a few units of rounding.
        const Real tolerance = Real::pow10(-4096 + 3);
        for (std::size_t k = 0; k < certified; ++k) {
            CAPTURE(k);
            CHECK(inf_norm(high.trace.iterates[k] - low.trace.iterates[k]) <= tolerance);
        }
    }
}

TEST_CASE("iteration limits and invalid arguments") {
    const PrecisionContext ctx(4096);
    const ProblemSpec quad2 = make_quad2();
    SolveOptions options;
    options.max_iters = 3;
    CHECK_THROWS_AS(solve(quad2.system, quad2.start(ctx), MK::Phi0, DD::D1, ctx, options), MaxIterationsExceeded);
    options.max_iters = 1;
    CHECK_THROWS_AS(solve(quad2.system, quad2.start(ctx), MK::Phi0, DD::D1, ctx, options), std::invalid_argument);
    CHECK_THROWS_AS(solve(quad2.system, Vector{Real(1)}, MK::Phi0, DD::D1, ctx), std::invalid_argument);
}

TEST_CASE("a system without real roots does not report convergence") {
    const PrecisionContext ctx(64);
    const NonlinearSystem f("no-root", 1, [](std::size_t, std::span<const Real> x) { return x[0] * x[0] + Real(1); });
    SolveOptions options;
    options.max_iters = 60;
    CHECK_THROWS_AS(solve(f, Vector{Real("0.3")}, MK::Phi0, DD::D1, ctx, options), Error);
}

TEST_CASE("a singular central operator aborts the solve") {
    const PrecisionContext ctx(64);
    const NonlinearSystem f("rank-one", 2, [](std::size_t, std::span<const Real> x) { return x[0] + x[1]; });
    CHECK_THROWS_AS(solve(f, Vector{Real(1), Real(1)}, MK::Phi0, DD::D1, ctx), SingularOperator);
}

TEST_CASE("reaching an exact root ends the solve as degenerate") {
    const PrecisionContext ctx(64);
    const NonlinearSystem f = ostro::testing::square_minus(4);
    const SolveReport r = solve(f, Vector{Real(2)}, MK::Phi0, DD::D1, ctx);
    CHECK(r.converged);
    CHECK(r.termination == "degenerate");
    CHECK(r.iterations == 0);
    CHECK(r.final_iterate[0] == Real(2));
}

}  // TEST_SUITE
