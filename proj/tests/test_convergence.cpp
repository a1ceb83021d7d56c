#include "doctest.h"
#include "ostro/convergence.hpp"
#include "ostro/errors.hpp"
#include "ostro/methods.hpp"
#include "ostro/problems.hpp"

using namespace ostro;

namespace {

using DD = DividedDifferenceKind;
using MK = MethodKind;

// A trace whose correction norms follow e_{k+1} = c e_k^p from e_1 = 10^-1.
IterationTrace power_trace(int p, const Real& scale, int norms) {
    IterationTrace trace;
    Real e = Real::pow10(-1);
    trace.iterates.emplace_back(1);
    for (int k = 0; k < norms; ++k) {
        trace.iterates.emplace_back(1);
        trace.correction_norms.push_back(scale * e);
        e = pow(e, Real(p));
    }
    for (std::size_t k = 1; k < trace.correction_norms.size(); ++k) {
        trace.ratios.push_back(trace.correction_norms[k] / trace.correction_norms[k - 1]);
    }
    return trace;
}

}  // namespace

TEST_SUITE("convergence-analysis") {

TEST_CASE("geometric doubling of ratios gives order 2") {
    const PrecisionContext ctx(64);
    PrecisionScope scope(ctx);
    const std::vector<Real> ratios{Real("1e-2"), Real("1e-4"), Real("1e-8")};
    const OrderEstimate e = acoc_from_ratios(ratios);
    CHECK(abs(e.acoc - Real(2)) <= ctx.check_tolerance());
    REQUIRE(e.spread.has_value());
    CHECK(abs(*e.spread) <= ctx.check_tolerance());
}

TEST_CASE("synthetic power traces recover the exponent") {
    const PrecisionContext ctx(2048);
    PrecisionScope scope(ctx);
    for (int p : {2, 3, 4, 6}) {
        const IterationTrace trace = power_trace(p, Real(1), 5);
        const OrderEstimate e = acoc(trace);
        CAPTURE(p);
        CHECK(abs(e.acoc - Real(p)) <= Real("1e-6"));
        CHECK(e.last_index == trace.iterations());
        CHECK(e.previous_index == trace.iterations() - 1);
    }
}

TEST_CASE("uniform scaling of the norms leaves the estimate unchanged") {
    const PrecisionContext ctx(512);
    PrecisionScope scope(ctx);
    for (int p : {2, 3}) {
        const OrderEstimate base = acoc(power_trace(p, Real(1), 5));
        for (const char* c : {"1e-30", "0.5", "7", "1e40"}) {
            const OrderEstimate scaled = acoc(power_trace(p, Real(c), 5));
            CHECK(abs(scaled.acoc - base.acoc) <= ctx.check_tolerance());
        }
    }
}

TEST_CASE("short or non-contracting traces are rejected") {
    const PrecisionContext ctx(64);
    PrecisionScope scope(ctx);
    CHECK_THROWS_AS(acoc(power_trace(2, Real(1), 2)), InsufficientTrace);
    const std::vector<Real> growing{Real("0.5"), Real("1.5")};
    CHECK_THROWS_AS(acoc_from_ratios(growing), NonContractingTrace);
    const std::vector<Real> zero{Real("0.5"), Real(0)};
    CHECK_THROWS_AS(acoc_from_ratios(zero), NonContractingTrace);
    const std::vector<Real> single{Real("0.5")};
    CHECK_THROWS_AS(acoc_from_ratios(single), InsufficientTrace);
}

TEST_CASE("eta values") {
    CHECK(eta(2, 4096) == doctest::Approx(1024.0));
    CHECK(eta(4, 4096) == doctest::Approx(768.0));
    CHECK(eta(6, 4096) == doctest::Approx(5120.0 / 9.0));
    CHECK(eta(3, 4096) == doctest::Approx(8192.0 / 9.0));
}

TEST_CASE("stopping threshold is half of 10^-eta") {
    const PrecisionContext ctx(4096);
    PrecisionScope scope(ctx);
    CHECK(abs(stopping_threshold(2, 4096, ctx) - Real::pow10(-1024) / Real(2)) <= Real::pow10(-1024 - 4000));
    const Real six = stopping_threshold(6, 4096, ctx);
    CHECK(abs(-log10(Real(2) * six) - Real(5120) / Real(9)) <= ctx.check_tolerance());
}

TEST_CASE("correct decimals against a reference") {
    const PrecisionContext ctx(256);
    PrecisionScope scope(ctx);
    const Vector alpha{Real(1), Real(2)};
    CHECK(correct_decimals(alpha, alpha, ctx) == 256);
    CHECK(correct_decimals(Vector{Real(1), Real(2) + Real::pow10(-100)}, alpha, ctx) == 100);
    CHECK(correct_decimals(Vector{Real(1), Real(2) + Real("3e-100")}, alpha, ctx) == 99);
    CHECK(correct_decimals(Vector{Real(50), Real(2)}, alpha, ctx) == 0);
    CHECK_THROWS_AS(correct_decimals(alpha, std::optional<Vector>{}, ctx), MissingReferenceRoot);
}

TEST_CASE("correct decimals never drop along the tail of a converging solve") {
    const PrecisionContext ctx(1024);
    const ProblemSpec cos3 = make_cos3();
    const Vector alpha = reference_root(cos3, ctx);
    const SolveReport r = solve(cos3.system, cos3.start(ctx), MK::Phi1, DD::D2, ctx);
    int previous = -1;
    for (std::size_t k = 1; k < r.trace.iterates.size(); ++k) {
        const int q = correct_decimals(r.trace.iterates[k], alpha, ctx);
        CHECK(q >= previous);
        previous = q;
    }
}

TEST_CASE("order estimates on published runs") {
    const PrecisionContext ctx(4096);
    SUBCASE("exp5 Phi2 D1 keeps sixth order") {
        const ProblemSpec exp5 = make_exp5();
        SolveOptions options;
        options.d1_preserves_order = true;
        const SolveReport r = solve(exp5.system, exp5.start(ctx), MK::Phi2, DD::D1, ctx, options);
        REQUIRE(r.acoc.has_value());
        CHECK(abs(r.acoc->acoc - Real(6)) <= Real("1e-3"));
    }
    SUBCASE("quad2 Phi2 D1 drops to fourth order") {
        const ProblemSpec quad2 = make_quad2();
        const SolveReport r = solve(quad2.system, quad2.start(ctx), MK::Phi2, DD::D1, ctx);
        REQUIRE(r.acoc.has_value());
        CHECK(abs(r.acoc->acoc - Real(4)) <= Real("1e-3"));
    }
    SUBCASE("exp5 Phi0 correct decimals") {
        ProblemSpec exp5 = make_exp5();
        exp5.system.set_reference_root(reference_root(exp5, ctx));
        const SolveReport r = solve(exp5.system, exp5.start(ctx), MK::Phi0, DD::D1, ctx);
        REQUIRE(r.correct_decimals.has_value());
        CHECK(std::abs(*r.correct_decimals - 3493) * 10 <= 3493);
    }
}

}  // TEST_SUITE
