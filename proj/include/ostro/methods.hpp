#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ostro/convergence.hpp"
#include "ostro/divided_difference.hpp"
#include "ostro/trace.hpp"

namespace ostro {

/// The three derivative-free Ostrowski-type iterations.
///
///   Phi0: y = x - C^-1 F(x),            C = [x - F(x), x + F(x); F]
///   Phi1: z = y - M^-1 F(y),            M = 2 [x, y; F] - C
///
/// shown in the default OperandOrder::BaseFirst slot order.
///   Phi2: X = z - M^-1 F(z),            reusing the factorization of M
enum class MethodKind { Phi0, Phi1, Phi2 };

std::string_view to_string(MethodKind method) noexcept;

/// Local order of (method, operator). D1 degrades Phi1 to 3 and Phi2 to 4 on
/// systems with mixed second partials; pass `d1_preserves_order` for systems
/// without them, where D1 keeps the full orders 4 and 6.
int theoretical_order(MethodKind method, DividedDifferenceKind dd, bool d1_preserves_order = false) noexcept;

struct Phi0Step {
    Vector y;
    Matrix central;
    LUFactorization central_lu;
    Vector fx;
};

struct Phi1Step {
    Vector z;
    LUFactorization nu_lu;
};

/// Newton-like step with the central operator. Throws SingularOperator or
/// DegenerateDividedDifference.
Phi0Step step_phi0(const NonlinearSystem& f, const Vector& x, DividedDifferenceKind dd, OpCounters& counters,
                   const PrecisionContext& ctx, OperandOrder order = OperandOrder::BaseFirst);

/// Ostrowski correction from y = Phi0(x). Reuses the central matrix and F(x) of `first`.
Phi1Step step_phi1(const NonlinearSystem& f, const Vector& x, const Phi0Step& first, DividedDifferenceKind dd,
                   OpCounters& counters, const PrecisionContext& ctx, OperandOrder order = OperandOrder::BaseFirst);

/// Extra correction from z reusing the factorization of M; one F evaluation and one triangular solve pair.
Vector step_phi2(const NonlinearSystem& f, const Vector& z, const LUFactorization& nu_lu, OpCounters& counters,
                 const PrecisionContext& ctx);

/// One full outer iteration x -> x_next of the chosen method.
Vector iterate_once(const NonlinearSystem& f, const Vector& x, MethodKind method, DividedDifferenceKind dd,
                    OpCounters& counters, const PrecisionContext& ctx, OperandOrder order = OperandOrder::BaseFirst);

struct SolveOptions {
    int max_iters = 200;
    /// Order used for the stopping threshold; defaults to theoretical_order().
    std::optional<int> order;
    bool d1_preserves_order = false;
    OperandOrder operand_order = OperandOrder::BaseFirst;
};

struct SolveReport {
    bool converged = false;
    /// Reported iteration count I: the last iterate with E_I above the threshold,
    /// so E_{I+1} is the first ratio at or below it. One less than the iterations performed
    /// when the ratio test fires.
    int iterations = 0;
    /// Outer iterations actually run; the trace holds all of them.
    int iterations_performed = 0;
    IterationTrace trace;
    std::optional<OrderEstimate> acoc;
    /// x_I, the iterate the correct-decimal count refers to.
    Vector final_iterate;
    OpCounters totals;
    int order = 0;
    double eta_used = 0.0;
    std::optional<int> correct_decimals;
    /// "ratio" when the ratio test fired, "degenerate" when a residual component
    /// underflowed, "exact" when a correction was exactly zero.
    std::string termination;
};

/// Iterates until the first ratio E_k <= 0.5 * 10^-eta, eta = (rho - 1) / rho^2 * digits,
/// and reports I = k - 1. The order estimate uses the last two ratios of the trace.
///
/// A DegenerateDividedDifference during an iteration ends the solve as converged
/// with the iterates gathered so far. Throws MaxIterationsExceeded after
/// `max_iters` iterations or three consecutive ratios >= 1, and SingularOperator
/// when an operator cannot be factorized.
SolveReport solve(const NonlinearSystem& f, const Vector& x0, MethodKind method, DividedDifferenceKind dd,
                  const PrecisionContext& ctx, const SolveOptions& options = {});

}  // namespace ostro
