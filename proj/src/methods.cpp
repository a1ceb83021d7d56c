#include "ostro/methods.hpp"

#include <stdexcept>
#include <string>

#include "ostro/errors.hpp"

namespace ostro {
namespace {

LUFactorization factor_or_throw(const Matrix& a, OpCounters& counters, const PrecisionContext& ctx,
                                const char* which) {
    LUFactorization fact = lu_factor(a, counters, ctx);
    if (fact.singular) {
        throw SingularOperator(std::string(which) + " is numerically singular (max entry " +
                               to_string(max_abs_entry(a), 8) + ")");
    }
    return fact;
}

}  // namespace

std::string_view to_string(MethodKind method) noexcept {
    switch (method) {
        case MethodKind::Phi0: return "phi0";
        case MethodKind::Phi1: return "phi1";
        case MethodKind::Phi2: return "phi2";
    }
    return "?";
}

int theoretical_order(MethodKind method, DividedDifferenceKind dd, bool d1_preserves_order) noexcept {
    const bool full = dd == DividedDifferenceKind::D2 || d1_preserves_order;
    switch (method) {
        case MethodKind::Phi0: return 2;
        case MethodKind::Phi1: return full ? 4 : 3;
        case MethodKind::Phi2: return full ? 6 : 4;
    }
    return 0;
}

Phi0Step step_phi0(const NonlinearSystem& f, const Vector& x, DividedDifferenceKind dd, OpCounters& counters,
                   const PrecisionContext& ctx, OperandOrder order) {
    PrecisionScope scope(ctx);
    CentralOperator central = central_dd(f, x, dd, counters, ctx, order);
    LUFactorization fact = factor_or_throw(central.op, counters, ctx, "central operator");
    Vector y = x - lu_solve(fact, central.fx, counters);
    return {std::move(y), std::move(central.op), std::move(fact), std::move(central.fx)};
}

Phi1Step step_phi1(const NonlinearSystem& f, const Vector& x, const Phi0Step& first, DividedDifferenceKind dd,
                   OpCounters& counters, const PrecisionContext& ctx, OperandOrder order) {
    PrecisionScope scope(ctx);
    const Vector fy = f.eval(first.y, counters);
    Matrix secant;
    if (order == OperandOrder::BaseFirst) {
        const EndpointValues known{first.fx, fy};
        secant = divided_difference(dd, f, x, first.y, counters, ctx, &known);
    } else {
        const EndpointValues known{fy, first.fx};
        secant = divided_difference(dd, f, first.y, x, counters, ctx, &known);
    }
    // 2 [x, y; F] as a sum: doubling is not charged as a product.
    const Matrix nu_inverse = secant + secant - first.central;
    LUFactorization nu_lu = factor_or_throw(nu_inverse, counters, ctx, "2[x,y;F] - central operator");
    Vector z = first.y - lu_solve(nu_lu, fy, counters);
    return {std::move(z), std::move(nu_lu)};
}

Vector step_phi2(const NonlinearSystem& f, const Vector& z, const LUFactorization& nu_lu, OpCounters& counters,
                 const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    const Vector fz = f.eval(z, counters);
    return z - lu_solve(nu_lu, fz, counters);
}

Vector iterate_once(const NonlinearSystem& f, const Vector& x, MethodKind method, DividedDifferenceKind dd,
                    OpCounters& counters, const PrecisionContext& ctx, OperandOrder order) {
    Phi0Step first = step_phi0(f, x, dd, counters, ctx, order);
    if (method == MethodKind::Phi0) return std::move(first.y);
    Phi1Step second = step_phi1(f, x, first, dd, counters, ctx, order);
    if (method == MethodKind::Phi1) return std::move(second.z);
    return step_phi2(f, second.z, second.nu_lu, counters, ctx);
}

SolveReport solve(const NonlinearSystem& f, const Vector& x0, MethodKind method, DividedDifferenceKind dd,
                  const PrecisionContext& ctx, const SolveOptions& options) {
    if (options.max_iters < 2) throw std::invalid_argument("solve: max_iters must be at least 2");
    if (x0.size() != f.dimension()) throw std::invalid_argument("solve: starting point has wrong dimension");
    PrecisionScope scope(ctx);

    SolveReport report;
    report.order = options.order.value_or(theoretical_order(method, dd, options.d1_preserves_order));
    report.eta_used = eta(report.order, ctx.digits());
    const Real threshold = stopping_threshold(report.order, ctx.digits(), ctx);

    IterationTrace& trace = report.trace;
    trace.iterates.push_back(x0);
    OpCounters& counters = report.totals;
    int growing_ratios = 0;

    for (int k = 1; k <= options.max_iters; ++k) {
        const Vector& x = trace.iterates.back();
        const OpCounters before = counters;
        Vector next;
        try {
            next = iterate_once(f, x, method, dd, counters, ctx, options.operand_order);
        } catch (const DegenerateDividedDifference&) {
            // The partial iteration's work is left in the totals but not in the per-iteration log.
            report.converged = true;
            report.termination = "degenerate";
            break;
        }
        trace.per_iteration.push_back(counters - before);
        Real norm = inf_norm(next - x);
        trace.iterates.push_back(std::move(next));
        trace.correction_norms.push_back(norm);

        if (norm.is_zero()) {
            report.converged = true;
            report.termination = "exact";
            break;
        }
        if (trace.correction_norms.size() >= 2) {
            const Real& previous = trace.correction_norms[trace.correction_norms.size() - 2];
            Real ratio = norm / previous;
            const bool stop = ratio <= threshold;
            growing_ratios = ratio >= Real(1) ? growing_ratios + 1 : 0;
            trace.ratios.push_back(std::move(ratio));
            if (stop) {
                report.converged = true;
                report.termination = "ratio";
                break;
            }
            if (growing_ratios >= 3) {
                throw MaxIterationsExceeded(f.name() + ": correction norms grew for 3 consecutive iterations (k=" +
                                            std::to_string(k) + ")");
            }
        }
    }
    if (!report.converged) {
        throw MaxIterationsExceeded(f.name() + ": no convergence within " + std::to_string(options.max_iters) +
                                    " iterations");
    }

    report.iterations_performed = static_cast<int>(trace.iterations());
    // The ratio test certifies x_{k-1}: E_k small means x_k - x_{k-1} is already
    // far below the accuracy of x_{k-1}. A degenerate stop has no such certificate
    // and reports the last iterate produced.
    const bool certified = report.termination != "degenerate" && report.iterations_performed >= 1;
    report.iterations = certified ? report.iterations_performed - 1 : report.iterations_performed;
    report.final_iterate = trace.iterates[static_cast<std::size_t>(report.iterations)];
    if (trace.iterates.size() >= 4) {
        try {
            report.acoc = acoc(trace);
        } catch (const Error&) {
            // Order estimate stays empty when the tail ratios are unusable.
        }
    }
    if (f.reference_root()) report.correct_decimals = correct_decimals(report.final_iterate, f.reference_root(), ctx);
    return report;
}

}  // namespace ostro
