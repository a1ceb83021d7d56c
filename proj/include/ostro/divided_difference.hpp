#pragma once

#include <string_view>

#include "ostro/linalg.hpp"
#include "ostro/precision.hpp"
#include "ostro/system.hpp"

namespace ostro {

/// First-order divided-difference operators [y, x; F].
///
/// D1 walks one chain of mixed points from x to y, replacing coordinates
/// left to right. D2 averages that chain with the chain replacing
/// coordinates right to left; the average is symmetric in (x, y) and agrees
/// with the mean-value integral of F' to second order in y - x.
enum class DividedDifferenceKind { D1, D2 };

std::string_view to_string(DividedDifferenceKind kind) noexcept;

/// Slot order of the two points when the methods build an operator.
///
/// BaseFirst puts the point the step starts from first: [x - F(x), x + F(x); F]
/// and [x, y; F]. StepFirst is the order the iteration formulas are usually
/// typeset in: [x + F(x), x - F(x); F] and [y, x; F]. The choice only matters
/// for D1, which is not symmetric. BaseFirst reproduces the published
/// iteration counts and correct-decimal figures.
enum class OperandOrder { BaseFirst, StepFirst };

/// F(y) and F(x) already computed by the caller; they are not re-evaluated.
struct EndpointValues {
    const Vector& fy;
    const Vector& fx;
};

/// D1 operator. Costs m(m+1) scalar evaluations, or m(m-1) when `known` is
/// given, and m^2 quotients.
/// Throws DegenerateDividedDifference if some |y_j - x_j| < eps * max(1, |x_j|).
Matrix dd_d1(const NonlinearSystem& f, const Vector& y, const Vector& x, OpCounters& counters,
             const PrecisionContext& ctx, const EndpointValues* known = nullptr);

/// D2 operator. Costs 2m^2 scalar evaluations, or 2m(m-1) when `known` is
/// given, m^2 quotients and m^2 products (the halving).
Matrix dd_d2(const NonlinearSystem& f, const Vector& y, const Vector& x, OpCounters& counters,
             const PrecisionContext& ctx, const EndpointValues* known = nullptr);

Matrix divided_difference(DividedDifferenceKind kind, const NonlinearSystem& f, const Vector& y, const Vector& x,
                          OpCounters& counters, const PrecisionContext& ctx, const EndpointValues* known = nullptr);

/// The central operator on x + F(x) and x - F(x) together with F(x).
struct CentralOperator {
    Matrix op;
    Vector fx;
};

/// Evaluates F(x) once and builds the selected operator on u = x + F(x), v = x - F(x),
/// as [v, u; F] for BaseFirst and [u, v; F] for StepFirst.
/// Throws DegenerateDividedDifference when some |F_j(x)| < eps.
CentralOperator central_dd(const NonlinearSystem& f, const Vector& x, DividedDifferenceKind kind,
                           OpCounters& counters, const PrecisionContext& ctx,
                           OperandOrder order = OperandOrder::BaseFirst);

/// Gauss-Legendre rule on [0, 1]; nodes ascending.
struct QuadratureRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

QuadratureRule gauss_legendre_unit(int nodes, const PrecisionContext& ctx);

/// Test oracle for the mean-value integral of F' along the segment x -> y.
///
/// Quadrature with `nodes` Gauss-Legendre points over finite-difference
/// Jacobians (central differences, step 10^-(digits/4)). Only accurate to
/// about `ctx.oracle_tolerance()`. Evaluations are not charged to any solve.
Matrix integral_dd_oracle(const NonlinearSystem& f, const Vector& y, const Vector& x, int nodes,
                          const PrecisionContext& ctx);

/// ||op (y - x) - (F(y) - F(x))||_inf
Real check_secant(const Matrix& op, const NonlinearSystem& f, const Vector& y, const Vector& x);

/// ||op(y, x) - op(x, y)||_inf for the selected kind.
Real check_symmetry(const NonlinearSystem& f, const Vector& y, const Vector& x, DividedDifferenceKind kind,
                    const PrecisionContext& ctx);

/// ||op(u, v) - 2 op(u, 2v - u) + op(v, 2v - u)||_inf, zero exactly when the operator
/// can be the mean-value integral of F'.
Real check_potra(const NonlinearSystem& f, DividedDifferenceKind kind, const Vector& u, const Vector& v,
                 const PrecisionContext& ctx);

}  // namespace ostro
