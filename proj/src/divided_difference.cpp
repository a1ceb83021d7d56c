#include "ostro/divided_difference.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "ostro/errors.hpp"

namespace ostro {
namespace {

void require_valid_pair(const Vector& y, const Vector& x, std::size_t m, const PrecisionContext& ctx) {
    if (y.size() != m || x.size() != m) throw std::invalid_argument("divided difference: wrong point dimension");
    for (std::size_t j = 0; j < m; ++j) {
        Real scale = abs(x[j]);
        if (scale < Real(1)) scale = Real(1);
        if (abs(y[j] - x[j]) < ctx.eps_machine() * scale) {
            throw DegenerateDividedDifference("divided difference: coordinate " + std::to_string(j) +
                                              " of the two points coincides");
        }
    }
}

// F at the m+1 points of the chain from `start` to `finish`, replacing coordinates
// in the order given by `order`. Point k has its first k coordinates (in that order)
// taken from `finish`. The endpoint values are reused when known.
std::vector<Vector> chain_values(const NonlinearSystem& f, const Vector& start, const Vector& finish,
                                 const std::vector<std::size_t>& order, OpCounters& counters,
                                 const Vector* f_start, const Vector* f_finish) {
    const std::size_t m = f.dimension();
    std::vector<Vector> values(m + 1);
    values[0] = f_start != nullptr ? *f_start : f.eval(start, counters);
    Vector point = start;
    for (std::size_t k = 1; k < m; ++k) {
        point[order[k - 1]] = finish[order[k - 1]];
        values[k] = f.eval(point, counters);
    }
    values[m] = f_finish != nullptr ? *f_finish : f.eval(finish, counters);
    return values;
}

std::vector<std::size_t> ascending(std::size_t m) {
    std::vector<std::size_t> order(m);
    for (std::size_t j = 0; j < m; ++j) order[j] = j;
    return order;
}

std::vector<std::size_t> descending(std::size_t m) {
    std::vector<std::size_t> order(m);
    for (std::size_t j = 0; j < m; ++j) order[j] = m - 1 - j;
    return order;
}

}  // namespace

std::string_view to_string(DividedDifferenceKind kind) noexcept {
    return kind == DividedDifferenceKind::D1 ? "d1" : "d2";
}

Matrix dd_d1(const NonlinearSystem& f, const Vector& y, const Vector& x, OpCounters& counters,
             const PrecisionContext& ctx, const EndpointValues* known) {
    PrecisionScope scope(ctx);
    const std::size_t m = f.dimension();
    require_valid_pair(y, x, m, ctx);

    // forward[k] = F(y_1..y_k, x_{k+1}..x_m)
    const auto forward = chain_values(f, x, y, ascending(m), counters, known ? &known->fx : nullptr,
                                      known ? &known->fy : nullptr);
    Matrix op(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Real step = y[j] - x[j];
        for (std::size_t i = 0; i < m; ++i) {
            op(i, j) = (forward[j + 1][i] - forward[j][i]) / step;
            ++counters.quotients;
        }
    }
    return op;
}

Matrix dd_d2(const NonlinearSystem& f, const Vector& y, const Vector& x, OpCounters& counters,
             const PrecisionContext& ctx, const EndpointValues* known) {
    PrecisionScope scope(ctx);
    const std::size_t m = f.dimension();
    require_valid_pair(y, x, m, ctx);

    // forward[k] = F(y_1..y_k, x_{k+1}..x_m)
    // backward[k] = F(x_1..x_{m-k}, y_{m-k+1}..y_m)
    const auto forward = chain_values(f, x, y, ascending(m), counters, known ? &known->fx : nullptr,
                                      known ? &known->fy : nullptr);
    auto backward = chain_values(f, x, y, descending(m), counters, &forward[0], &forward[m]);

    const Real half = Real(1) / Real(2);
    Matrix op(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Real step = y[j] - x[j];
        // Backward chain: the point with y from column j onwards is backward[m - j],
        // the one with y from column j + 1 onwards is backward[m - j - 1].
        const Vector& with_yj = backward[m - j];
        const Vector& without_yj = backward[m - j - 1];
        for (std::size_t i = 0; i < m; ++i) {
            Real sum = (forward[j + 1][i] - forward[j][i]) + (with_yj[i] - without_yj[i]);
            op(i, j) = sum / step;
            ++counters.quotients;
            op(i, j) *= half;
            ++counters.products;
        }
    }
    return op;
}

Matrix divided_difference(DividedDifferenceKind kind, const NonlinearSystem& f, const Vector& y, const Vector& x,
                          OpCounters& counters, const PrecisionContext& ctx, const EndpointValues* known) {
    return kind == DividedDifferenceKind::D1 ? dd_d1(f, y, x, counters, ctx, known)
                                             : dd_d2(f, y, x, counters, ctx, known);
}

CentralOperator central_dd(const NonlinearSystem& f, const Vector& x, DividedDifferenceKind kind,
                           OpCounters& counters, const PrecisionContext& ctx, OperandOrder order) {
    PrecisionScope scope(ctx);
    Vector fx = f.eval(x, counters);
    for (std::size_t j = 0; j < fx.size(); ++j) {
        if (abs(fx[j]) < ctx.eps_machine()) {
            throw DegenerateDividedDifference("central operator: residual component " + std::to_string(j) +
                                              " is below machine epsilon");
        }
    }
    const Vector u = x + fx;
    const Vector v = x - fx;
    Matrix op = order == OperandOrder::BaseFirst ? divided_difference(kind, f, v, u, counters, ctx)
                                                 : divided_difference(kind, f, u, v, counters, ctx);
    return {std::move(op), std::move(fx)};
}

QuadratureRule gauss_legendre_unit(int nodes, const PrecisionContext& ctx) {
    if (nodes < 2) throw std::invalid_argument("quadrature needs at least 2 nodes");
    PrecisionScope scope(ctx);
    const Real one(1);
    const Real two(2);
    const Real tol = ctx.eps_machine() * Real(100);
    const Real pi_value = pi();

    QuadratureRule rule;
    rule.nodes.resize(nodes);
    rule.weights.resize(nodes);
    for (int k = 0; k < nodes; ++k) {
        // Newton on P_n starting from the Tricomi-type guess.
        Real z = cos(pi_value * (Real(k) + Real(3) / Real(4)) / (Real(nodes) + Real(1) / Real(2)));
        Real derivative;
        for (int iter = 0; iter < 200; ++iter) {
            Real p_prev(1);
            Real p = z;
            for (int n = 2; n <= nodes; ++n) {
                Real p_next = (Real(2 * n - 1) * z * p - Real(n - 1) * p_prev) / Real(n);
                p_prev = std::move(p);
                p = std::move(p_next);
            }
            derivative = Real(nodes) * (z * p - p_prev) / (z * z - one);
            const Real dz = p / derivative;
            z -= dz;
            if (abs(dz) < tol) break;
        }
        // z runs from near +1 downwards, so fill from the top to keep nodes ascending on [0, 1].
        const int slot = nodes - 1 - k;
        rule.nodes[slot] = (z + one) / two;
        rule.weights[slot] = one / ((one - z * z) * derivative * derivative);
    }
    return rule;
}

Matrix integral_dd_oracle(const NonlinearSystem& f, const Vector& y, const Vector& x, int nodes,
                          const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    const std::size_t m = f.dimension();
    const QuadratureRule rule = gauss_legendre_unit(nodes, ctx);
    const Real step = Real::pow10(-(ctx.digits() / 4));
    const Real two_step = Real(2) * step;
    const Vector h = y - x;
    OpCounters scratch;

    Matrix integral(m);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const Vector point = x + rule.nodes[q] * h;
        for (std::size_t j = 0; j < m; ++j) {
            Vector plus = point;
            Vector minus = point;
            plus[j] += step;
            minus[j] -= step;
            const Vector f_plus = f.eval(plus, scratch);
            const Vector f_minus = f.eval(minus, scratch);
            for (std::size_t i = 0; i < m; ++i) {
                integral(i, j) += rule.weights[q] * (f_plus[i] - f_minus[i]) / two_step;
            }
        }
    }
    return integral;
}

Real check_secant(const Matrix& op, const NonlinearSystem& f, const Vector& y, const Vector& x) {
    OpCounters scratch;
    return inf_norm(op * (y - x) - (f.eval(y, scratch) - f.eval(x, scratch)));
}

Real check_symmetry(const NonlinearSystem& f, const Vector& y, const Vector& x, DividedDifferenceKind kind,
                    const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    OpCounters scratch;
    return inf_norm(divided_difference(kind, f, y, x, scratch, ctx) -
                         divided_difference(kind, f, x, y, scratch, ctx));
}

Real check_potra(const NonlinearSystem& f, DividedDifferenceKind kind, const Vector& u, const Vector& v,
                 const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    OpCounters scratch;
    const Vector w = Real(2) * v - u;
    const Matrix lhs = divided_difference(kind, f, u, v, scratch, ctx);
    const Matrix rhs = Real(2) * divided_difference(kind, f, u, w, scratch, ctx) -
                       divided_difference(kind, f, v, w, scratch, ctx);
    return inf_norm(lhs - rhs);
}

}  // namespace ostro
