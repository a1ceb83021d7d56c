#include "ostro/efficiency.hpp"

#include <stdexcept>
#include <string>

#include "ostro/errors.hpp"

namespace ostro {
namespace {

// a(m) with real m; Phi0 ignores dd.
Real evaluations_real(MethodKind method, DividedDifferenceKind dd, const Real& m) {
    const bool d2 = dd == DividedDifferenceKind::D2;
    switch (method) {
        case MethodKind::Phi0: return m * (m + Real(2));
        case MethodKind::Phi1: return d2 ? Real(4) * m * m : Real(2) * m * (m + Real(1));
        case MethodKind::Phi2: return d2 ? m * (Real(4) * m + Real(1)) : m * (Real(2) * m + Real(3));
    }
    return {};
}

// p(m, ell) with real m.
Real products_real(MethodKind method, const Real& m, const Real& ell) {
    const Real m2 = m * m;
    switch (method) {
        case MethodKind::Phi0:
            return m * (Real(2) * m2 + Real(3) * m - Real(5)) / Real(6) + ell * m * (Real(3) * m + Real(1)) / Real(2);
        case MethodKind::Phi1:
            return m * (Real(2) * m2 + Real(3) * m - Real(5)) / Real(3) + ell * m * (Real(3) * m + Real(1));
        case MethodKind::Phi2:
            return m * (Real(2) * m2 + Real(6) * m - Real(8)) / Real(3) + ell * m * (Real(3) * m + Real(2));
    }
    return {};
}

Real cost_real(MethodKind method, DividedDifferenceKind dd, const Real& m, const Real& mu, const Real& ell) {
    return evaluations_real(method, dd, m) * mu + products_real(method, m, ell);
}

Region region_of(const Real& r) {
    static const double kBoundaryTolerance = 1e-12;
    const Real tol(kBoundaryTolerance);
    const Real diff = r - Real(1);
    if (abs(diff) <= tol) return Region::Boundary;
    return diff > Real(0) ? Region::FirstWins : Region::SecondWins;
}

}  // namespace

std::uint64_t evaluations_per_iteration(MethodKind method, DividedDifferenceKind dd, int m) {
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    const bool d2 = dd == DividedDifferenceKind::D2;
    switch (method) {
        case MethodKind::Phi0: return mm * (mm + 2);
        case MethodKind::Phi1: return d2 ? 4 * mm * mm : 2 * mm * (mm + 1);
        case MethodKind::Phi2: return d2 ? mm * (4 * mm + 1) : mm * (2 * mm + 3);
    }
    return 0;
}

std::uint64_t products_per_iteration(MethodKind method, int m) {
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    switch (method) {
        case MethodKind::Phi0: return mm * (2 * mm * mm + 3 * mm - 5) / 6;
        case MethodKind::Phi1: return mm * (2 * mm * mm + 3 * mm - 5) / 3;
        case MethodKind::Phi2: return mm * (2 * mm * mm + 6 * mm - 8) / 3;
    }
    return 0;
}

std::uint64_t quotients_per_iteration(MethodKind method, int m) {
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    switch (method) {
        case MethodKind::Phi0: return mm * (3 * mm + 1) / 2;
        case MethodKind::Phi1: return mm * (3 * mm + 1);
        case MethodKind::Phi2: return mm * (3 * mm + 2);
    }
    return 0;
}

OpCounters expected_counters(MethodKind method, DividedDifferenceKind dd, int m) {
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    OpCounters c{evaluations_per_iteration(method, dd, m), products_per_iteration(method, m),
                 quotients_per_iteration(method, m)};
    if (dd == DividedDifferenceKind::D2) {
        const std::uint64_t operators = method == MethodKind::Phi0 ? 1 : 2;
        c.products += operators * mm * mm;
        if (method == MethodKind::Phi0) c.scalar_fn_evals = mm * (2 * mm + 1);
    }
    return c;
}

Real cost(const CostModel& model) {
    if (model.m < 2) throw std::invalid_argument("cost model needs m >= 2");
    if (!(model.mu > Real(0))) throw std::invalid_argument("cost model needs mu > 0");
    if (!(model.ell >= Real(1))) throw std::invalid_argument("cost model needs ell >= 1");
    return cost_real(model.method, model.dd, Real(model.m), model.mu, model.ell);
}

Real cei(const Real& rho, const Real& cost_value) {
    if (!(cost_value > Real(0))) throw std::invalid_argument("cei: cost must be positive");
    return pow(rho, Real(1) / cost_value);
}

Real time_factor(const Real& cei_value) {
    if (!(cei_value > Real(1))) throw std::invalid_argument("time factor needs CEI > 1");
    return Real(1) / log10(cei_value);
}

Real ratio(const RatedModel& a, const RatedModel& b) {
    if (a.model.m != b.model.m || a.model.mu != b.model.mu || a.model.ell != b.model.ell) {
        throw std::invalid_argument("ratio: models must share (m, mu, ell)");
    }
    return log(Real(a.order)) * cost(b.model) / (log(Real(b.order)) * cost(a.model));
}

Real comparison_ratio(const Comparison& pair, const Real& m, const Real& mu, const Real& ell) {
    const Real c1 = cost_real(pair.first.method, pair.first.dd, m, mu, ell);
    const Real c2 = cost_real(pair.second.method, pair.second.dd, m, mu, ell);
    return log(Real(pair.first.order)) * c2 / (log(Real(pair.second.order)) * c1);
}

Real comparison_ratio(const Comparison& pair, int m, const Real& mu, const Real& ell) {
    return comparison_ratio(pair, Real(m), mu, ell);
}

std::string_view to_string(Region region) noexcept {
    switch (region) {
        case Region::FirstWins: return "first_wins";
        case Region::SecondWins: return "second_wins";
        case Region::Boundary: return "boundary";
    }
    return "?";
}

Region classify_region(const Comparison& pair, const Real& m, const Real& mu, const Real& ell) {
    return region_of(comparison_ratio(pair, m, mu, ell));
}

Region classify_region(const Comparison& pair, int m, const Real& mu, const Real& ell) {
    return classify_region(pair, Real(m), mu, ell);
}

std::string_view to_string(BoundaryCurve curve) noexcept {
    switch (curve) {
        case BoundaryCurve::G20: return "g20";
        case BoundaryCurve::G22: return "g22";
        case BoundaryCurve::G11: return "g11";
    }
    return "?";
}

BoundaryCurve parse_boundary_curve(std::string_view name) {
    if (name == "g20") return BoundaryCurve::G20;
    if (name == "g22") return BoundaryCurve::G22;
    if (name == "g11") return BoundaryCurve::G11;
    throw std::invalid_argument("unknown boundary curve '" + std::string(name) + "'");
}

Comparison comparison_for(BoundaryCurve curve) noexcept {
    switch (curve) {
        case BoundaryCurve::G20: return comparisons::kPhi2D2VsPhi0;
        case BoundaryCurve::G22: return comparisons::kPhi2D2VsPhi2D1;
        case BoundaryCurve::G11: return comparisons::kPhi1D2VsPhi1D1;
    }
    return comparisons::kPhi2D2VsPhi0;
}

Real boundary_g(BoundaryCurve curve, const Real& m, const Real& ell, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    const Real q = log(Real(3) / Real(2));
    const Real r = log(Real(8) / Real(3));
    const Real s = log(Real(4) / Real(3));
    const Real t = log(Real(2));
    const Real m2 = m * m;

    Real numerator;
    Real denominator;
    switch (curve) {
        case BoundaryCurve::G20:
            numerator = Real(2) * q * m2 + Real(3) * (Real(3) * q * ell - r) * m - Real(3) * r * ell -
                        (Real(2) * q - Real(3) * r);
            denominator = Real(3) * (Real(2) * r * m - (Real(7) * q + Real(3) * r));
            break;
        case BoundaryCurve::G22:
            numerator = Real(2) * q * m2 + Real(3) * q * (Real(3) * ell + Real(2)) * m + Real(6) * q * ell -
                        Real(8) * q;
            denominator = Real(3) * (Real(2) * r * m - (Real(5) * q + Real(2) * r));
            break;
        case BoundaryCurve::G11:
            numerator = Real(2) * s * m2 + Real(3) * s * (Real(3) * ell + Real(1)) * m + Real(3) * s * ell -
                        Real(5) * s;
            denominator = Real(12) * ((t - s) * m - t);
            break;
    }
    if (abs(denominator) < ctx.eps_machine()) {
        throw PoleAtAsymptote("boundary curve " + std::string(to_string(curve)) + " has a pole at m = " +
                              to_string(m, 12));
    }
    return numerator / denominator;
}

Real boundary_asymptote(BoundaryCurve curve) {
    const Real q = log(Real(3) / Real(2));
    const Real r = log(Real(8) / Real(3));
    const Real s = log(Real(4) / Real(3));
    const Real t = log(Real(2));
    switch (curve) {
        case BoundaryCurve::G20: return (Real(7) * q + Real(3) * r) / (Real(2) * r);
        case BoundaryCurve::G22: return (Real(5) * q + Real(2) * r) / (Real(2) * r);
        case BoundaryCurve::G11: return t / (t - s);
    }
    return {};
}

Real mu_balance_root(const Comparison& pair, const Real& lo, const Real& hi, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    const Real log_first = log(Real(pair.first.order));
    const Real log_second = log(Real(pair.second.order));
    auto coefficient = [&](const Real& m) {
        return log_first * evaluations_real(pair.second.method, pair.second.dd, m) -
               log_second * evaluations_real(pair.first.method, pair.first.dd, m);
    };
    Real a = lo;
    Real b = hi;
    Real fa = coefficient(a);
    if (fa.sign() * coefficient(b).sign() > 0) {
        throw std::invalid_argument("mu_balance_root: no sign change on the bracket");
    }
    const Real tol = ctx.check_tolerance();
    while (b - a > tol) {
        Real mid = (a + b) / Real(2);
        Real fm = coefficient(mid);
        if (fm.is_zero()) return mid;
        if (fm.sign() == fa.sign()) {
            a = std::move(mid);
            fa = std::move(fm);
        } else {
            b = std::move(mid);
        }
    }
    return (a + b) / Real(2);
}

std::string_view to_string(ElementaryOp op) noexcept {
    switch (op) {
        case ElementaryOp::Product: return "product";
        case ElementaryOp::Quotient: return "quotient";
        case ElementaryOp::Sqrt: return "sqrt";
        case ElementaryOp::Exp: return "exp";
        case ElementaryOp::Ln: return "ln";
        case ElementaryOp::Sin: return "sin";
        case ElementaryOp::Cos: return "cos";
        case ElementaryOp::Arctan: return "arctan";
    }
    return "?";
}

ElementaryCostTable ElementaryCostTable::mpfr_4096() {
    ElementaryCostTable table;
    table.cost.emplace(ElementaryOp::Product, Real(1));
    table.cost.emplace(ElementaryOp::Quotient, Real("2.5"));
    table.cost.emplace(ElementaryOp::Sqrt, Real("1.7"));
    table.cost.emplace(ElementaryOp::Exp, Real("87.8"));
    table.cost.emplace(ElementaryOp::Ln, Real(66));
    table.cost.emplace(ElementaryOp::Sin, Real(116));
    table.cost.emplace(ElementaryOp::Cos, Real(113));
    table.cost.emplace(ElementaryOp::Arctan, Real(228));
    return table;
}

Real estimate_mu(const UsageProfile& usage, const ElementaryCostTable& table, int m) {
    if (m < 1) throw std::invalid_argument("estimate_mu: m must be positive");
    Real total;
    for (const auto& [op, count] : usage) {
        if (count < 0) throw std::invalid_argument("estimate_mu: negative operation count");
        const auto it = table.cost.find(op);
        if (it == table.cost.end()) throw std::invalid_argument("estimate_mu: no cost for " + std::string(to_string(op)));
        total += Real(count) * it->second;
    }
    return total / Real(m);
}

}  // namespace ostro
