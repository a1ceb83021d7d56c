#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string_view>

#include "ostro/divided_difference.hpp"
#include "ostro/linalg.hpp"
#include "ostro/methods.hpp"

namespace ostro {

/// Cost per iteration in product units: C = a(m) mu + products + ell * quotients.
struct CostModel {
    int m = 2;
    Real mu;
    Real ell;
    MethodKind method = MethodKind::Phi0;
    DividedDifferenceKind dd = DividedDifferenceKind::D1;
};

/// A cost model with the order it is credited with.
struct RatedModel {
    CostModel model;
    int order = 2;
};

/// Scalar evaluations per iteration a(m). Phi0 ignores `dd`.
std::uint64_t evaluations_per_iteration(MethodKind method, DividedDifferenceKind dd, int m);
/// Products per iteration in the cost formula (no quotients).
std::uint64_t products_per_iteration(MethodKind method, int m);
/// Quotients per iteration in the cost formula.
std::uint64_t quotients_per_iteration(MethodKind method, int m);

/// Operations a solve actually records per iteration.
///
/// For D1 these equal the cost formula. Every D2 operator additionally
/// records m^2 products for its halving, and Phi0 with D2 evaluates a fresh
/// D2 central operator (2m^2 + m evaluations).
OpCounters expected_counters(MethodKind method, DividedDifferenceKind dd, int m);

/// Throws std::invalid_argument unless m >= 2, mu > 0 and ell >= 1.
Real cost(const CostModel& model);

/// rho^(1/C)
Real cei(const Real& rho, const Real& cost_value);
/// 1 / log10(cei)
Real time_factor(const Real& cei_value);
/// log CEI_a / log CEI_b = log(rho_a) C_b / (log(rho_b) C_a). Throws unless (m, mu, ell) agree.
Real ratio(const RatedModel& a, const RatedModel& b);

/// One method credited with an order, as compared in the efficiency theorems.
struct Contender {
    MethodKind method;
    DividedDifferenceKind dd;
    int order;
};

struct Comparison {
    Contender first;
    Contender second;
};

namespace comparisons {
// Full-order D1 family.
inline constexpr Comparison kPhi2VsPhi1{{MethodKind::Phi2, DividedDifferenceKind::D1, 6},
                                        {MethodKind::Phi1, DividedDifferenceKind::D1, 4}};
inline constexpr Comparison kPhi1VsPhi0{{MethodKind::Phi1, DividedDifferenceKind::D1, 4},
                                        {MethodKind::Phi0, DividedDifferenceKind::D1, 2}};
// D2 against D2, D0 or the degraded D1 variants.
inline constexpr Comparison kPhi2D2VsPhi1D2{{MethodKind::Phi2, DividedDifferenceKind::D2, 6},
                                            {MethodKind::Phi1, DividedDifferenceKind::D2, 4}};
inline constexpr Comparison kPhi1D2VsPhi0{{MethodKind::Phi1, DividedDifferenceKind::D2, 4},
                                          {MethodKind::Phi0, DividedDifferenceKind::D1, 2}};
inline constexpr Comparison kPhi2D2VsPhi0{{MethodKind::Phi2, DividedDifferenceKind::D2, 6},
                                          {MethodKind::Phi0, DividedDifferenceKind::D1, 2}};
inline constexpr Comparison kPhi2D2VsPhi2D1{{MethodKind::Phi2, DividedDifferenceKind::D2, 6},
                                            {MethodKind::Phi2, DividedDifferenceKind::D1, 4}};
inline constexpr Comparison kPhi1D2VsPhi1D1{{MethodKind::Phi1, DividedDifferenceKind::D2, 4},
                                            {MethodKind::Phi1, DividedDifferenceKind::D1, 3}};
}  // namespace comparisons

/// R_{first,second} at (m, mu, ell).
Real comparison_ratio(const Comparison& pair, int m, const Real& mu, const Real& ell);
/// Same with real-valued m, used along boundary curves.
Real comparison_ratio(const Comparison& pair, const Real& m, const Real& mu, const Real& ell);

enum class Region { FirstWins, SecondWins, Boundary };
std::string_view to_string(Region region) noexcept;

/// Which CEI is larger; Boundary when |R - 1| <= 1e-12.
Region classify_region(const Comparison& pair, int m, const Real& mu, const Real& ell);
Region classify_region(const Comparison& pair, const Real& m, const Real& mu, const Real& ell);

/// Boundary curves mu = G(m, ell) on which R = 1.
enum class BoundaryCurve {
    G20,  // Phi2 with D2 against Phi0
    G22,  // Phi2 with D2 against Phi2 with D1
    G11,  // Phi1 with D2 against Phi1 with D1
};
std::string_view to_string(BoundaryCurve curve) noexcept;
/// Throws std::invalid_argument for unknown names ("g20", "g22", "g11").
BoundaryCurve parse_boundary_curve(std::string_view name);
Comparison comparison_for(BoundaryCurve curve) noexcept;

/// Closed-form boundary value; throws PoleAtAsymptote when the denominator vanishes to eps.
Real boundary_g(BoundaryCurve curve, const Real& m, const Real& ell, const PrecisionContext& ctx);
/// Location of the vertical asymptote in m, from the closed form.
Real boundary_asymptote(BoundaryCurve curve);

/// Positive m where the mu coefficient of log(rho_1) C_2 - log(rho_2) C_1 vanishes,
/// found by bisection on [lo, hi]; this is the vertical asymptote of the R = 1 curve.
Real mu_balance_root(const Comparison& pair, const Real& lo, const Real& hi, const PrecisionContext& ctx);

enum class ElementaryOp { Product, Quotient, Sqrt, Exp, Ln, Sin, Cos, Arctan };
inline constexpr std::array<ElementaryOp, 8> kElementaryOps{
    ElementaryOp::Product, ElementaryOp::Quotient, ElementaryOp::Sqrt, ElementaryOp::Exp,
    ElementaryOp::Ln,      ElementaryOp::Sin,      ElementaryOp::Cos,  ElementaryOp::Arctan};
std::string_view to_string(ElementaryOp op) noexcept;

/// Cost of elementary functions in product units at 4096 digits.
struct ElementaryCostTable {
    std::map<ElementaryOp, Real> cost;

    static ElementaryCostTable mpfr_4096();
};

/// Elementary operations in one full evaluation of F.
using UsageProfile = std::map<ElementaryOp, int>;

/// (sum of count * cost) / m
Real estimate_mu(const UsageProfile& usage, const ElementaryCostTable& table, int m);

}  // namespace ostro
