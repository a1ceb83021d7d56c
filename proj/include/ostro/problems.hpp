#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ostro/efficiency.hpp"
#include "ostro/methods.hpp"
#include "ostro/system.hpp"

namespace ostro {

/// A published result row: (method, operator) with its reported values.
struct PublishedRow {
    MethodKind method;
    DividedDifferenceKind dd;
    int iterations;
    std::string cost;   // printed to one decimal
    std::string cei;    // printed to nine decimals
    std::string time_factor;  // printed to two decimals
    int order;
    int correct_decimals;
};

/// A registered benchmark problem.
///
/// New problems are added by writing a factory next to the existing ones in
/// problems.cpp and listing it in `problem_registry()`.
struct ProblemSpec {
    std::string name;
    std::string description;
    NonlinearSystem system;
    std::vector<std::string> x0;
    std::string mu_published;
    /// Elementary operations in one full evaluation of F.
    UsageProfile usage;
    /// Leading digits of the root as printed, one string per coordinate.
    std::vector<std::string> root_prefix;
    /// True when the system has no mixed second partials, so D1 keeps full order.
    bool d1_preserves_order = false;
    std::vector<PublishedRow> published;

    std::size_t dimension() const noexcept { return system.dimension(); }
    Vector start(const PrecisionContext& ctx) const;
    const PublishedRow* published_row(MethodKind method, DividedDifferenceKind dd) const noexcept;
};

/// exp5: five coupled exponential equations.
ProblemSpec make_exp5();
/// quad2: x1^2 + x2^2 - 9, x1 x2 - 1.
ProblemSpec make_quad2();
/// cos3: x_i - cos(2 x_i - sum_j x_j), m = 3.
ProblemSpec make_cos3();

const std::vector<std::string>& problem_names();
/// Throws std::invalid_argument for unknown names.
ProblemSpec find_problem(std::string_view name);

/// Root at `digits` computed by Phi2/D2 at twice the digits and twice eta, cached per (problem, digits).
Vector reference_root(const ProblemSpec& problem, const PrecisionContext& ctx);

}  // namespace ostro
