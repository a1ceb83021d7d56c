#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "ostro/precision.hpp"
#include "ostro/trace.hpp"

namespace ostro {

/// Root-free order estimate ln E_I / ln E_{I-1} from the last two correction ratios.
struct OrderEstimate {
    Real acoc;
    std::size_t last_index = 0;      // I, index of the iterate whose ratio E_I was used
    std::size_t previous_index = 0;  // I - 1
    /// |acoc(I) - acoc(I-1)| when a third ratio exists. Informal stability
    /// indicator only, not an error bound.
    std::optional<Real> spread;
};

/// Estimate from the trailing ratios of a trace.
/// Throws InsufficientTrace with fewer than 4 iterates and NonContractingTrace
/// when a ratio used is outside (0, 1).
OrderEstimate acoc(const IterationTrace& trace);

/// Same estimate from a bare ratio sequence E_2 .. E_I.
OrderEstimate acoc_from_ratios(std::span<const Real> ratios);

/// Digit threshold (rho - 1) / rho^2 * digits for the root-free stopping test.
double eta(double rho, int epsilon_digits);

/// 0.5 * 10^-eta computed in working precision from the exact rational eta.
Real stopping_threshold(int rho, int epsilon_digits, const PrecisionContext& ctx);

/// floor(-log10 ||x - alpha||_inf), clamped to [0, ctx.digits()].
int correct_decimals(const Vector& x, const Vector& alpha_ref, const PrecisionContext& ctx);

/// As above; throws MissingReferenceRoot when no reference root is available.
int correct_decimals(const Vector& x, const std::optional<Vector>& alpha_ref, const PrecisionContext& ctx);

}  // namespace ostro
