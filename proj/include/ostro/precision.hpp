#pragma once

#include "ostro/real.hpp"

namespace ostro {

/// Working-precision configuration for a solve.
///
/// Precision is given in decimal digits of mantissa. Derived quantities:
/// `eps_machine() == 10^-digits` and `check_tolerance() == 10^-(digits/2)`,
/// the latter used for identity checks such as the secant condition.
class PrecisionContext {
public:
    static constexpr int kMinDigits = 32;
    static constexpr int kDefaultDigits = 4096;

    explicit PrecisionContext(int digits = kDefaultDigits);

    int digits() const noexcept { return digits_; }
    mpfr_prec_t bits() const noexcept { return bits_; }
    const Real& eps_machine() const noexcept { return eps_machine_; }
    const Real& check_tolerance() const noexcept { return check_tolerance_; }

    /// Looser tolerance for comparisons against quadrature-based oracles, 10^-(digits/8).
    Real oracle_tolerance() const;

private:
    int digits_;
    mpfr_prec_t bits_;
    Real eps_machine_;
    Real check_tolerance_;
};

/// Sets the thread's working precision for its lifetime and restores the previous one.
class PrecisionScope {
public:
    explicit PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.bits()) {}
    explicit PrecisionScope(mpfr_prec_t bits) : saved_(working_precision_bits()) { set_working_precision_bits(bits); }
    ~PrecisionScope() { set_working_precision_bits(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

}  // namespace ostro
