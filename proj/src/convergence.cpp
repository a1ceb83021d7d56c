#include "ostro/convergence.hpp"

#include <stdexcept>
#include <string>

#include "ostro/errors.hpp"

namespace ostro {
namespace {

void require_contracting(const Real& ratio, std::size_t index) {
    if (!(ratio > Real(0)) || !(ratio < Real(1))) {
        throw NonContractingTrace("ratio E_" + std::to_string(index) + " = " + to_string(ratio, 6) +
                                  " is outside (0, 1)");
    }
}

}  // namespace

OrderEstimate acoc_from_ratios(std::span<const Real> ratios) {
    if (ratios.size() < 2) throw InsufficientTrace("order estimate needs at least two correction ratios");
    const std::size_t n = ratios.size();
    // ratios[k] is E_{k+2}
    const Real& last = ratios[n - 1];
    const Real& previous = ratios[n - 2];
    require_contracting(last, n + 1);
    require_contracting(previous, n);

    OrderEstimate est;
    est.acoc = log(last) / log(previous);
    est.last_index = n + 1;
    est.previous_index = n;
    if (n >= 3) {
        const Real& before = ratios[n - 3];
        if (before > Real(0) && before < Real(1)) est.spread = abs(est.acoc - log(previous) / log(before));
    }
    return est;
}

OrderEstimate acoc(const IterationTrace& trace) {
    if (trace.iterates.size() < 4) {
        throw InsufficientTrace("order estimate needs at least 4 iterates, trace has " +
                                std::to_string(trace.iterates.size()));
    }
    return acoc_from_ratios(trace.ratios);
}

double eta(double rho, int epsilon_digits) {
    if (rho < 2) throw std::invalid_argument("eta: order must be at least 2");
    return (rho - 1.0) / (rho * rho) * epsilon_digits;
}

Real stopping_threshold(int rho, int epsilon_digits, const PrecisionContext& ctx) {
    if (rho < 2) throw std::invalid_argument("stopping threshold: order must be at least 2");
    PrecisionScope scope(ctx);
    const Real eta_value = Real(static_cast<long>(rho - 1) * epsilon_digits) / Real(rho * rho);
    return pow(Real(10), -eta_value) / Real(2);
}

int correct_decimals(const Vector& x, const Vector& alpha_ref, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    const Real err = inf_norm(x - alpha_ref);
    if (err.is_zero()) return ctx.digits();
    const Real q = floor(-log10(err));
    if (q < Real(0)) return 0;
    if (q > Real(ctx.digits())) return ctx.digits();
    return static_cast<int>(q.to_double());
}

int correct_decimals(const Vector& x, const std::optional<Vector>& alpha_ref, const PrecisionContext& ctx) {
    if (!alpha_ref) throw MissingReferenceRoot("correct decimals need a reference root");
    return correct_decimals(x, *alpha_ref, ctx);
}

}  // namespace ostro
