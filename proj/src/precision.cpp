#include "ostro/precision.hpp"

#include <stdexcept>
#include <string>

namespace ostro {
namespace {

int checked_digits(int digits) {
    if (digits < PrecisionContext::kMinDigits) {
        throw std::invalid_argument("precision must be at least " + std::to_string(PrecisionContext::kMinDigits) +
                                    " digits, got " + std::to_string(digits));
    }
    return digits;
}

Real pow10_at(mpfr_prec_t bits, long e) {
    PrecisionScope scope(bits);
    return Real::pow10(e);
}

}  // namespace

PrecisionContext::PrecisionContext(int digits)
    : digits_(checked_digits(digits)),
      bits_(bits_for_digits(digits_)),
      eps_machine_(pow10_at(bits_, -digits_)),
      check_tolerance_(pow10_at(bits_, -(digits_ / 2))) {}

Real PrecisionContext::oracle_tolerance() const { return pow10_at(bits_, -(digits_ / 8)); }

}  // namespace ostro
