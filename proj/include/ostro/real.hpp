#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ostro {

/// Binary precision (bits) that newly created scalars receive on this thread.
mpfr_prec_t working_precision_bits() noexcept;
void set_working_precision_bits(mpfr_prec_t bits) noexcept;

/// Bits needed to carry `digits` decimal digits, plus guard bits.
mpfr_prec_t bits_for_digits(int digits) noexcept;

/// Multiprecision real backed by an MPFR value.
///
/// A value takes the thread's working precision when created; the result of
/// every arithmetic operation is rounded to the working precision current at
/// the time of the operation.
class Real {
public:
    Real();
    Real(int v);  // NOLINT(google-explicit-constructor)
    Real(long v);  // NOLINT(google-explicit-constructor)
    Real(double v);  // NOLINT(google-explicit-constructor)
    /// Parses a decimal literal ("1.5", "-2.1e-3"); throws std::invalid_argument.
    explicit Real(std::string_view decimal);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
    int sign() const noexcept { return mpfr_sgn(value_); }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    friend bool operator==(const Real& a, const Real& b) noexcept { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;

    /// 10^e rounded to working precision.
    static Real pow10(long e);

private:
    mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real floor(const Real& x);
Real pi();

/// Scientific decimal string with `digits` significant digits, e.g. "-2.15e-3".
/// With digits == 0, enough digits to round-trip the value's binary precision.
std::string to_string(const Real& x, std::size_t digits = 0);

/// Fixed-point decimal string rounded to `decimals` places, e.g. "3223.0".
std::string to_fixed(const Real& x, int decimals);

}  // namespace ostro
