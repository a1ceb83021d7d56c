#include "ostro/real.hpp"

#include <cmath>
#include <stdexcept>

namespace ostro {
namespace {

thread_local mpfr_prec_t g_working_bits = 256;

std::string take_mpfr_string(char* raw) {
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

}  // namespace

mpfr_prec_t working_precision_bits() noexcept { return g_working_bits; }

void set_working_precision_bits(mpfr_prec_t bits) noexcept { g_working_bits = bits; }

mpfr_prec_t bits_for_digits(int digits) noexcept {
    constexpr double kLog2Of10 = 3.32192809488736234787;
    return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 16;
}

Real::Real() {
    mpfr_init2(value_, g_working_bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
    mpfr_init2(value_, g_working_bits);
    mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(double v) {
    mpfr_init2(value_, g_working_bits);
    mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(std::string_view decimal) {
    mpfr_init2(value_, g_working_bits);
    std::string text(decimal);
    if (text.empty() || mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
}

Real::Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
            mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        }
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.value_, a.value_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

Real Real::pow10(long e) {
    Real r;
    const Real ten(10L);
    mpfr_pow_si(r.value_, ten.value_, e, MPFR_RNDN);
    return r;
}

Real abs(const Real& x) {
    Real r;
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r;
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r;
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r;
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log10(const Real& x) {
    Real r;
    mpfr_log10(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real cos(const Real& x) {
    Real r;
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real sin(const Real& x) {
    Real r;
    mpfr_sin(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& exponent) {
    Real r;
    mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
    return r;
}

Real floor(const Real& x) {
    Real r;
    mpfr_floor(r.get(), x.get());
    return r;
}

Real pi() {
    Real r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

std::string to_string(const Real& x, std::size_t digits) {
    if (mpfr_nan_p(x.get())) return "nan";
    if (mpfr_inf_p(x.get())) return x.sign() > 0 ? "inf" : "-inf";
    if (digits == 0) digits = mpfr_get_str_ndigits(10, x.precision());
    mpfr_exp_t exponent = 0;
    std::string mantissa = take_mpfr_string(mpfr_get_str(nullptr, &exponent, 10, digits, x.get(), MPFR_RNDN));
    if (x.is_zero()) return "0";
    std::string out;
    if (mantissa.front() == '-') {
        out.push_back('-');
        mantissa.erase(mantissa.begin());
    }
    // mpfr_get_str yields 0.DDDD * 10^exponent
    out.push_back(mantissa.front());
    if (mantissa.size() > 1) {
        out.push_back('.');
        out.append(mantissa, 1, std::string::npos);
    }
    out.push_back('e');
    out += std::to_string(static_cast<long>(exponent) - 1);
    return out;
}

std::string to_fixed(const Real& x, int decimals) {
    char* raw = nullptr;
    if (mpfr_asprintf(&raw, "%.*RNf", decimals, x.get()) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

}  // namespace ostro
