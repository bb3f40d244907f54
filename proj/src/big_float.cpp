#include "pitail/big_float.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace pitail {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
}

BigFloat::BigFloat(const Rational& x, mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_q(value_, x.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long x, mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(value_);
}

mpfr_prec_t BigFloat::precision() const {
    return mpfr_get_prec(value_);
}

bool BigFloat::is_zero() const {
    return mpfr_zero_p(value_) != 0;
}

int BigFloat::sign() const {
    return mpfr_sgn(value_);
}

long BigFloat::exponent() const {
    if (!mpfr_regular_p(value_))
        throw std::domain_error("exponent of zero or non-finite value");
    return static_cast<long>(mpfr_get_exp(value_));
}

Rational BigFloat::to_rational() const {
    if (!mpfr_number_p(value_))
        throw std::domain_error("cannot convert non-finite value to rational");
    Rational out;
    mpfr_get_q(out.get_mpq_t(), value_);
    return out;
}

double BigFloat::to_double() const {
    return mpfr_get_d(value_, MPFR_RNDN);
}

size_t BigFloat::decimal_digits(mpfr_prec_t prec) {
    // floor(prec * log10(2)), at least 2 so tiny precisions still print.
    auto digits = static_cast<size_t>(static_cast<double>(prec) * 0.30102999566398);
    return digits < 2 ? 2 : digits;
}

std::string BigFloat::to_decimal(size_t digits) const {
    if (digits == 0) digits = decimal_digits(mpfr_get_prec(value_));
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), value_) < 0)
        throw std::runtime_error("mpfr formatting failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

} // namespace pitail
