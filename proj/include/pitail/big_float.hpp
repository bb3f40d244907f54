#pragma once

#include "pitail/rational.hpp"

#include <cstdarg>
#include <cstdio>

#include <mpfr.h>

#include <string>

namespace pitail {

/// RAII wrapper around one mpfr_t. Precision is explicit at every
/// construction site; there is no ambient default. Arithmetic on the
/// numeric path goes through raw() so rounding stays visible at the
/// call site; this class only owns storage and conversions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(const Rational& x, mpfr_prec_t prec);
    BigFloat(long x, mpfr_prec_t prec);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const;

    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }

    bool is_zero() const;
    int sign() const;
    /// Exponent e with |x| in [2^{e-1}, 2^e); requires a nonzero finite value.
    long exponent() const;

    /// Exact conversion to a rational (requires a finite value).
    Rational to_rational() const;
    double to_double() const;

    /// Round-to-nearest decimal rendering with the given number of
    /// significant digits; 0 means every digit the precision carries.
    std::string to_decimal(size_t digits = 0) const;

    /// Decimal digits fully determined by a given binary precision.
    static size_t decimal_digits(mpfr_prec_t prec);

private:
    mpfr_t value_;
};

} // namespace pitail
