#include "pitail/rational.hpp"

#include <stdexcept>

namespace pitail {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& x) {
    return x.get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational pow_int(const Rational& x, long e) {
    if (e == 0)
        return 1;
    if (x == 0 && e < 0)
        throw std::domain_error("zero to a negative power");
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), mag);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), mag);
    if (e < 0)
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    r.canonicalize();
    return r;
}

Rational pow2(long e) {
    Rational r = 1;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

long approx_exponent(const Rational& x) {
    if (x == 0)
        throw std::domain_error("approx_exponent of zero");
    const long nb = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
    return nb - db;
}

} // namespace pitail
