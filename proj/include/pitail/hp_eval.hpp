#pragma once

#include "pitail/big_float.hpp"
#include "pitail/catalog.hpp"
#include "pitail/rational.hpp"

namespace pitail {

/// Exact (1/2)_n (q)_n (1-q)_n / (n!)^3.
Rational pochhammer_prefactor(const Rational& q, unsigned long n);

/// Exact series term u_k = pochhammer_prefactor(q, k) * (r + s k) * t^k.
Rational series_term(const SeriesParams& params, unsigned long k);

/// Exact normalizing prefactor for the remainder: pochhammer_prefactor * n * t^n.
Rational remainder_prefactor(const SeriesParams& params, unsigned long n);

/// Exact S_n = sum_{k=0..n} u_k.
Rational partial_sum(const SeriesParams& params, unsigned long n);

/// Incremental exact evaluation state: term, prefactor and partial sum at
/// index k, advanced one term at a time in O(1) rational operations.
class TermStream {
public:
    explicit TermStream(const SeriesParams& params);

    void advance();

    unsigned long index() const { return k_; }
    const Rational& prefactor() const { return pf_; }
    const Rational& term() const { return term_; }
    const Rational& sum() const { return sum_; }

private:
    SeriesParams params_;
    unsigned long k_ = 0;
    Rational pf_;
    Rational term_;
    Rational sum_;
    Rational tpow_;
};

/// A reference value carried as an exact rational plus a certified bound:
/// the true quantity lies within [value - abs_error, value + abs_error].
struct ApproxReal {
    Rational value;
    Rational abs_error;
};

/// Certified enclosure of p/pi at working precision: abs_error <=
/// |value| * 2^{4-work_bits}. The 1/pi core is tail-summed from the
/// fastest catalog series with an explicit geometric tail bound; partial
/// sums are cached and extended across calls. Throws resource_error if
/// the tail summation would exceed the term cap.
ApproxReal reference_enclosure(const SeriesParams& params, long work_bits);

/// p/pi rounded to prec bits; total error at most 4 ulp.
BigFloat reference_value(const SeriesParams& params, mpfr_prec_t prec);

/// pi itself at the given precision (same series-driven core).
BigFloat pi_value(mpfr_prec_t prec);

/// Certified enclosure of R_n = p/pi - S_n with abs_error <=
/// |value| * 2^{-(target_bits+1)}, i.e. at least target_bits significant
/// bits survive the cancellation. Escalates internal precision as needed.
ApproxReal remainder_enclosure(const SeriesParams& params, unsigned long n,
                               long target_bits);

/// R_n rounded to prec bits, carrying >= prec significant bits.
BigFloat remainder(const SeriesParams& params, unsigned long n, mpfr_prec_t prec);

/// Direct evaluation of the log of the normalized prefactor:
/// ln(pochhammer_prefactor(q, n) * (pi n)^{3/2} / sin(pi q)).
BigFloat log_prefactor_direct(const Rational& q, unsigned long n, mpfr_prec_t prec);

/// One row of an order-of-error study at a single n (built in analysis).
struct RemainderReport {
    int series_id = 0;
    unsigned long n = 0;
    unsigned long J = 0;
    BigFloat remainder_value;  // R_n
    BigFloat prefactor_value;  // the exact normalizer, rendered
    BigFloat ratio;            // R_n / normalizer
    BigFloat expansion;        // sum_{j<J} c_j / n^j
    BigFloat abs_error;        // |ratio - expansion|
    BigFloat scaled_error;     // abs_error * n^J

    RemainderReport()
        : remainder_value(8), prefactor_value(8), ratio(8), expansion(8),
          abs_error(8), scaled_error(8) {}
};

} // namespace pitail
