#include "pitail/hp_eval.hpp"

#include "pitail/errors.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace pitail {

namespace {

constexpr unsigned long kTermCap = 1000000;

void require_q_range(const Rational& q) {
    if (sgn(q) <= 0 || q >= 1) throw std::domain_error("q must satisfy 0 < q < 1");
}

} // namespace

Rational pochhammer_prefactor(const Rational& q, unsigned long n) {
    require_q_range(q);
    Rational pf = 1;
    const Rational half(1, 2), q2 = 1 - q;
    for (unsigned long i = 0; i < n; ++i) {
        Rational k(i);
        pf *= (half + k) * (q + k) * (q2 + k);
        pf /= pow_int(Rational(i + 1), 3);
    }
    return pf;
}

Rational series_term(const SeriesParams& params, unsigned long k) {
    Rational linear = Rational(params.r) + Rational(params.s) * Rational(k);
    return pochhammer_prefactor(params.q, k) * linear *
           pow_int(params.t, static_cast<long>(k));
}

Rational remainder_prefactor(const SeriesParams& params, unsigned long n) {
    if (n == 0) throw std::domain_error("n must be positive");
    return pochhammer_prefactor(params.q, n) * Rational(n) *
           pow_int(params.t, static_cast<long>(n));
}

Rational partial_sum(const SeriesParams& params, unsigned long n) {
    TermStream stream(params);
    while (stream.index() < n) stream.advance();
    return stream.sum();
}

TermStream::TermStream(const SeriesParams& params)
    : params_(params), pf_(1), term_(params.r), sum_(params.r), tpow_(1) {
    require_q_range(params_.q);
}

void TermStream::advance() {
    Rational k(k_);
    pf_ *= (Rational(1, 2) + k) * (params_.q + k) * (1 - params_.q + k);
    pf_ /= pow_int(Rational(k_ + 1), 3);
    ++k_;
    tpow_ *= params_.t;
    Rational linear = Rational(params_.r) + Rational(params_.s) * Rational(k_);
    term_ = pf_ * linear * tpow_;
    sum_ += term_;
}

namespace {

// The 1/pi core series: the catalog's fastest-converging entry. Partial
// sums are exact and extended monotonically under a lock, so every caller
// sees a certified snapshot regardless of thread interleaving.
constexpr int kPiSeriesId = 7;

struct PiCoreState {
    std::mutex mutex;
    std::unique_ptr<TermStream> stream;
};

PiCoreState& pi_core() {
    static PiCoreState state;
    return state;
}

// Upper bound on |u_{k+1}/u_k| from index k on: the Pochhammer step factor
// is below 1, the linear factor is at most 1 + s/(r + s k), so the ratio is
// bounded by (1 + s/(r + s k)) |t| < 1 once k is large enough.
Rational step_ratio_bound(const SeriesParams& params, unsigned long k) {
    Rational linear_growth =
        1 + Rational(params.s) / (Rational(params.r) + Rational(params.s) * Rational(k));
    return linear_growth * abs(params.t);
}

// Exact snapshot (sum, tail_bound) of the 1/pi core with
// tail_bound <= |sum| * 2^{-(work_bits+16)}.
void pi_series_snapshot(long work_bits, Rational& sum_out, Rational& tail_out) {
    const SeriesParams& core = series_by_id(kPiSeriesId);
    PiCoreState& state = pi_core();
    std::lock_guard<std::mutex> lock(state.mutex);
    if (!state.stream) {
        state.stream = std::make_unique<TermStream>(core);
        state.stream->advance();
    }
    TermStream& ts = *state.stream;
    const Rational eps = pow2(-(work_bits + 16));
    for (;;) {
        Rational rho = step_ratio_bound(core, ts.index());
        Rational tail = abs(ts.term()) * rho / (1 - rho);
        if (tail <= abs(ts.sum()) * eps) {
            sum_out = ts.sum();
            tail_out = tail;
            return;
        }
        if (ts.index() >= kTermCap)
            throw resource_error("tail summation exceeded the term cap");
        ts.advance();
    }
}

} // namespace

ApproxReal reference_enclosure(const SeriesParams& params, long work_bits) {
    if (work_bits < 64) work_bits = 64;
    Rational core_sum, core_tail;
    pi_series_snapshot(work_bits, core_sum, core_tail);
    const SeriesParams& core = series_by_id(kPiSeriesId);

    // p/pi = p.coeff sqrt(p.radicand) * core_sum / (core.p.coeff sqrt(core.p.radicand))
    //      = (p.coeff core_sum / (core.p.coeff * core.p.radicand))
    //        * sqrt(p.radicand * core.p.radicand)
    Rational scaled = params.p.coeff * core_sum /
                      (core.p.coeff * Rational(core.p.radicand));
    Integer cross = Integer(params.p.radicand) * Integer(core.p.radicand);

    BigFloat a(static_cast<mpfr_prec_t>(work_bits));
    BigFloat b(static_cast<mpfr_prec_t>(work_bits));
    mpfr_set_q(a.raw(), scaled.get_mpq_t(), MPFR_RNDN);
    mpfr_set_z(b.raw(), cross.get_mpz_t(), MPFR_RNDN); // exact: fits well below work_bits
    mpfr_sqrt(b.raw(), b.raw(), MPFR_RNDN);
    mpfr_mul(a.raw(), a.raw(), b.raw(), MPFR_RNDN);

    // Three roundings of 2^{-work_bits} relative each, plus the series tail
    // at 2^{-(work_bits+16)} relative: 2^{4-work_bits} covers it with margin.
    Rational value = a.to_rational();
    Rational err = abs(value) * pow2(4 - work_bits);
    if (value == 0) err = pow2(4 - work_bits);
    return {value, err};
}

BigFloat reference_value(const SeriesParams& params, mpfr_prec_t prec) {
    if (prec < 64) throw std::domain_error("precision must be at least 64 bits");
    ApproxReal ref = reference_enclosure(params, static_cast<long>(prec) + 64);
    return BigFloat(ref.value, prec);
}

BigFloat pi_value(mpfr_prec_t prec) {
    const long work = static_cast<long>(prec) + 32;
    Rational core_sum, core_tail;
    pi_series_snapshot(work, core_sum, core_tail);
    const SeriesParams& core = series_by_id(kPiSeriesId);

    // pi = core.p.coeff * sqrt(core.p.radicand) / core_sum
    BigFloat a(static_cast<mpfr_prec_t>(work));
    BigFloat b(static_cast<mpfr_prec_t>(work));
    Rational scaled = core.p.coeff / core_sum;
    mpfr_set_q(a.raw(), scaled.get_mpq_t(), MPFR_RNDN);
    mpfr_set_ui(b.raw(), core.p.radicand, MPFR_RNDN);
    mpfr_sqrt(b.raw(), b.raw(), MPFR_RNDN);
    mpfr_mul(a.raw(), a.raw(), b.raw(), MPFR_RNDN);

    BigFloat out(prec);
    mpfr_set(out.raw(), a.raw(), MPFR_RNDN);
    return out;
}

ApproxReal remainder_enclosure(const SeriesParams& params, unsigned long n,
                               long target_bits) {
    if (target_bits < 64) target_bits = 64;
    const Rational sum_n = partial_sum(params, n);
    long magnitude = (sum_n != 0) ? std::max(0L, approx_exponent(sum_n)) : 0;
    long work = target_bits + 64 + magnitude;
    for (int iter = 0; iter < 64; ++iter) {
        ApproxReal ref = reference_enclosure(params, work);
        Rational rem = ref.value - sum_n;
        if (rem != 0 && ref.abs_error <= abs(rem) * pow2(-(target_bits + 1)))
            return {rem, ref.abs_error};
        long deficit;
        if (rem != 0) {
            deficit = approx_exponent(ref.abs_error) - approx_exponent(rem) +
                      target_bits + 1;
        } else {
            deficit = work; // remainder below current resolution: double up
        }
        work += std::max(deficit + 32, 64L);
    }
    throw precision_error("remainder enclosure did not converge");
}

BigFloat remainder(const SeriesParams& params, unsigned long n, mpfr_prec_t prec) {
    if (prec < 64) throw std::domain_error("precision must be at least 64 bits");
    ApproxReal rem = remainder_enclosure(params, n, static_cast<long>(prec));
    return BigFloat(rem.value, prec);
}

BigFloat log_prefactor_direct(const Rational& q, unsigned long n, mpfr_prec_t prec) {
    require_q_range(q);
    if (n == 0) throw std::domain_error("n must be positive");
    const long width = std::bit_width(n + 1);
    const mpfr_prec_t work =
        prec + 32 + static_cast<mpfr_prec_t>(2 * width);

    const Rational pf = pochhammer_prefactor(q, n);
    BigFloat pi = pi_value(work);

    BigFloat x(work), y(work), s(work);
    mpfr_mul_ui(x.raw(), pi.raw(), n, MPFR_RNDN);           // pi n
    mpfr_sqrt(y.raw(), x.raw(), MPFR_RNDN);
    mpfr_mul(x.raw(), x.raw(), y.raw(), MPFR_RNDN);         // (pi n)^{3/2}
    mpfr_mul_q(x.raw(), x.raw(), pf.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_q(s.raw(), pi.raw(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_sin(s.raw(), s.raw(), MPFR_RNDN);
    mpfr_div(x.raw(), x.raw(), s.raw(), MPFR_RNDN);
    mpfr_log(x.raw(), x.raw(), MPFR_RNDN);

    BigFloat out(prec);
    mpfr_set(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

} // namespace pitail
