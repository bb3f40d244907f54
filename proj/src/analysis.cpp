#include "pitail/analysis.hpp"

#include "pitail/errors.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace pitail {

namespace {

template <typename Fn>
void parallel_for(size_t count, unsigned jobs, Fn&& fn) {
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    if (count < 2 || jobs < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    jobs = static_cast<unsigned>(std::min<size_t>(jobs, count));
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& worker : pool) worker.join();
    if (first_error) std::rethrow_exception(first_error);
}

double log10_ratio(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) return 0.0;
    long d = approx_exponent(a) - approx_exponent(b);
    if (d > 512 || d < -512) return static_cast<double>(d) * 0.30102999566398;
    Rational ratio = abs(a / b);
    return std::log10(mpq_get_d(ratio.get_mpq_t()));
}

} // namespace

Rational expansion_value(const CoeffTable& table, unsigned long n) {
    if (n == 0) throw std::domain_error("n must be positive");
    Rational acc = 0;
    const Rational nq(n);
    for (size_t j = table.c.size(); j-- > 0;) acc = acc / nq + table.c[j];
    return acc;
}

unsigned long optimal_truncation(const CoeffTable& table, unsigned long n) {
    if (table.J < 2) throw std::domain_error("need at least two coefficients");
    if (n == 0) throw std::domain_error("n must be positive");
    const Rational ninv = Rational(1) / Rational(n);
    Rational scale = 1, prev;
    bool have_prev = false;
    if (table.c[0] != 0) {
        prev = abs(table.c[0]);
        have_prev = true;
    }
    for (unsigned long j = 1; j < table.J; ++j) {
        scale *= ninv;
        if (table.c[j] == 0) continue;
        Rational cur = abs(table.c[j]) * scale;
        if (have_prev && cur >= prev) return j;
        prev = cur;
        have_prev = true;
    }
    return table.J;
}

std::string sign_pattern(const CoeffTable& table) {
    std::string out;
    out.reserve(table.c.size());
    for (const auto& c : table.c)
        if (c != 0) out.push_back(sgn(c) > 0 ? '+' : '-');
    return out;
}

RemainderReport remainder_report(const SeriesParams& params, unsigned long n,
                                 unsigned long J, mpfr_prec_t prec) {
    if (n == 0) throw std::domain_error("n must be positive");
    const CoeffTable table = remainder_expansion(params, J);
    const Rational normalizer = remainder_prefactor(params, n);
    const Rational expv = expansion_value(table, n);

    long target = static_cast<long>(prec);
    for (int iter = 0; iter < 64; ++iter) {
        ApproxReal rem = remainder_enclosure(params, n, target);
        Rational ratio = rem.value / normalizer;
        Rational ratio_err = rem.abs_error / abs(normalizer);
        Rational diff = abs(ratio - expv);
        if (diff != 0 && ratio_err * pow2(24) <= diff) {
            RemainderReport report;
            report.series_id = params.id;
            report.n = n;
            report.J = J;
            report.remainder_value = BigFloat(rem.value, prec);
            report.prefactor_value = BigFloat(normalizer, prec);
            report.ratio = BigFloat(ratio, prec);
            report.expansion = BigFloat(expv, prec);
            report.abs_error = BigFloat(diff, prec);
            report.scaled_error =
                BigFloat(diff * pow_int(Rational(n), static_cast<long>(J)), prec);
            return report;
        }
        long deficit = 64;
        if (diff != 0)
            deficit = approx_exponent(ratio_err) - approx_exponent(diff) + 24;
        target += std::max(deficit + 32, 64L);
    }
    throw precision_error("remainder report did not converge");
}

std::vector<RemainderReport> order_sweep(const SeriesParams& params,
                                         const std::vector<unsigned long>& n_list,
                                         unsigned long J, mpfr_prec_t prec,
                                         unsigned jobs) {
    if (n_list.empty()) throw std::domain_error("n list must not be empty");
    for (size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw std::domain_error("n list must be strictly ascending");

    std::vector<RemainderReport> reports(n_list.size());
    parallel_for(n_list.size(), jobs, [&](size_t i) {
        reports[i] = remainder_report(params, n_list[i], J, prec);
    });
    return reports;
}

AccelerationReport accelerate(const SeriesParams& params, unsigned long n,
                              std::optional<unsigned long> J, mpfr_prec_t prec) {
    if (n == 0) throw std::domain_error("n must be positive");
    constexpr unsigned long kScanDepth = 240;

    AccelerationReport report;
    report.series_id = params.id;
    report.n = n;
    report.conjectural = params.conjectural;
    report.auto_selected = !J.has_value();

    CoeffTable table;
    unsigned long J_used;
    if (J.has_value()) {
        J_used = *J;
        if (J_used > 0) table = remainder_expansion(params, J_used);
    } else {
        table = remainder_expansion(params, kScanDepth);
        J_used = optimal_truncation(table, n);
        table.J = J_used;
        table.c.resize(J_used);
    }
    report.J_used = J_used;

    const Rational sum_n = partial_sum(params, n);
    Rational corrected = sum_n;
    if (J_used > 0)
        corrected += remainder_prefactor(params, n) * expansion_value(table, n);

    long magnitude = (sum_n != 0) ? std::max(0L, approx_exponent(sum_n)) : 0;
    long work = static_cast<long>(prec) + 64 + magnitude;
    Rational ref_value, raw_err, corr_err;
    for (int iter = 0;; ++iter) {
        if (iter >= 64) throw precision_error("error measurement did not converge");
        ApproxReal ref = reference_enclosure(params, work);
        ref_value = ref.value;
        raw_err = abs(ref.value - sum_n);
        corr_err = abs(ref.value - corrected);
        if (raw_err != 0 && corr_err != 0 && ref.abs_error * 16 <= raw_err &&
            ref.abs_error * 16 <= corr_err) {
            long apparent = approx_exponent(ref_value) - approx_exponent(corr_err);
            if (apparent < 1) apparent = 1;
            if (work >= 3 * apparent + 16) break;
            work = 3 * apparent + 64;
            continue;
        }
        work += std::max(64L, work);
    }

    if (corr_err < abs(ref_value) * pow2(-static_cast<long>(prec)))
        throw precision_error(
            "increase precision: corrected estimate matches the reference "
            "beyond the requested precision");

    report.raw_estimate = BigFloat(sum_n, prec);
    report.corrected_estimate = BigFloat(corrected, prec);
    report.raw_error = BigFloat(raw_err, prec);
    report.corrected_error = BigFloat(corr_err, prec);
    report.digits_gained = log10_ratio(raw_err, corr_err);
    return report;
}

const char* to_string(EnvelopeStatus status) {
    switch (status) {
        case EnvelopeStatus::holds: return "holds";
        case EnvelopeStatus::violated: return "violated";
        case EnvelopeStatus::indeterminate: return "indeterminate";
    }
    return "unknown";
}

EnvelopeSummary envelope_check(unsigned long n_max, unsigned long L_max,
                               mpfr_prec_t prec, unsigned jobs, int series_id) {
    if (n_max == 0 || L_max == 0)
        throw std::domain_error("sweep bounds must be positive");
    const SeriesParams& params = series_by_id(series_id);

    EnvelopeSummary summary;
    summary.series_id = series_id;
    summary.exploratory = (series_id != 33);
    summary.n_max = n_max;
    summary.L_max = L_max;
    summary.prec = prec;

    const unsigned long coeff_count = 4 * L_max + 2;
    const CoeffTable table = remainder_expansion(params, coeff_count);
    const Rational threshold = pow2(-(static_cast<long>(prec) + 1));

    struct Column {
        Rational ratio_lo, ratio_hi;
        std::vector<Rational> prefix;  // prefix[j] = sum_{i<=j} c_i / n^i
    };
    std::vector<Column> columns(n_max);

    long extra = 96;
    for (int attempt = 0;; ++attempt) {
        const ApproxReal ref =
            reference_enclosure(params, static_cast<long>(prec) + extra);
        parallel_for(n_max, jobs, [&](size_t idx) {
            const unsigned long n = idx + 1;
            Column& col = columns[idx];
            const Rational sum_n = partial_sum(params, n);
            const Rational normalizer = remainder_prefactor(params, n);
            Rational lo = (ref.value - ref.abs_error - sum_n) / normalizer;
            Rational hi = (ref.value + ref.abs_error - sum_n) / normalizer;
            if (lo > hi) swap(lo, hi);
            col.ratio_lo = lo;
            col.ratio_hi = hi;
            col.prefix.assign(coeff_count, Rational(0));
            const Rational ninv = Rational(1) / Rational(n);
            Rational acc = 0, scale = 1;
            for (unsigned long j = 0; j < coeff_count; ++j) {
                if (j) scale *= ninv;
                acc += table.c[j] * scale;
                col.prefix[j] = acc;
            }
        });

        summary.cells.clear();
        summary.cells.reserve(L_max * n_max);
        summary.holds_count = summary.violated_count = summary.indeterminate_count = 0;
        bool precision_limited = false;
        for (unsigned long L = 1; L <= L_max; ++L) {
            for (unsigned long n = 1; n <= n_max; ++n) {
                const Column& col = columns[n - 1];
                const Rational& lower = col.prefix[4 * L - 1];
                const Rational& upper = col.prefix[4 * L + 1];
                const Rational low_gap = col.ratio_lo - lower;
                const Rational high_gap = upper - col.ratio_hi;

                EnvelopeCell cell;
                cell.L = L;
                cell.n = n;
                cell.lower = BigFloat(lower, prec);
                cell.upper = BigFloat(upper, prec);
                cell.ratio = BigFloat((col.ratio_lo + col.ratio_hi) / 2, prec);
                cell.margin = BigFloat(std::min(low_gap, high_gap), prec);
                if (low_gap > threshold && high_gap > threshold) {
                    cell.status = EnvelopeStatus::holds;
                    ++summary.holds_count;
                } else if (col.ratio_hi < lower - threshold ||
                           col.ratio_lo > upper + threshold) {
                    cell.status = EnvelopeStatus::violated;
                    ++summary.violated_count;
                } else {
                    cell.status = EnvelopeStatus::indeterminate;
                    ++summary.indeterminate_count;
                    if (col.ratio_hi - col.ratio_lo > threshold)
                        precision_limited = true;
                }
                summary.cells.push_back(std::move(cell));
            }
        }
        if (summary.indeterminate_count == 0 || !precision_limited || attempt >= 3)
            break;
        extra *= 4;
    }

    summary.all_hold =
        !summary.cells.empty() && summary.holds_count == summary.cells.size();
    return summary;
}

} // namespace pitail
