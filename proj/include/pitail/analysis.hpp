#pragma once

#include "pitail/exact.hpp"
#include "pitail/hp_eval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pitail {

/// Exact value of the truncated expansion sum_{j<J} c_j / n^j at integer n.
Rational expansion_value(const CoeffTable& table, unsigned long n);

/// Smallest-term heuristic for a divergent asymptotic series: the first
/// index j >= 1 whose term magnitude |c_j/n^j| stops decreasing, capped at
/// table.J. Zero coefficients count as "still decreasing" and are skipped,
/// so tables with interior zeros keep their usable terms.
unsigned long optimal_truncation(const CoeffTable& table, unsigned long n);

/// Signs of the nonzero coefficients, in order, as '+'/'-' characters.
std::string sign_pattern(const CoeffTable& table);

/// Full remainder study at one n: R_n, the normalizer, their ratio, the
/// truncated expansion, and the (exact) deviation scaled by n^J. Internal
/// precision escalates until the deviation itself carries >= 24 bits.
RemainderReport remainder_report(const SeriesParams& params, unsigned long n,
                                 unsigned long J, mpfr_prec_t prec);

/// remainder_report across an ascending n list; `jobs` threads (0 = all cores).
std::vector<RemainderReport> order_sweep(const SeriesParams& params,
                                         const std::vector<unsigned long>& n_list,
                                         unsigned long J, mpfr_prec_t prec,
                                         unsigned jobs = 0);

struct AccelerationReport {
    int series_id = 0;
    unsigned long n = 0;
    unsigned long J_used = 0;
    bool auto_selected = false;
    bool conjectural = false;
    BigFloat raw_estimate{8};        // S_n
    BigFloat corrected_estimate{8};  // S_n + normalizer * expansion
    BigFloat raw_error{8};
    BigFloat corrected_error{8};
    double digits_gained = 0.0;
};

/// Tail correction: add the expansion-estimated remainder to the partial
/// sum. J empty selects the truncation point automatically via
/// optimal_truncation. Errors are measured against the reference value at
/// a precision at least three times the corrected estimate's apparent
/// accuracy. Throws precision_error when the corrected estimate cannot be
/// distinguished from the reference at the requested precision.
AccelerationReport accelerate(const SeriesParams& params, unsigned long n,
                              std::optional<unsigned long> J, mpfr_prec_t prec);

enum class EnvelopeStatus { holds, violated, indeterminate };

const char* to_string(EnvelopeStatus status);

struct EnvelopeCell {
    unsigned long L = 0;
    unsigned long n = 0;
    BigFloat lower{8};   // truncation one term short of the 4L block end
    BigFloat ratio{8};   // R_n / normalizer
    BigFloat upper{8};   // truncation two terms further
    BigFloat margin{8};  // min certified distance from ratio to a bound
    EnvelopeStatus status = EnvelopeStatus::indeterminate;
};

struct EnvelopeSummary {
    int series_id = 0;
    bool exploratory = false;  // true when run on anything but series 33
    unsigned long n_max = 0;
    unsigned long L_max = 0;
    mpfr_prec_t prec = 0;
    std::vector<EnvelopeCell> cells;  // deterministic (L, n) order
    size_t holds_count = 0;
    size_t violated_count = 0;
    size_t indeterminate_count = 0;
    bool all_hold = false;
};

/// Bracketing sweep for the alternating-block enveloping property: for each
/// (L, n) checks sum_{j<=4L-1} c_j/n^j < R_n/normalizer < sum_{j<=4L+1} c_j/n^j
/// with certified rational enclosures on both sides. Cells whose margin is
/// below 2^-(prec+1) are reported indeterminate, never silently passed.
EnvelopeSummary envelope_check(unsigned long n_max, unsigned long L_max,
                               mpfr_prec_t prec, unsigned jobs = 0,
                               int series_id = 33);

} // namespace pitail
