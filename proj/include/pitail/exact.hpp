#pragma once

#include "pitail/catalog.hpp"
#include "pitail/formal_series.hpp"
#include "pitail/rational.hpp"

#include <vector>

namespace pitail {

/// Exact Bernoulli number B_k (B_1 = -1/2 convention; only even indices
/// matter downstream, odd k > 1 give 0). Memoized, safe for concurrent use.
Rational bernoulli(unsigned long k);

/// Coefficient of n^{-l} in the expansion of (n + 1/2 - q) ln(1 - q/n) + q,
/// the per-factor Stirling-style correction: -(l + 1 - 2q) q^l / (2l(l+1)).
Rational stirling_log_coeff(const Rational& q, unsigned long l);

/// Truncated Stirling tail of ln Gamma: sum_{l=1..L} B_{2l}/(2l(2l-1)) x^{1-2l},
/// returned as a series in 1/x of order 2L.
FormalSeries stirling_series(unsigned long L);

/// Expansion coefficients f_j of the log of the normalized term prefactor:
/// returns f_0..f_{J-1} (f_0 = 0) with the error term O(n^{-J}). Throws
/// std::domain_error unless 0 < q < 1.
FormalSeries prefactor_log_series(const Rational& q, unsigned long J);

/// Expansion coefficients of the prefactor step ratio F_n/F_{n-1} in 1/n.
struct RatioCoeffs {
    Rational q;
    Rational t;
    /// values[l]: l = 0 gives t, l = 1 gives -t/2, l = 2 gives q(1-q)t,
    /// all l >= 3 give q(1-q)t/2.
    std::vector<Rational> values;
};
RatioCoeffs ratio_coeffs(const Rational& q, const Rational& t, unsigned long L);

/// Truncated remainder expansion R_n ~ F_n (c_0 + c_1/n + ... + c_{J-1}/n^{J-1}).
struct CoeffTable {
    int series_id = 0;
    unsigned long J = 0;
    std::vector<Rational> c;
};

/// The coefficient recursion driven by ratio_coeffs. Deterministic; a larger
/// J extends the table without changing earlier entries. Throws
/// std::domain_error for t = 1 ("recursion singular").
CoeffTable remainder_expansion(const SeriesParams& params, unsigned long J);

} // namespace pitail
