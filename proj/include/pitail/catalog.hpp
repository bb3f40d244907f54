#pragma once

#include "pitail/rational.hpp"

#include <vector>

namespace pitail {

/// An exact value of the form coeff * sqrt(radicand), with squarefree
/// radicand (radicand == 1 means the value is rational).
struct Surd {
    Rational coeff;
    unsigned long radicand = 1;

    friend bool operator==(const Surd&, const Surd&) = default;
};

/// One row of the catalog of rational hypergeometric series for 1/pi:
///   p/pi = sum_k (1/2)_k (q)_k (1-q)_k / (k!)^3 * (r + s k) * t^k.
struct SeriesParams {
    int id = 0;
    Surd p;
    Rational q;
    long r = 0;
    long s = 0;
    Rational t;
    /// True iff |t| = 1 (series 33): the expansion machinery is applied
    /// beyond its proven hypothesis |t| < 1.
    bool conjectural = false;

    friend bool operator==(const SeriesParams&, const SeriesParams&) = default;
};

/// The 36 known series, ids 1..36, immutable after first call.
const std::vector<SeriesParams>& series_catalog();

/// Lookup by id; throws series_not_found for ids outside the catalog.
const SeriesParams& series_by_id(int id);

/// Constructor for tests and experiments with non-catalog parameters.
/// Enforces 0 < q < 1, |t| <= 1, t != 1 and a squarefree positive p.
SeriesParams make_series(Surd p, Rational q, long r, long s, Rational t);

/// Invariant check used by make_series and the catalog self-test.
void validate(const SeriesParams& params);

bool is_squarefree(unsigned long n);

} // namespace pitail
