#pragma once

#include "pitail/catalog.hpp"
#include "pitail/formal_series.hpp"
#include "pitail/hp_eval.hpp"
#include "pitail/rational.hpp"

// Independent reimplementations used only to cross-check library results.
// Each one takes a different route than the code under test.
namespace oracles {

/// Bernoulli number B_k by the Akiyama-Tanigawa triangle. Note this
/// construction yields B_1 = +1/2; compare even indices only.
pitail::Rational bernoulli_at(unsigned long k);

/// Log of the normalized term prefactor rebuilt from its Stirling pieces:
/// sum over a in {q, 1-q, 1/2} of
///   (n + 1/2 - a) ln(1 - a/n) + a + Theta(n - a) - Theta(n),
/// assembled with formal-series arithmetic instead of the closed-form
/// per-coefficient assembly.
pitail::FormalSeries log_prefactor_series(const pitail::Rational& q,
                                          unsigned long J);

/// Exact tail sum past index n, stopped once the geometric bound on the
/// dropped terms falls below |u_{n+1}| 2^{-bits}. Requires the step-ratio
/// bound (1 + 1/(n+1))|t| to sit below 1, so use it on small |t| only.
pitail::ApproxReal tail_remainder(const pitail::SeriesParams& params,
                                  unsigned long n, unsigned long bits);

} // namespace oracles
