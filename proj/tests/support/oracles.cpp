#include "support/oracles.hpp"

#include "pitail/exact.hpp"

#include <stdexcept>
#include <vector>

namespace oracles {

using namespace pitail;

Rational bernoulli_at(unsigned long k) {
    std::vector<Rational> a(k + 1);
    for (unsigned long m = 0; m <= k; ++m) {
        a[m] = Rational(1) / Rational(static_cast<long>(m + 1));
        for (unsigned long j = m; j >= 1; --j)
            a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    }
    return a[0];
}

FormalSeries log_prefactor_series(const Rational& q, unsigned long J) {
    if (J < 2) throw std::domain_error("oracle needs J >= 2");
    FormalSeries theta = stirling_series(J / 2 + 2).truncated(J);
    FormalSeries total(J);
    const Rational half(1, 2);
    const Rational args[] = {q, Rational(Rational(1) - q), half};
    for (const Rational& a : args) {
        FormalSeries ln = FormalSeries::log_one_minus(a, J + 1);
        FormalSeries part = ln.times_n();
        part += ln.truncated(J) * (half - a);
        part += FormalSeries::constant(a, J);
        part += shift_argument(theta, a);
        part -= theta;
        total += part;
    }
    return total;
}

ApproxReal tail_remainder(const SeriesParams& params, unsigned long n,
                          unsigned long bits) {
    const Rational abs_t = abs(params.t);
    unsigned long k = n + 1;
    Rational term = series_term(params, k);
    const Rational scale = abs(term) / pow2(static_cast<long>(bits));
    Rational sum = 0;
    for (;;) {
        sum += term;
        Rational rho =
            (Rational(1) + Rational(1) / Rational(static_cast<long>(k))) * abs_t;
        if (rho >= 1)
            throw std::domain_error("tail oracle needs a contracting step ratio");
        Rational bound = abs(term) * rho / (Rational(1) - rho);
        if (bound <= scale) return ApproxReal{sum, bound};
        if (++k > n + 200000)
            throw std::runtime_error("tail oracle did not converge");
        term = series_term(params, k);
    }
}

} // namespace oracles
