#include "pitail/exact.hpp"

#include <mutex>
#include <stdexcept>

namespace pitail {

namespace {

std::mutex bernoulli_mutex;
// Filled on demand via the defining recurrence sum_{i<k+1} C(k+1,i) B_i = 0.
std::vector<Rational> bernoulli_cache;

} // namespace

Rational bernoulli(unsigned long k) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.empty()) bernoulli_cache.push_back(Rational(1));
    while (bernoulli_cache.size() <= k) {
        unsigned long m = bernoulli_cache.size();
        // B_m = -1/C(m+1,m) * sum_{i<m} C(m+1,i) B_i
        Rational acc = 0;
        for (unsigned long i = 0; i < m; ++i)
            acc += Rational(binomial(m + 1, i)) * bernoulli_cache[i];
        bernoulli_cache.push_back(-acc / Rational(binomial(m + 1, m)));
    }
    return bernoulli_cache[k];
}

Rational stirling_log_coeff(const Rational& q, unsigned long l) {
    if (l == 0) throw std::domain_error("index must be positive");
    Rational num = -(Rational(l) + 1 - 2 * q) * pow_int(q, static_cast<long>(l));
    return num / Rational(2 * l * (l + 1));
}

FormalSeries stirling_series(unsigned long L) {
    if (L == 0) throw std::domain_error("need at least one term");
    FormalSeries s(2 * L);
    for (unsigned long l = 1; l <= L; ++l)
        s.set_coeff(2 * l - 1, bernoulli(2 * l) / Rational(2 * l * (2 * l - 1)));
    return s;
}

FormalSeries prefactor_log_series(const Rational& q, unsigned long J) {
    if (sgn(q) <= 0 || q >= 1) throw std::domain_error("q must satisfy 0 < q < 1");
    if (J < 2) throw std::domain_error("J must be at least 2");
    const unsigned long L = (J + 1) / 2;
    FormalSeries f(J);

    const Rational q2 = 1 - q;
    const Rational half(1, 2);
    for (unsigned long j = 1; j < J; ++j)
        f.set_coeff(j, stirling_log_coeff(q, j) + stirling_log_coeff(q2, j) +
                           stirling_log_coeff(half, j));

    for (unsigned long l = 1; l <= L; ++l) {
        const Rational w = bernoulli(2 * l) / Rational(2 * l * (2 * l - 1));
        if (2 * l - 1 < J)
            f.set_coeff(2 * l - 1, f.coeff(2 * l - 1) - 3 * w);
        Rational qp = 1, q2p = 1, hp = 1;
        for (unsigned long m = 0; m + 2 * l - 1 < J; ++m) {
            unsigned long j = m + 2 * l - 1;
            f.set_coeff(j, f.coeff(j) + w * Rational(binomial(2 * l - 2 + m, m)) *
                                            (qp + q2p + hp));
            qp *= q;
            q2p *= q2;
            hp *= half;
        }
    }
    return f;
}

RatioCoeffs ratio_coeffs(const Rational& q, const Rational& t, unsigned long L) {
    if (sgn(q) <= 0 || q >= 1) throw std::domain_error("q must satisfy 0 < q < 1");
    RatioCoeffs d;
    d.q = q;
    d.t = t;
    d.values.resize(L + 1);
    const Rational qq = q * (1 - q) * t;
    for (unsigned long l = 0; l <= L; ++l) {
        if (l == 0)
            d.values[l] = t;
        else if (l == 1)
            d.values[l] = -t / 2;
        else if (l == 2)
            d.values[l] = qq;
        else
            d.values[l] = qq / 2;
    }
    return d;
}

CoeffTable remainder_expansion(const SeriesParams& params, unsigned long J) {
    if (params.t == 1)
        throw std::domain_error("recursion singular: 1 - d_0 = 0");
    if (J == 0) throw std::domain_error("J must be positive");

    const RatioCoeffs d = ratio_coeffs(params.q, params.t, J);
    const Rational denom = 1 - d.values[0];
    const Rational r(params.r), s(params.s);

    CoeffTable table;
    table.series_id = params.id;
    table.J = J;
    table.c.reserve(J);

    table.c.push_back(d.values[0] * s / denom);
    if (J >= 2)
        table.c.push_back((d.values[1] * (s + table.c[0]) + d.values[0] * r) / denom);
    for (unsigned long N = 2; N < J; ++N) {
        Rational acc = d.values[N] * (s + table.c[0]) + d.values[N - 1] * r;
        for (unsigned long k = 1; k < N; ++k)
            acc += table.c[k] *
                   (d.values[N - k] - Rational(binomial(N - 1, k - 1)));
        table.c.push_back(acc / denom);
    }
    return table;
}

} // namespace pitail
