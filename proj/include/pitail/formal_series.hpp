#pragma once

#include "pitail/rational.hpp"

#include <vector>

namespace pitail {

/// Truncated power series in 1/n with exact rational coefficients:
///   a_0 + a_1/n + ... + a_{J-1}/n^{J-1} + O(n^{-J}),
/// where J = order() is fixed at construction. All arithmetic truncates
/// eagerly at the smaller operand order, so results never pretend to more
/// accuracy than the inputs carry.
class FormalSeries {
public:
    explicit FormalSeries(unsigned long order);

    static FormalSeries constant(const Rational& value, unsigned long order);

    /// Number of retained coefficients; the error term is O(n^{-order}).
    unsigned long order() const { return coeffs_.size(); }

    const Rational& coeff(unsigned long j) const;
    void set_coeff(unsigned long j, const Rational& value);

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    FormalSeries truncated(unsigned long order) const;

    FormalSeries& operator+=(const FormalSeries& rhs);
    FormalSeries& operator-=(const FormalSeries& rhs);
    FormalSeries& operator*=(const Rational& scalar);

    friend FormalSeries operator+(FormalSeries lhs, const FormalSeries& rhs);
    friend FormalSeries operator-(FormalSeries lhs, const FormalSeries& rhs);
    friend FormalSeries operator*(const FormalSeries& lhs, const FormalSeries& rhs);
    friend FormalSeries operator*(FormalSeries lhs, const Rational& scalar);

    FormalSeries pow(unsigned long e) const;

    /// Multiply by n. Requires a zero constant term (otherwise the result
    /// would have an n^{+1} part) and loses one order of accuracy.
    FormalSeries times_n() const;

    /// ln(1 - a/n) truncated at the given order: -sum_{j>=1} (a^j/j) n^{-j}.
    static FormalSeries log_one_minus(const Rational& a, unsigned long order);

    friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Re-expansion of f(n - a) around n, same truncation order, using
/// (n-a)^{-i} = n^{-i} sum_{m>=0} C(i-1+m, m) (a/n)^m.
FormalSeries shift_argument(const FormalSeries& f, const Rational& a);

} // namespace pitail
