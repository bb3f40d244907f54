#include "pitail/formal_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pitail {

FormalSeries::FormalSeries(unsigned long order) : coeffs_(order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
}

FormalSeries FormalSeries::constant(const Rational& value, unsigned long order) {
    FormalSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

const Rational& FormalSeries::coeff(unsigned long j) const {
    if (j >= coeffs_.size()) throw std::out_of_range("coefficient index past order");
    return coeffs_[j];
}

void FormalSeries::set_coeff(unsigned long j, const Rational& value) {
    if (j >= coeffs_.size()) throw std::out_of_range("coefficient index past order");
    coeffs_[j] = value;
}

FormalSeries FormalSeries::truncated(unsigned long order) const {
    FormalSeries s(std::min<unsigned long>(order, coeffs_.size()));
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order());
    for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order());
    for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

FormalSeries operator+(FormalSeries lhs, const FormalSeries& rhs) {
    lhs += rhs;
    return lhs;
}

FormalSeries operator-(FormalSeries lhs, const FormalSeries& rhs) {
    lhs -= rhs;
    return lhs;
}

FormalSeries operator*(const FormalSeries& lhs, const FormalSeries& rhs) {
    FormalSeries out(std::min(lhs.order(), rhs.order()));
    for (size_t i = 0; i < out.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; i + j < out.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return out;
}

FormalSeries operator*(FormalSeries lhs, const Rational& scalar) {
    lhs *= scalar;
    return lhs;
}

FormalSeries FormalSeries::pow(unsigned long e) const {
    FormalSeries acc = constant(1, order());
    for (unsigned long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

FormalSeries FormalSeries::times_n() const {
    if (coeffs_[0] != 0)
        throw std::domain_error("times_n requires a zero constant term");
    if (order() < 2)
        throw std::domain_error("times_n needs order >= 2");
    FormalSeries out(order() - 1);
    for (size_t j = 0; j + 1 < coeffs_.size(); ++j) out.coeffs_[j] = coeffs_[j + 1];
    return out;
}

FormalSeries FormalSeries::log_one_minus(const Rational& a, unsigned long order) {
    FormalSeries out(order);
    Rational apow = a;
    for (unsigned long j = 1; j < order; ++j) {
        out.coeffs_[j] = -apow / j;
        apow *= a;
    }
    return out;
}

FormalSeries shift_argument(const FormalSeries& f, const Rational& a) {
    const unsigned long J = f.order();
    FormalSeries out(J);
    out.set_coeff(0, f.coeff(0));
    for (unsigned long i = 1; i < J; ++i) {
        if (f.coeff(i) == 0) continue;
        Rational apow = 1;
        for (unsigned long m = 0; i + m < J; ++m) {
            out.set_coeff(i + m,
                          out.coeff(i + m) +
                              f.coeff(i) * Rational(binomial(i - 1 + m, m)) * apow);
            apow *= a;
        }
    }
    return out;
}

} // namespace pitail
