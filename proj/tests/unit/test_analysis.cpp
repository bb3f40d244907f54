#include "doctest.h"

#include "pitail/analysis.hpp"
#include "pitail/catalog.hpp"
#include "pitail/errors.hpp"

#include <stdexcept>

using namespace pitail;

namespace {

bool same_bigfloat(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.raw(), b.raw()) != 0;
}

bool close_pow2(const BigFloat& a, const BigFloat& b, long e) {
    BigFloat d(std::max(a.precision(), b.precision()) + 8);
    mpfr_sub(d.raw(), a.raw(), b.raw(), MPFR_RNDN);
    if (mpfr_zero_p(d.raw())) return true;
    mpfr_abs(d.raw(), d.raw(), MPFR_RNDN);
    return d.exponent() <= e;
}

} // namespace

TEST_CASE("expansion value at an integer point") {
    auto t33 = remainder_expansion(series_by_id(33), 4);
    CHECK(expansion_value(t33, 1) == Rational(-9, 4));

    auto t23 = remainder_expansion(series_by_id(23), 2);
    CHECK(expansion_value(t23, 10) ==
          Rational(1, 3640) - parse_rational("3035509/241142720000"));

    auto t7 = remainder_expansion(series_by_id(7), 1);
    CHECK(expansion_value(t7, 3) == parse_rational("-2/557403"));
    CHECK(expansion_value(t7, 1000) == parse_rational("-2/557403"));

    CHECK_THROWS_AS(expansion_value(t7, 0), std::domain_error);
}

TEST_CASE("optimal truncation: cap and zero handling") {
    auto short33 = remainder_expansion(series_by_id(33), 3);  // -2, 0, 0
    CHECK(optimal_truncation(short33, 5) == 3);

    // zeros at c_1, c_2 are stepped over, not treated as a minimum
    auto t33 = remainder_expansion(series_by_id(33), 240);
    CHECK(optimal_truncation(t33, 1) == 5);
    CHECK(optimal_truncation(t33, 5) == 15);

    CHECK_THROWS_AS(optimal_truncation(remainder_expansion(series_by_id(7), 1), 5),
                    std::domain_error);
    CHECK_THROWS_AS(optimal_truncation(t33, 0), std::domain_error);
}

TEST_CASE("optimal truncation: scan properties at depth") {
    auto table = remainder_expansion(series_by_id(7), 200);
    const unsigned long jstar = optimal_truncation(table, 10);
    CHECK(jstar == 82);

    // the returned index is the first non-decreasing scaled magnitude
    const Rational n(10);
    Rational scale = 1;
    Rational prev = abs(table.c[0]);
    for (unsigned long j = 1; j < jstar; ++j) {
        scale /= n;
        Rational cur = abs(table.c[j]) * scale;
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(abs(table.c[jstar]) * scale / n >= prev);
}

TEST_CASE("truncating at the scan point beats the shorter window") {
    // The scan can fire on a stutter: one non-monotone step long before the
    // terms diverge for good. Cutting there is still no worse than cutting
    // five orders earlier, and the deviation stays within the first omitted
    // term. (Later cuts may still improve on it, so only this direction is
    // a sound claim.)
    const auto& e = series_by_id(7);
    auto table = remainder_expansion(e, 200);
    const unsigned long jstar = optimal_truncation(table, 10);

    auto at_j = remainder_report(e, 10, jstar, 256);
    auto at_back = remainder_report(e, 10, jstar - 5, 256);
    CHECK(mpfr_cmpabs(at_j.abs_error.raw(), at_back.abs_error.raw()) <= 0);

    Rational omitted = abs(table.c[jstar]) / pow_int(Rational(10), (long)jstar);
    BigFloat bound(omitted * 2, 256);
    CHECK(mpfr_cmpabs(at_j.abs_error.raw(), bound.raw()) <= 0);
}

TEST_CASE("sign pattern") {
    CHECK(sign_pattern(remainder_expansion(series_by_id(33), 10)) == "--++--++");

    CoeffTable mixed;
    mixed.series_id = 0;
    mixed.J = 4;
    mixed.c = {Rational(1), Rational(0), Rational(-3), Rational(2)};
    CHECK(sign_pattern(mixed) == "+-+");

    CoeffTable allpos;
    allpos.J = 3;
    allpos.c = {Rational(1), Rational(2), Rational(3)};
    CHECK(sign_pattern(allpos) == "+++");
}

TEST_CASE("sign pattern of the alternating-unit series persists at depth") {
    auto pattern = sign_pattern(remainder_expansion(series_by_id(33), 40));
    // c_1 = c_2 = 0 drop out; the rest repeats in blocks of four
    REQUIRE(pattern.size() == 38);
    for (size_t i = 0; i < pattern.size(); ++i) {
        size_t phase = i % 4;
        CHECK(pattern[i] == ((phase == 2 || phase == 3) ? '+' : '-'));
    }
}

TEST_CASE("remainder report: fields are mutually consistent") {
    const auto& e = series_by_id(23);
    auto report = remainder_report(e, 10, 2, 192);
    CHECK(report.series_id == 23);
    CHECK(report.n == 10);
    CHECK(report.J == 2);

    CHECK(same_bigfloat(report.prefactor_value,
                        BigFloat(remainder_prefactor(e, 10), 192)));
    auto table = remainder_expansion(e, 2);
    CHECK(same_bigfloat(report.expansion, BigFloat(expansion_value(table, 10), 192)));

    // ratio * normalizer recovers the remainder to working accuracy
    BigFloat prod(256);
    mpfr_mul(prod.raw(), report.ratio.raw(), report.prefactor_value.raw(), MPFR_RNDN);
    CHECK(close_pow2(prod, report.remainder_value,
                     report.remainder_value.exponent() - 180));

    // scaled_error = abs_error * n^J
    BigFloat scaled(256);
    mpfr_mul_ui(scaled.raw(), report.abs_error.raw(), 100, MPFR_RNDN);
    CHECK(close_pow2(scaled, report.scaled_error, scaled.exponent() - 180));

    // at J=2 the deviation is led by c_2/n^2: scaled_error lands near |c_2|
    auto deep = remainder_expansion(e, 3);
    BigFloat c2(abs(deep.c[2]), 192);
    BigFloat lo(abs(deep.c[2]) / 2, 192), hi(abs(deep.c[2]) * 2, 192);
    CHECK(mpfr_cmp(report.scaled_error.raw(), lo.raw()) > 0);
    CHECK(mpfr_cmp(report.scaled_error.raw(), hi.raw()) < 0);
}

TEST_CASE("remainder report rejects n = 0") {
    CHECK_THROWS_AS(remainder_report(series_by_id(7), 0, 3, 128), std::domain_error);
}

TEST_CASE("order sweep: scaled errors stay within one decade") {
    const auto& e = series_by_id(7);
    auto reports = order_sweep(e, {10, 20, 40}, 6, 512);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].n == 10);
    CHECK(reports[2].n == 40);

    BigFloat lo(1 << 30, 512), hi(0L, 512);
    for (const auto& r : reports) {
        if (mpfr_cmp(r.scaled_error.raw(), lo.raw()) < 0)
            mpfr_set(lo.raw(), r.scaled_error.raw(), MPFR_RNDN);
        if (mpfr_cmp(r.scaled_error.raw(), hi.raw()) > 0)
            mpfr_set(hi.raw(), r.scaled_error.raw(), MPFR_RNDN);
    }
    mpfr_div(hi.raw(), hi.raw(), lo.raw(), MPFR_RNDN);
    CHECK(mpfr_cmp_ui(hi.raw(), 10) < 0);
}

TEST_CASE("order sweep validates its n list") {
    const auto& e = series_by_id(7);
    CHECK_THROWS_AS(order_sweep(e, {}, 4, 128), std::domain_error);
    CHECK_THROWS_AS(order_sweep(e, {10, 10}, 4, 128), std::domain_error);
    CHECK_THROWS_AS(order_sweep(e, {20, 10}, 4, 128), std::domain_error);
}

TEST_CASE("order sweep at J=1 tracks the constant coefficient") {
    const auto& e = series_by_id(23);
    auto reports = order_sweep(e, {20, 60}, 1, 256);
    const Rational c0 = remainder_expansion(e, 1).c[0];
    for (const auto& r : reports) {
        BigFloat target(c0, 256);
        CHECK(close_pow2(r.ratio, target, target.exponent() - 4));
    }
    // and the deviation shrinks with n
    CHECK(mpfr_cmpabs(reports[1].abs_error.raw(), reports[0].abs_error.raw()) < 0);
}

TEST_CASE("accelerate: reported estimates are the exact rationals, rounded") {
    const auto& e = series_by_id(7);
    auto report = accelerate(e, 2, 5, 256);
    CHECK(report.J_used == 5);
    CHECK_FALSE(report.auto_selected);
    CHECK_FALSE(report.conjectural);

    const Rational raw = partial_sum(e, 2);
    const Rational corr = raw + remainder_prefactor(e, 2) *
                                    expansion_value(remainder_expansion(e, 5), 2);
    CHECK(same_bigfloat(report.raw_estimate, BigFloat(raw, 256)));
    CHECK(same_bigfloat(report.corrected_estimate, BigFloat(corr, 256)));
}

TEST_CASE("accelerate: correction error is led by the first omitted term") {
    const auto& e = series_by_id(7);
    auto report = accelerate(e, 2, 5, 256);
    CHECK(mpfr_cmpabs(report.corrected_error.raw(), report.raw_error.raw()) < 0);

    Rational omitted = abs(remainder_prefactor(e, 2)) *
                       abs(remainder_expansion(e, 6).c[5]) / pow_int(Rational(2), 5);
    BigFloat bound(10 * omitted, 256);
    CHECK(mpfr_cmpabs(report.corrected_error.raw(), bound.raw()) <= 0);
}

TEST_CASE("accelerate: more usable orders gain more digits") {
    const auto& e = series_by_id(7);
    auto shallow = accelerate(e, 2, 1, 256);
    auto deeper = accelerate(e, 2, 4, 256);
    CHECK(deeper.digits_gained >= shallow.digits_gained);
    CHECK(shallow.digits_gained > 0.0);
}

TEST_CASE("accelerate: J = 0 applies no correction") {
    const auto& e = series_by_id(7);
    auto report = accelerate(e, 3, 0, 256);
    CHECK(report.J_used == 0);
    CHECK(same_bigfloat(report.raw_estimate, report.corrected_estimate));
    CHECK(same_bigfloat(report.raw_error, report.corrected_error));
    CHECK(report.digits_gained == doctest::Approx(0.0));
}

TEST_CASE("accelerate: automatic order selection") {
    const auto& e = series_by_id(23);
    auto report = accelerate(e, 3, std::nullopt, 512);
    CHECK(report.auto_selected);
    CHECK(report.J_used == 55);
    CHECK(mpfr_cmpabs(report.corrected_error.raw(), report.raw_error.raw()) < 0);
    CHECK(report.digits_gained > 10.0);
}

TEST_CASE("accelerate: conjectural rows are flagged") {
    auto report = accelerate(series_by_id(33), 4, 4, 256);
    CHECK(report.conjectural);
}

TEST_CASE("accelerate: unresolvable correction asks for more precision") {
    CHECK_THROWS_AS(accelerate(series_by_id(23), 3, std::nullopt, 64),
                    precision_error);
}

TEST_CASE("envelope: the first cell in closed form") {
    auto summary = envelope_check(1, 1, 128);
    CHECK(summary.series_id == 33);
    CHECK_FALSE(summary.exploratory);
    REQUIRE(summary.cells.size() == 1);
    const auto& cell = summary.cells[0];
    CHECK(cell.L == 1);
    CHECK(cell.n == 1);
    CHECK(cell.status == EnvelopeStatus::holds);
    CHECK(same_bigfloat(cell.lower, BigFloat(Rational(-9, 4), 128)));
    CHECK(same_bigfloat(cell.upper, BigFloat(Rational(-7, 4), 128)));

    // ratio = 3 - 16/pi = -2.0930...
    BigFloat expected(160);
    mpfr_const_pi(expected.raw(), MPFR_RNDN);
    mpfr_ui_div(expected.raw(), 16, expected.raw(), MPFR_RNDN);
    mpfr_ui_sub(expected.raw(), 3, expected.raw(), MPFR_RNDN);
    CHECK(close_pow2(cell.ratio, expected, -120));

    CHECK(summary.all_hold);
    CHECK(summary.holds_count == 1);
}

TEST_CASE("envelope: small sweep holds with no indeterminate cells") {
    auto summary = envelope_check(12, 3, 192);
    CHECK(summary.cells.size() == 36);
    CHECK(summary.holds_count == 36);
    CHECK(summary.violated_count == 0);
    CHECK(summary.indeterminate_count == 0);
    CHECK(summary.all_hold);

    // deterministic (L, n) ordering
    for (size_t k = 0; k < summary.cells.size(); ++k) {
        CHECK(summary.cells[k].L == k / 12 + 1);
        CHECK(summary.cells[k].n == k % 12 + 1);
    }
    // margins are positive everywhere
    for (const auto& cell : summary.cells)
        CHECK(cell.margin.sign() > 0);
}

TEST_CASE("envelope: bound width is the pair of omitted block terms") {
    // upper - lower = c_{4L}/n^{4L} + c_{4L+1}/n^{4L+1}, positive: this is
    // what makes the bracket an open interval rather than a tie.
    auto table = remainder_expansion(series_by_id(33), 26);
    for (unsigned long L = 1; L <= 6; ++L) {
        for (unsigned long n = 1; n <= 8; ++n) {
            Rational width =
                table.c[4 * L] / pow_int(Rational(n), 4 * (long)L) +
                table.c[4 * L + 1] / pow_int(Rational(n), 4 * (long)L + 1);
            CHECK(width > 0);
        }
    }
}

TEST_CASE("envelope: other series run in exploratory mode") {
    auto summary = envelope_check(2, 1, 128, 0, 34);
    CHECK(summary.series_id == 34);
    CHECK(summary.exploratory);
    CHECK(summary.cells.size() == 2);
}

TEST_CASE("envelope validates sweep bounds") {
    CHECK_THROWS_AS(envelope_check(0, 3, 128), std::domain_error);
    CHECK_THROWS_AS(envelope_check(3, 0, 128), std::domain_error);
    CHECK_THROWS_AS(envelope_check(2, 2, 128, 0, 99), series_not_found);
}
