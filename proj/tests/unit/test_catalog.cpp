#include "doctest.h"

#include "pitail/catalog.hpp"
#include "pitail/catalog_json.hpp"
#include "pitail/errors.hpp"
#include "pitail/hp_eval.hpp"

#include <set>

using namespace pitail;

TEST_CASE("catalog has 36 rows with consecutive ids") {
    const auto& cat = series_catalog();
    REQUIRE(cat.size() == 36);
    for (size_t i = 0; i < cat.size(); ++i)
        CHECK(cat[i].id == static_cast<int>(i + 1));
}

TEST_CASE("well known rows carry the expected parameters") {
    const auto& chud = series_by_id(7);
    CHECK(chud.p.coeff == Rational(426880));
    CHECK(chud.p.radicand == 10005);
    CHECK(chud.q == Rational(1, 6));
    CHECK(chud.r == 13591409);
    CHECK(chud.s == 545140134);
    CHECK(chud.t == parse_rational("-1/151931373056000"));
    CHECK_FALSE(chud.conjectural);

    const auto& ram = series_by_id(23);
    CHECK(ram.p.coeff == parse_rational("9801/4"));
    CHECK(ram.p.radicand == 2);
    CHECK(ram.q == Rational(1, 4));
    CHECK(ram.r == 1103);
    CHECK(ram.s == 26390);
    CHECK(ram.t == parse_rational("1/96059601"));

    const auto& bound = series_by_id(33);
    CHECK(bound.p.coeff == Rational(2));
    CHECK(bound.p.radicand == 1);
    CHECK(bound.q == Rational(1, 2));
    CHECK(bound.r == 1);
    CHECK(bound.s == 4);
    CHECK(bound.t == Rational(-1));
    CHECK(bound.conjectural);

    const auto& simple = series_by_id(35);
    CHECK(simple.p.coeff == Rational(4));
    CHECK(simple.r == 1);
    CHECK(simple.s == 6);
    CHECK(simple.t == Rational(1, 4));
}

TEST_CASE("lookup outside the catalog throws") {
    CHECK_THROWS_AS(series_by_id(0), series_not_found);
    CHECK_THROWS_AS(series_by_id(37), series_not_found);
    CHECK_THROWS_WITH(series_by_id(99), "series not in catalog: 99");
}

TEST_CASE("every row satisfies the catalog invariants") {
    const std::set<Rational> q_values{Rational(1, 6), Rational(1, 4),
                                      Rational(1, 3), Rational(1, 2)};
    int conjectural_rows = 0;
    for (const auto& e : series_catalog()) {
        CHECK_NOTHROW(validate(e));
        CHECK(q_values.count(e.q) == 1);
        CHECK(abs(e.t) <= 1);
        CHECK(e.t != 1);
        CHECK(e.r >= 1);
        CHECK(e.s >= 1);
        CHECK(e.p.coeff > 0);
        CHECK(is_squarefree(e.p.radicand));
        CHECK(e.conjectural == (abs(e.t) == 1));
        if (e.conjectural) ++conjectural_rows;
    }
    CHECK(conjectural_rows == 1);
}

TEST_CASE("make_series rejects out-of-domain parameters") {
    Surd p{Rational(2), 1};
    CHECK_THROWS_AS(make_series(p, Rational(0), 1, 4, Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_series(p, Rational(1), 1, 4, Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_series(p, Rational(1, 2), 1, 4, Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_series(p, Rational(1, 2), 1, 4, Rational(-3, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_series(p, Rational(1, 2), 1, 4, Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        make_series(Surd{Rational(2), 12}, Rational(1, 2), 1, 4, Rational(1, 2)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        make_series(Surd{Rational(-2), 1}, Rational(1, 2), 1, 4, Rational(1, 2)),
        std::invalid_argument);

    auto ok = make_series(p, Rational(1, 2), 1, 4, Rational(-1));
    CHECK(ok.conjectural);
    auto ok2 = make_series(p, Rational(1, 2), 1, 4, Rational(1, 4));
    CHECK_FALSE(ok2.conjectural);
}

TEST_CASE("is_squarefree basics") {
    CHECK(is_squarefree(1));
    CHECK(is_squarefree(2));
    CHECK(is_squarefree(10005));
    CHECK(is_squarefree(330));
    CHECK_FALSE(is_squarefree(4));
    CHECK_FALSE(is_squarefree(12));
    CHECK_FALSE(is_squarefree(0));
}

// Every row must actually converge to p/pi: past n = 50 the dropped tail
// is below the last kept term for all catalog parameters, so the reference
// enclosure has to sit within |u_50| of S_50.
TEST_CASE("all rows converge toward their reference value") {
    for (const auto& e : series_catalog()) {
        CAPTURE(e.id);
        ApproxReal ref = reference_enclosure(e, 192);
        Rational gap = abs(ref.value - partial_sum(e, 50));
        Rational budget = abs(series_term(e, 50)) + ref.abs_error;
        CHECK(gap <= budget);
    }
}

TEST_CASE("json round trip preserves every row") {
    auto j = catalog_to_json();
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 36);
    CHECK(j[6]["id"] == 7);
    CHECK(j[6]["p"]["coeff"] == "426880");
    CHECK(j[6]["p"]["radicand"] == 10005);
    CHECK(j[6]["t"] == "-1/151931373056000");
    CHECK(j[32]["conjectural"] == true);

    auto restored = catalog_from_json(j);
    REQUIRE(restored.size() == 36);
    for (size_t i = 0; i < restored.size(); ++i)
        CHECK(restored[i] == series_catalog()[i]);
}
