#include "pitail/catalog.hpp"

#include "pitail/errors.hpp"

#include <stdexcept>

namespace pitail {

bool is_squarefree(unsigned long n) {
    if (n == 0) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

void validate(const SeriesParams& params) {
    if (sgn(params.p.coeff) <= 0)
        throw std::invalid_argument("p must be positive");
    if (params.p.radicand == 0 || !is_squarefree(params.p.radicand))
        throw std::invalid_argument("radicand must be positive and squarefree");
    if (sgn(params.q) <= 0 || params.q >= 1)
        throw std::invalid_argument("q must satisfy 0 < q < 1");
    if (params.t == 1)
        throw std::invalid_argument("t = 1 is outside the admissible range");
    if (abs(params.t) > 1)
        throw std::invalid_argument("|t| must be at most 1");
    if (params.t == 0)
        throw std::invalid_argument("t must be nonzero");
    bool unit = (abs(params.t) == 1);
    if (unit != params.conjectural)
        throw std::invalid_argument("conjectural flag must mark exactly |t| = 1");
}

SeriesParams make_series(Surd p, Rational q, long r, long s, Rational t) {
    SeriesParams params;
    params.id = 0;
    params.p = std::move(p);
    params.q = std::move(q);
    params.r = r;
    params.s = s;
    params.t = std::move(t);
    params.conjectural = (abs(params.t) == 1);
    validate(params);
    return params;
}

namespace {

SeriesParams row(int id, const char* pc, unsigned long rad, const char* q,
                 long r, long s, const char* t) {
    SeriesParams params;
    params.id = id;
    params.p = Surd{parse_rational(pc), rad};
    params.q = parse_rational(q);
    params.r = r;
    params.s = s;
    params.t = parse_rational(t);
    params.conjectural = (abs(params.t) == 1);
    validate(params);
    return params;
}

std::vector<SeriesParams> build_catalog() {
    std::vector<SeriesParams> rows;
    rows.reserve(36);
    // q = 1/6
    rows.push_back(row(1, "5", 15, "1/6", 8, 63, "-64/125"));
    rows.push_back(row(2, "32", 2, "1/6", 15, 154, "-27/512"));
    rows.push_back(row(3, "32", 6, "1/6", 25, 342, "-1/512"));
    rows.push_back(row(4, "160/9", 30, "1/6", 31, 506, "-9/64000"));
    rows.push_back(row(5, "640/3", 15, "1/6", 263, 5418, "-1/512000"));
    rows.push_back(row(6, "1760", 330, "1/6", 10177, 261702, "-1/85184000"));
    rows.push_back(row(7, "426880", 10005, "1/6", 13591409, 545140134,
                       "-1/151931373056000"));
    rows.push_back(row(8, "5", 5, "1/6", 3, 28, "27/125"));
    rows.push_back(row(9, "5/6", 15, "1/6", 1, 11, "4/125"));
    rows.push_back(row(10, "11/4", 33, "1/6", 5, 63, "8/1331"));
    rows.push_back(row(11, "85/54", 255, "1/6", 8, 133, "64/614125"));
    // q = 1/4
    rows.push_back(row(12, "8", 1, "1/4", 3, 20, "-1/4"));
    rows.push_back(row(13, "72", 1, "1/4", 23, 260, "-1/324"));
    rows.push_back(row(14, "3528", 1, "1/4", 1123, 21460, "-1/777924"));
    rows.push_back(row(15, "9", 7, "1/4", 8, 65, "-256/3969"));
    rows.push_back(row(16, "16/3", 3, "1/4", 3, 28, "-1/48"));
    rows.push_back(row(17, "288/5", 5, "1/4", 41, 644, "-1/25920"));
    rows.push_back(row(18, "9/2", 1, "1/4", 1, 7, "32/81"));
    rows.push_back(row(19, "2", 3, "1/4", 1, 8, "1/9"));
    rows.push_back(row(20, "9/4", 2, "1/4", 1, 10, "1/81"));
    rows.push_back(row(21, "49/9", 3, "1/4", 3, 40, "1/2401"));
    rows.push_back(row(22, "18", 11, "1/4", 19, 280, "1/9801"));
    rows.push_back(row(23, "9801/4", 2, "1/4", 1103, 26390, "1/96059601"));
    // q = 1/3
    rows.push_back(row(24, "12", 3, "1/3", 7, 51, "-1/16"));
    rows.push_back(row(25, "96", 3, "1/3", 53, 615, "-1/1024"));
    rows.push_back(row(26, "1500", 3, "1/3", 827, 14151, "-1/250000"));
    rows.push_back(row(27, "4/3", 3, "1/3", 1, 5, "-9/16"));
    rows.push_back(row(28, "4/5", 15, "1/3", 1, 9, "-1/80"));
    rows.push_back(row(29, "108/7", 7, "1/3", 13, 165, "-1/3024"));
    rows.push_back(row(30, "3", 3, "1/3", 1, 6, "1/2"));
    rows.push_back(row(31, "27/4", 1, "1/3", 2, 15, "2/27"));
    rows.push_back(row(32, "15/2", 3, "1/3", 4, 33, "4/125"));
    // q = 1/2
    rows.push_back(row(33, "2", 1, "1/2", 1, 4, "-1"));
    rows.push_back(row(34, "2", 2, "1/2", 1, 6, "-1/8"));
    rows.push_back(row(35, "4", 1, "1/2", 1, 6, "1/4"));
    rows.push_back(row(36, "16", 1, "1/2", 5, 42, "1/64"));
    return rows;
}

} // namespace

const std::vector<SeriesParams>& series_catalog() {
    static const std::vector<SeriesParams> catalog = build_catalog();
    return catalog;
}

const SeriesParams& series_by_id(int id) {
    const auto& catalog = series_catalog();
    if (id < 1 || static_cast<size_t>(id) > catalog.size())
        throw series_not_found(id);
    return catalog[static_cast<size_t>(id) - 1];
}

} // namespace pitail
