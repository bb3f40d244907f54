#include "pitail/catalog_json.hpp"

namespace pitail {

nlohmann::ordered_json series_to_json(const SeriesParams& params) {
    nlohmann::ordered_json j;
    j["id"] = params.id;
    j["p"] = {{"coeff", to_string(params.p.coeff)},
              {"radicand", params.p.radicand}};
    j["q"] = to_string(params.q);
    j["r"] = params.r;
    j["s"] = params.s;
    j["t"] = to_string(params.t);
    j["conjectural"] = params.conjectural;
    return j;
}

nlohmann::ordered_json catalog_to_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& entry : series_catalog()) arr.push_back(series_to_json(entry));
    return arr;
}

SeriesParams series_from_json(const nlohmann::json& j) {
    SeriesParams params;
    params.id = j.at("id").get<int>();
    params.p.coeff = parse_rational(j.at("p").at("coeff").get<std::string>());
    params.p.radicand = j.at("p").at("radicand").get<unsigned long>();
    params.q = parse_rational(j.at("q").get<std::string>());
    params.r = j.at("r").get<long>();
    params.s = j.at("s").get<long>();
    params.t = parse_rational(j.at("t").get<std::string>());
    params.conjectural = j.at("conjectural").get<bool>();
    validate(params);
    return params;
}

std::vector<SeriesParams> catalog_from_json(const nlohmann::json& j) {
    std::vector<SeriesParams> out;
    out.reserve(j.size());
    for (const auto& entry : j) out.push_back(series_from_json(entry));
    return out;
}

} // namespace pitail
