#pragma once

#include "pitail/catalog.hpp"

#include <json.hpp>

namespace pitail {

/// Schema: {id, p: {coeff, radicand}, q, r, s, t, conjectural} with all
/// rationals as "num/den" strings. Stable field order for byte-identical
/// output across runs.
nlohmann::ordered_json series_to_json(const SeriesParams& params);

nlohmann::ordered_json catalog_to_json();

SeriesParams series_from_json(const nlohmann::json& j);

std::vector<SeriesParams> catalog_from_json(const nlohmann::json& j);

} // namespace pitail
