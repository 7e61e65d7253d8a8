#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qreal/series.hpp"

namespace qreal {

inline constexpr const char* kSchema = "qreal-lab/1";

/// {"valuation": v, "order": N, "coeffs": ["-1", "2", ...]}; coefficients as
/// decimal strings (or "p/q").
nlohmann::json series_to_json(const TruncatedLaurentSeries& s);
/// Accepts the object above, optionally wrapped as {"series": {...}}.
/// Throws InvalidInput on malformed data.
TruncatedLaurentSeries series_from_json(const nlohmann::json& j);

TruncatedLaurentSeries read_series_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace qreal
