#pragma once

#include <filesystem>

#include <json.hpp>

#include "tsharp/bounds.hpp"
#include "tsharp/oracle.hpp"
#include "tsharp/series.hpp"

namespace tsharp {

using Json = nlohmann::ordered_json;

// Series <-> [[re, im], ...], index = degree.
Json series_to_json(const Series& s);
// order defaults to (entries - 1); shorter inputs are zero-padded up to order.
Series series_from_json(const Json& j, std::optional<std::size_t> order = std::nullopt);
// Throws Io when unreadable, Parse when malformed.
Series read_series_file(const std::filesystem::path& path, std::optional<std::size_t> order = std::nullopt);

// {quantity, side, value, case, mu_or_sigma, preconditions:[{name, ok}], sharp, extremal, notes}
// Inapplicable values serialize as null.
Json bound_to_json(const BoundReport& r);
BoundReport bound_from_json(const Json& j);

Json config_to_json(const ScanConfig& cfg);
Json report_to_json(const OracleReport& rep, const ScanConfig& cfg);

}  // namespace tsharp
