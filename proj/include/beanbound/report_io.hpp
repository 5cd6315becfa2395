#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "beanbound/btb_class.hpp"
#include "beanbound/search.hpp"
#include "beanbound/series.hpp"

namespace beanbound {

/// Shortest-exact double formatting used for every emitted file, so outputs
/// are byte-stable across runs.
std::string fmt_double(double v);

nlohmann::json to_json(const TruncatedSeries<Rational>& s);
nlohmann::json to_json(const TruncatedSeries<double>& s);
TruncatedSeries<Rational> rational_series_from_json(const nlohmann::json& j);
TruncatedSeries<double> double_series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SchwarzParams& p);
nlohmann::json to_json(const BtbFunction<Rational>& f);
nlohmann::json to_json(const BoundReport& r);

std::string reports_to_csv(const std::vector<BoundReport>& reports);
std::string reports_to_jsonl(const std::vector<BoundReport>& reports);

/// Minimal SVG polyline writer (no plotting dependency): scales the points
/// into a fixed viewport and emits a single polyline plus a frame.
std::string svg_polyline(const std::vector<std::pair<double, double>>& pts, int width = 640,
                         int height = 480);

} // namespace beanbound
