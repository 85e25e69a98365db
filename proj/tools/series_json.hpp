#ifndef LVOA_TOOLS_SERIES_JSON_HPP
#define LVOA_TOOLS_SERIES_JSON_HPP

#include "lvoa/characters.hpp"

#include <json.hpp>

namespace lvoa::tools {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, everything else "p/q" strings.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

// {"offset": "p/q", "step": "1/s", "coeffs": [...]}
json series_to_json(const QSeries& q);
QSeries series_from_json(const json& j);

}  // namespace lvoa::tools

#endif  // LVOA_TOOLS_SERIES_JSON_HPP
