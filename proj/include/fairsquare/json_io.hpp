#pragma once

#include "fairsquare/measure.hpp"

#include <json.hpp>

namespace fairsq {

using Json = nlohmann::json;

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

Json ext_to_json(const ExtRat& e);
ExtRat ext_from_json(const Json& j);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json rect_to_json(const Rect& r);
Rect rect_from_json(const Json& j);

Json square_to_json(const Square& s);
Square square_from_json(const Json& j);

Json staircase_to_json(const Staircase& s);
Staircase staircase_from_json(const Json& j);

Json region_to_json(const RectRegion& r);
RectRegion region_from_json(const Json& j);

Json measure_to_json(const Measure& m);
Measure measure_from_json(const Json& j);

}  // namespace fairsq
