#include "fairsquare/json_io.hpp"

namespace fairsq {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field: ") + key);
    return j.at(key);
}

}  // namespace

Json ext_to_json(const ExtRat& e) {
    if (e.inf > 0) return "inf";
    if (e.inf < 0) return "-inf";
    return rat_str(e.v);
}

ExtRat ext_from_json(const Json& j) {
    if (!j.is_string()) throw SchemaError("coordinate must be a \"p/q\" string");
    const std::string s = j.get<std::string>();
    if (s == "inf") return ExtRat::pos_inf();
    if (s == "-inf") return ExtRat::neg_inf();
    try {
        return ExtRat(rat_parse(s));
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what());
    }
}

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string");
    try {
        return rat_parse(j.get<std::string>());
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what());
    }
}

Json rect_to_json(const Rect& r) {
    return Json{{"x0", ext_to_json(r.x0)},
                {"y0", ext_to_json(r.y0)},
                {"x1", ext_to_json(r.x1)},
                {"y1", ext_to_json(r.y1)}};
}

Rect rect_from_json(const Json& j) {
    try {
        return Rect(ext_from_json(need(j, "x0")), ext_from_json(need(j, "y0")),
                    ext_from_json(need(j, "x1")), ext_from_json(need(j, "y1")));
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what());
    }
}

Json square_to_json(const Square& s) {
    return Json{{"x", rat_str(s.x)}, {"y", rat_str(s.y)}, {"side", ext_to_json(s.side)}};
}

Square square_from_json(const Json& j) {
    try {
        return Square(rat_from_json(need(j, "x")), rat_from_json(need(j, "y")),
                      ext_from_json(need(j, "side")));
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what());
    }
}

Json staircase_to_json(const Staircase& s) {
    Json corners = Json::array();
    for (const auto& [x, y] : s.corners) corners.push_back(Json::array({rat_str(x), rat_str(y)}));
    return Json{{"corners", corners}};
}

Staircase staircase_from_json(const Json& j) {
    const Json& corners = need(j, "corners");
    if (!corners.is_array() || corners.empty()) throw SchemaError("staircase needs corners");
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& c : corners) {
        if (!c.is_array() || c.size() != 2) throw SchemaError("staircase corner must be [x, y]");
        Rat x = rat_from_json(c[0]), y = rat_from_json(c[1]);
        if (x < 0 || y < 0) throw SchemaError("staircase corners must be non-negative");
        out.emplace_back(std::move(x), std::move(y));
    }
    try {
        return make_staircase(std::move(out));
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what());
    }
}

Json region_to_json(const RectRegion& r) {
    Json rects = Json::array();
    for (const auto& part : r.rects) rects.push_back(rect_to_json(part));
    return Json{{"rects", rects}};
}

RectRegion region_from_json(const Json& j) {
    const Json& rects = need(j, "rects");
    if (!rects.is_array() || rects.empty()) throw SchemaError("region needs rects");
    std::vector<Rect> parts;
    for (const auto& r : rects) parts.push_back(rect_from_json(r));
    try {
        return make_region(std::move(parts));
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what());
    }
}

Json measure_to_json(const Measure& m) {
    Json cells = Json::array();
    for (const auto& c : m.cells()) {
        Json cell = rect_to_json(c.box);
        cell["density"] = rat_str(c.density);
        cells.push_back(std::move(cell));
    }
    return Json{{"cells", cells}};
}

Measure measure_from_json(const Json& j) {
    const Json& cells = need(j, "cells");
    if (!cells.is_array()) throw SchemaError("measure needs a cells array");
    std::vector<Cell> out;
    for (const auto& c : cells) {
        Cell cell;
        cell.box = rect_from_json(c);
        cell.density = rat_from_json(need(c, "density"));
        out.push_back(std::move(cell));
    }
    try {
        return Measure(std::move(out));
    } catch (const InvalidParameter& e) {
        throw SchemaError(e.what());
    }
}

}  // namespace fairsq
