#include "fairsquare/instance.hpp"

namespace fairsq {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field: ") + key);
    return j.at(key);
}

Region cake_from_desc(const Json& desc, std::vector<Rect>* islands) {
    const std::string kind = need(desc, "kind").get<std::string>();
    if (kind == "square") {
        Rat x0 = desc.contains("x0") ? rat_from_json(desc.at("x0")) : Rat(0);
        Rat y0 = desc.contains("y0") ? rat_from_json(desc.at("y0")) : Rat(0);
        Rat side = desc.contains("side") ? rat_from_json(desc.at("side")) : Rat(1);
        if (!(side > 0)) throw SchemaError("square cake needs a positive side");
        return Region(Rect::of(x0, y0, x0 + side, y0 + side));
    }
    if (kind == "rect") {
        Rect r = rect_from_json(desc);
        if (!r.finite()) throw SchemaError("rect cake must be finite");
        return Region(r);
    }
    if (kind == "rectilinear") return Region(region_from_json(need(desc, "region")));
    if (kind == "staircase") return Region(staircase_from_json(desc));
    if (kind == "quarterplane") {
        Staircase s;
        s.corners = {{Rat(0), Rat(0)}};
        return Region(s);
    }
    if (kind == "halfplane") return Region(HalfPlaneRegion{1, +1, Rat(0)});
    if (kind == "plane") return Region(PlaneRegion{});
    if (kind == "archipelago") {
        const Json& arr = need(desc, "islands");
        if (!arr.is_array() || arr.empty()) throw SchemaError("archipelago needs islands");
        std::vector<Rect> rects;
        for (const auto& r : arr) rects.push_back(rect_from_json(r));
        if (islands) *islands = rects;
        try {
            return Region(make_region(rects));
        } catch (const InvalidParameter& e) {
            throw SchemaError(e.what());
        }
    }
    throw SchemaError("unknown cake kind: " + kind);
}

void check_compatibility(ProtocolKind protocol, const Json& desc) {
    const std::string kind = need(desc, "kind").get<std::string>();
    auto expect = [&](std::initializer_list<const char*> kinds) {
        for (const char* k : kinds)
            if (kind == k) return;
        throw SchemaError(std::string("protocol ") + protocol_name(protocol) +
                          " is incompatible with cake kind " + kind);
    };
    switch (protocol) {
        case ProtocolKind::SquareToSquares:
        case ProtocolKind::TwoPlayerSquare: expect({"square"}); break;
        case ProtocolKind::TwoFat:
        case ProtocolKind::FourWalls:
        case ProtocolKind::ThreeWalls:
        case ProtocolKind::Rectangle1D: expect({"square", "rect"}); break;
        case ProtocolKind::StaircaseDivision: expect({"staircase", "quarterplane"}); break;
        case ProtocolKind::HalfPlane: expect({"halfplane"}); break;
        case ProtocolKind::Plane: expect({"plane"}); break;
        case ProtocolKind::Archipelago: expect({"archipelago"}); break;
    }
}

}  // namespace

InstanceFile instance_from_json(const Json& j, std::optional<std::uint64_t> seed_override) {
    InstanceFile inst;
    const std::string proto = need(j, "protocol").get<std::string>();
    auto kind = protocol_from_name(proto);
    if (!kind) throw SchemaError("unknown protocol: " + proto);
    inst.protocol = *kind;
    inst.cake_desc = need(j, "cake");
    inst.cake = cake_from_desc(inst.cake_desc, &inst.islands);
    check_compatibility(inst.protocol, inst.cake_desc);
    if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
    if (seed_override) inst.seed = *seed_override;

    const Json& players = need(j, "players");
    if (!players.is_array() || players.empty()) throw SchemaError("instance needs players");
    int idx = 0;
    for (const auto& p : players) {
        PlayerSpec spec;
        std::string agent = p.contains("agent") ? p.at("agent").get<std::string>() : "honest";
        if (agent == "honest") {
            spec.honest = true;
        } else if (agent.rfind("adversarial", 0) == 0) {
            spec.honest = false;
            auto colon = agent.find(':');
            spec.seed = inst.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(idx);
            if (colon != std::string::npos)
                spec.seed ^= std::stoull(agent.substr(colon + 1));
        } else {
            throw SchemaError("unknown agent kind: " + agent);
        }
        spec.measure = measure_from_json(need(p, "measure"));
        for (const auto& cell : spec.measure.cells()) {
            if (cell.density == 0) continue;
            if (!region_contains_rect(inst.cake, cell.box))
                throw SchemaError("player " + std::to_string(idx) +
                                  " has measure support outside the cake");
        }
        inst.players.push_back(std::move(spec));
        ++idx;
    }
    return inst;
}

Json instance_to_json(const InstanceFile& inst) {
    Json players = Json::array();
    for (const auto& p : inst.players) {
        Json pj;
        pj["agent"] = p.honest ? "honest" : ("adversarial:" + std::to_string(p.seed));
        pj["measure"] = measure_to_json(p.measure);
        players.push_back(std::move(pj));
    }
    return Json{{"protocol", protocol_name(inst.protocol)},
                {"cake", inst.cake_desc},
                {"seed", inst.seed},
                {"players", players}};
}

RunResult run_instance(const InstanceFile& inst, const RunOptions& opts) {
    RunResult out;
    switch (inst.protocol) {
        case ProtocolKind::SquareToSquares:
            out.allocation = divide_square_to_squares(std::get<Rect>(inst.cake), inst.players, opts);
            break;
        case ProtocolKind::TwoFat:
            out.allocation = divide_2fat(std::get<Rect>(inst.cake), inst.players, opts);
            break;
        case ProtocolKind::FourWalls:
            out.allocation = divide_4walls(std::get<Rect>(inst.cake), inst.players, opts);
            break;
        case ProtocolKind::ThreeWalls:
            out.allocation = divide_3walls(std::get<Rect>(inst.cake), inst.players, opts);
            break;
        case ProtocolKind::StaircaseDivision:
            out.allocation = divide_staircase(std::get<Staircase>(inst.cake), inst.players, opts);
            break;
        case ProtocolKind::HalfPlane:
            out.allocation = divide_halfplane(inst.players, opts);
            break;
        case ProtocolKind::Plane:
            out.allocation = divide_plane(inst.players, opts);
            break;
        case ProtocolKind::Rectangle1D:
            out.allocation = divide_rectangle_1d(std::get<Rect>(inst.cake), inst.players, opts);
            break;
        case ProtocolKind::Archipelago:
            out.allocation = divide_archipelago(inst.islands, inst.players, opts);
            break;
        case ProtocolKind::TwoPlayerSquare:
            out.allocation =
                divide_two_player_square(std::get<Rect>(inst.cake), inst.players, opts);
            break;
    }
    out.bound = Rat(1) / out.allocation.bound_denominator;
    out.report = verify_allocation(out.allocation, inst.players, out.bound,
                                   protocol_shape_family(inst.protocol));
    return out;
}

Json allocation_to_json(const InstanceFile& inst, const RunResult& result) {
    const Allocation& a = result.allocation;
    Json pieces = Json::array();
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        Json pj;
        pj["player"] = i;
        if (a.pieces[i])
            pj["rect"] = rect_to_json(*a.pieces[i]);
        else
            pj["rect"] = nullptr;
        pj["violated"] = static_cast<bool>(a.violated[i]);
        pj["proportion"] = rat_str(result.report.proportions[i]);
        pj["proportion_decimal"] = rat_decimal(result.report.proportions[i], 9);
        pieces.push_back(std::move(pj));
    }
    Json failures = Json::array();
    for (const auto& f : result.report.failures) failures.push_back(f);
    return Json{{"protocol", protocol_name(inst.protocol)},
                {"cake", inst.cake_desc},
                {"n", a.n},
                {"bound", rat_str(result.bound)},
                {"bound_decimal", rat_decimal(result.bound, 9)},
                {"shape_family", shape_family_name(protocol_shape_family(inst.protocol))},
                {"pieces", pieces},
                {"pass", result.report.pass},
                {"failures", failures}};
}

VerifyReport verify_allocation_json(const InstanceFile& inst, const Json& allocation,
                                    const Rat& bound) {
    Allocation a;
    a.protocol = inst.protocol;
    a.n = static_cast<int>(inst.players.size());
    a.bound_denominator = Rat(1) / bound;
    // Containment region: 3-walls pieces may flow east past the cake.
    if (inst.protocol == ProtocolKind::ThreeWalls) {
        const Rect& cake = std::get<Rect>(inst.cake);
        a.containment =
            Region(Rect(cake.x0, cake.y0, ExtRat(cake.x1.value() + cake.height()), cake.y1));
    } else {
        a.containment = inst.cake;
    }
    const Json& pieces = allocation.contains("pieces") ? allocation.at("pieces") : allocation;
    if (!pieces.is_array()) throw SchemaError("allocation needs a pieces array");
    a.pieces.assign(inst.players.size(), std::nullopt);
    a.violated.assign(inst.players.size(), false);
    for (const auto& pj : pieces) {
        if (!pj.contains("player")) throw SchemaError("piece without player index");
        std::size_t idx = pj.at("player").get<std::size_t>();
        if (idx >= a.pieces.size()) throw SchemaError("piece for unknown player");
        if (pj.contains("rect") && !pj.at("rect").is_null())
            a.pieces[idx] = rect_from_json(pj.at("rect"));
        if (pj.contains("violated")) a.violated[idx] = pj.at("violated").get<bool>();
    }
    return verify_allocation(a, inst.players, bound, protocol_shape_family(inst.protocol));
}

}  // namespace fairsq
