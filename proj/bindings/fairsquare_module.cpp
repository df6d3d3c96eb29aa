#include "fairsquare/generators.hpp"
#include "fairsquare/svg.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace fairsq;

namespace {

// The python surface works on JSON strings so everything stays exact;
// parsing into rich python objects is left to the caller.
std::string py_divide(const std::string& instance_json, bool strict) {
    InstanceFile inst = instance_from_json(Json::parse(instance_json));
    RunResult result = run_instance(inst, RunOptions{strict});
    Json out = allocation_to_json(inst, result);
    out["transcript"] = result.allocation.transcript;
    return out.dump();
}

std::string py_verify(const std::string& instance_json, const std::string& allocation_json,
                      const std::string& bound) {
    InstanceFile inst = instance_from_json(Json::parse(instance_json));
    Json alloc = Json::parse(allocation_json);
    Rat b = bound.empty() ? rat_from_json(alloc.at("bound")) : rat_parse(bound);
    VerifyReport rep = verify_allocation_json(inst, alloc, b);
    Json out{{"pass", rep.pass},
             {"structure_ok", rep.structure_ok},
             {"shapes_ok", rep.shapes_ok},
             {"value_ok", rep.value_ok}};
    Json props = Json::array();
    for (const auto& p : rep.proportions) props.push_back(rat_str(p));
    out["proportions"] = props;
    return out.dump();
}

std::string py_prop_bound(const std::string& cake, const std::string& family, int n, int k,
                          const std::string& L, const std::string& R) {
    BoundParams params;
    if (k > 0) params.k = k;
    if (!L.empty()) params.L = rat_parse(L);
    if (!R.empty()) params.R = rat_parse(R);
    PropBound row = prop_bound(cake, family, n, params);
    Json out{{"cake", row.cake}, {"family", row.family}, {"n", row.n}};
    out["lower"] = row.lower ? Json(rat_str(*row.lower)) : Json(nullptr);
    out["upper"] = row.upper ? Json(rat_str(*row.upper)) : Json(nullptr);
    return out.dump();
}

std::string py_pools(const std::string& cake, int n, const std::string& eps, bool certify) {
    PoolInstance inst;
    Rat e = rat_parse(eps);
    if (cake == "quarterplane")
        inst = pools_quarterplane(n, e);
    else if (cake == "square")
        inst = pools_square(n, e);
    else if (cake == "notched-plate") {
        auto [region, indep] = notched_plate_example();
        inst = pools_rectilinear(region, n, e, indep);
    } else {
        throw InvalidParameter("unsupported pools cake: " + cake);
    }
    Json pools = Json::array();
    for (const auto& p : inst.pools) pools.push_back(square_to_json(p));
    Json out{{"cake", inst.cake_desc},
             {"pools", pools},
             {"claimed_bound", rat_str(inst.claimed_bound)},
             {"measure", measure_to_json(pool_measure(inst))}};
    if (certify) out["max_disjoint_two_pool_squares"] = max_disjoint_two_pool_squares(inst);
    return out.dump();
}

bool py_is_r_fat(const std::string& w, const std::string& h, const std::string& R) {
    Rat width = rat_parse(w), height = rat_parse(h);
    return is_r_fat(Rect::of(Rat(0), Rat(0), width, height), rat_parse(R));
}

std::string py_render_svg(const std::string& instance_json, bool strict) {
    InstanceFile inst = instance_from_json(Json::parse(instance_json));
    RunResult result = run_instance(inst, RunOptions{strict});
    return render_allocation_svg(inst, result.allocation);
}

}  // namespace

PYBIND11_MODULE(_fairsquare, m) {
    m.doc() = "Fair division of two-dimensional cakes under shape constraints";
    m.def("divide", &py_divide, py::arg("instance_json"), py::arg("strict") = false,
          "Run the instance's protocol; returns the allocation JSON string.");
    m.def("verify", &py_verify, py::arg("instance_json"), py::arg("allocation_json"),
          py::arg("bound") = std::string(), "Re-check an allocation against its instance.");
    m.def("prop_bound", &py_prop_bound, py::arg("cake"), py::arg("family"), py::arg("n"),
          py::arg("k") = 0, py::arg("L") = std::string(), py::arg("R") = std::string(),
          "Proportionality bounds table row as JSON.");
    m.def("pools", &py_pools, py::arg("cake"), py::arg("n"), py::arg("eps") = "1/64",
          py::arg("certify") = false, "Water-pool impossibility instance as JSON.");
    m.def("is_r_fat", &py_is_r_fat, py::arg("width"), py::arg("height"), py::arg("R"));
    m.def("render_svg", &py_render_svg, py::arg("instance_json"), py::arg("strict") = false);
}
