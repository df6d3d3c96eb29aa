#include "fairsquare/generators.hpp"
#include "fairsquare/svg.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace fs = std::filesystem;
using namespace fairsq;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitSchema = 2;
constexpr int kExitPrecondition = 3;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int run_divide_one(const std::string& instance_path, const std::string& out_path,
                   const std::string& svg_path, const std::string& transcript_path,
                   std::optional<std::uint64_t> seed, bool strict) {
    InstanceFile inst = instance_from_json(load_json(instance_path), seed);
    RunResult result = run_instance(inst, RunOptions{strict});
    Json out = allocation_to_json(inst, result);
    out["transcript"] = result.allocation.transcript;
    write_text(out_path, out.dump(2) + "\n");
    if (!transcript_path.empty())
        write_text(transcript_path, result.allocation.transcript.dump(2) + "\n");
    if (!svg_path.empty()) write_text(svg_path, render_allocation_svg(inst, result.allocation));
    return result.report.pass ? 0 : kExitCheckFailed;
}

int cmd_divide(const std::string& instance_path, const std::string& corpus_dir,
               const std::string& out_path, const std::string& svg_path,
               const std::string& transcript_path, std::optional<std::uint64_t> seed, bool strict,
               int jobs) {
    if (corpus_dir.empty())
        return run_divide_one(instance_path, out_path, svg_path, transcript_path, seed, strict);

    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (entry.path().extension() == ".json" &&
            entry.path().string().find(".alloc.") == std::string::npos)
            inputs.push_back(entry.path());
    }
    std::sort(inputs.begin(), inputs.end());
    std::atomic<std::size_t> cursor{0};
    std::atomic<int> worst{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= inputs.size()) return;
            fs::path out = inputs[i];
            out.replace_extension(".alloc.json");
            int rc;
            try {
                rc = run_divide_one(inputs[i].string(), out.string(), "", "", seed, strict);
            } catch (const std::exception& e) {
                std::cerr << inputs[i].string() << ": " << e.what() << "\n";
                rc = kExitSchema;
            }
            int prev = worst.load();
            while (rc > prev && !worst.compare_exchange_weak(prev, rc)) {
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return worst.load();
}

int cmd_bounds(const std::string& cake, const std::string& family, int n,
               std::optional<int> k, const std::string& L, const std::string& R) {
    BoundParams params;
    if (k) params.k = *k;
    if (!L.empty()) params.L = rat_parse(L);
    if (!R.empty()) params.R = rat_parse(R);
    PropBound row = prop_bound(cake, family, n, params);
    std::cout << "cake=" << row.cake << " shapes=" << row.family << " n=" << row.n << "\n";
    if (row.lower)
        std::cout << "lower " << rat_str(*row.lower) << " (" << rat_decimal(*row.lower, 6) << ", "
                  << row.lower_formula << ")\n";
    else
        std::cout << "lower open\n";
    if (row.upper)
        std::cout << "upper " << rat_str(*row.upper) << " (" << rat_decimal(*row.upper, 6) << ", "
                  << row.upper_formula << ")\n";
    else
        std::cout << "upper open\n";
    return 0;
}

int cmd_pools(const std::string& cake, int n, const std::string& eps_str, bool certify,
              const std::string& svg_path, const std::string& out_path) {
    Rat eps = rat_parse(eps_str);
    PoolInstance inst;
    if (cake == "quarterplane") {
        inst = pools_quarterplane(n, eps);
    } else if (cake == "square") {
        inst = pools_square(n, eps);
    } else if (cake == "notched-plate") {
        auto [region, indep] = notched_plate_example();
        inst = pools_rectilinear(region, n, eps, indep);
    } else {
        throw SchemaError("unsupported pools cake: " + cake);
    }
    Json pools = Json::array();
    for (const auto& p : inst.pools) pools.push_back(square_to_json(p));
    Json out{{"cake", inst.cake_desc},
             {"n", n},
             {"pools", pools},
             {"pool_count", inst.pools.size()},
             {"claimed_bound", rat_str(inst.claimed_bound)},
             {"epsilon", rat_str(inst.epsilon)},
             {"measure", measure_to_json(pool_measure(inst))}};
    if (certify) {
        int count = max_disjoint_two_pool_squares(inst);
        out["max_disjoint_two_pool_squares"] = count;
        out["certified"] = count <= n - 1;
    }
    write_text(out_path, out.dump(2) + "\n");
    if (!svg_path.empty()) write_text(svg_path, render_pools_svg(inst));
    if (certify && !out["certified"].get<bool>()) return kExitCheckFailed;
    return 0;
}

int cmd_verify(const std::string& alloc_path, const std::string& instance_path,
               const std::string& bound_str) {
    InstanceFile inst = instance_from_json(load_json(instance_path));
    Json alloc = load_json(alloc_path);
    Rat bound;
    if (!bound_str.empty()) {
        bound = rat_parse(bound_str);
    } else if (alloc.contains("bound")) {
        bound = rat_from_json(alloc.at("bound"));
    } else {
        int k = 1;
        if (const auto* st = std::get_if<Staircase>(&inst.cake)) k = st->corner_count();
        bound = Rat(1) / guarantee_denominator(inst.protocol, static_cast<int>(inst.players.size()),
                                               k, static_cast<int>(inst.islands.size()));
    }
    VerifyReport rep = verify_allocation_json(inst, alloc, bound);
    std::cout << "disjointness: " << (rep.structure_ok ? "ok" : "FAIL") << "\n";
    std::cout << "shapes: " << (rep.shapes_ok ? "ok" : "FAIL") << "\n";
    std::cout << "proportionality (bound " << rat_str(bound)
              << "): " << (rep.value_ok ? "ok" : "FAIL") << "\n";
    for (std::size_t i = 0; i < rep.proportions.size(); ++i)
        std::cout << "player " << i << ": " << rat_str(rep.proportions[i]) << " ("
                  << rat_decimal(rep.proportions[i], 6) << (rep.vacuous[i] ? ", vacuous" : "")
                  << ")\n";
    for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
    return rep.pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair division of two-dimensional cakes with shape constraints"};
    app.require_subcommand(1);

    std::string instance_path, corpus_dir, out_path = "-", svg_path, transcript_path;
    std::uint64_t seed_value = 0;
    bool seed_given = false, strict = false;
    int jobs = 1;

    auto* divide = app.add_subcommand("divide", "run a division protocol on an instance");
    divide->add_option("instance", instance_path, "instance JSON path");
    divide->add_option("--corpus", corpus_dir, "run every *.json instance in a directory");
    divide->add_option("--out", out_path, "allocation JSON output path (default stdout)");
    divide->add_option("--svg", svg_path, "also render the allocation as SVG");
    divide->add_option("--transcript", transcript_path, "also write the transcript JSON");
    divide->add_option("--seed", seed_value, "override the instance seed")
        ->each([&](const std::string&) { seed_given = true; });
    divide->add_flag("--strict", strict, "abort on protocol rule violations");
    divide->add_option("--jobs", jobs, "parallel workers for --corpus");

    std::string cake, family = "squares", eps_str = "1/64", bound_str, alloc_path;
    int n_players = 2;
    std::optional<int> k_param;
    std::string L_param, R_param;
    bool certify = false;

    auto* bounds = app.add_subcommand("bounds", "print a proportionality bounds table row");
    bounds->add_option("--cake", cake, "square|rect|rectilinear|quarterplane|staircase|halfplane|plane")
        ->required();
    bounds->add_option("--family", family, "squares|2fat|rfat|rectangles");
    bounds->add_option("--n", n_players, "number of players")->required();
    int k_value = 0;
    auto* kopt = bounds->add_option("--k", k_value, "independence number / staircase corners");
    bounds->add_option("--L", L_param, "cake aspect ratio for L x 1 rows");
    bounds->add_option("--R", R_param, "fatness of the usable shapes");

    auto* pools = app.add_subcommand("pools", "generate a water-pool impossibility instance");
    pools->add_option("--cake", cake, "quarterplane|square|notched-plate")->required();
    pools->add_option("--n", n_players, "number of players")->required();
    pools->add_option("--eps", eps_str, "pool side length (default 1/64)");
    pools->add_flag("--certify", certify, "run the disjoint two-pool square oracle");
    pools->add_option("--svg", svg_path, "render the pools as SVG");
    pools->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "check an allocation against its instance");
    verify->add_option("allocation", alloc_path, "allocation JSON path")->required();
    verify->add_option("instance", instance_path, "instance JSON path")->required();
    verify->add_option("--bound", bound_str, "override the proportionality bound (p/q)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (divide->parsed()) {
            if (instance_path.empty() && corpus_dir.empty()) {
                std::cerr << "divide needs an instance path or --corpus\n";
                return kExitSchema;
            }
            std::optional<std::uint64_t> seed;
            if (seed_given) seed = seed_value;
            return cmd_divide(instance_path, corpus_dir, out_path, svg_path, transcript_path, seed,
                              strict, jobs);
        }
        if (bounds->parsed()) {
            if (kopt->count() > 0) k_param = k_value;
            return cmd_bounds(cake, family, n_players, k_param, L_param, R_param);
        }
        if (pools->parsed())
            return cmd_pools(cake, n_players, eps_str, certify, svg_path, out_path);
        if (verify->parsed()) return cmd_verify(alloc_path, instance_path, bound_str);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const UnsupportedPlayerCount& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const InvalidParameter& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    }
    return 0;
}
