// Command-line driver: generate, solve, optimize, benchmark, and render
// disc reconfiguration instances.
//
// Exit codes: 0 success, 2 infeasible instance, 3 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sar/instances.hpp"
#include "sar/labeled.hpp"
#include "sar/svg.hpp"
#include "sar/unlabeled.hpp"

namespace {

using nlohmann::json;
using namespace sar;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitInput = 3;

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Vec2 parse_vec(const std::string& text) {
    std::istringstream in(text);
    double x, y;
    char comma;
    if (!(in >> x >> comma >> y) || comma != ',') throw InputError("expected --v as X,Y");
    return {x, y};
}

Criterion parse_criterion(const std::string& name) {
    if (name == "shortest") return Criterion::Shortest;
    if (name == "aabr") return Criterion::Aabr;
    if (name == "sed") return Criterion::Sed;
    throw InputError("unknown criterion: " + name);
}

Instance load_instance(const std::string& path, const std::string& align_mode) {
    Instance inst;
    try {
        inst = load(path);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    if (align_mode == "sed") return align(inst, AlignMode::SedCenters);
    if (align_mode == "com") return align(inst, AlignMode::CenterOfMass);
    if (align_mode == "none") return inst;
    throw InputError("unknown align mode: " + align_mode);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot open for writing: " + path);
    out << text;
}

// Sum of enclosing DISC radii (point radius + 1 each), the convention of
// the experiment tables.
double disc_radius_sum(const Instance& inst) {
    return smallest_enclosing_disc(inst.start.points).radius +
           smallest_enclosing_disc(inst.target.points).radius + 2.0;
}

json itinerary_json(const Instance& inst, const Matching& m, const Vec2& v, const Itinerary& it) {
    json moves = json::array();
    for (std::size_t k : it.order) {
        const auto& [si, ti] = m.pairs[k];
        const Point& a = inst.start.points[si];
        Point b = inst.target.points[ti] + v;
        moves.push_back({{"pair", k},
                         {"start_index", si},
                         {"target_index", ti},
                         {"from", {a.x, a.y}},
                         {"to", {b.x, b.y}}});
    }
    return json{{"v", {v.x, v.y}}, {"order", it.order}, {"moves", moves}, {"valid", true}};
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw InputError("unsupported --format for this command: " + format);
}

std::string report_csv_row(const json& report) {
    std::ostringstream csv;
    csv << "generator,n,seed,directions,criterion,r_sum_discs,value,translation_length,wall_ms\n";
    csv << report["instance"]["generator"].get<std::string>() << "," << report["instance"]["n"] << ","
        << report["seed"] << "," << report["directions"] << ","
        << report["criterion"].get<std::string>() << "," << report["r_sum_discs"] << ","
        << report["value"] << "," << report["translation_length"] << "," << report["wall_ms"] << "\n";
    return csv.str();
}

json run_report(const Instance& inst, const std::string& command, const std::string& criterion,
                const OptimizationResult& res, double wall_ms, std::uint64_t seed, std::size_t directions,
                const std::vector<double>* per_direction) {
    json j;
    j["instance"] = {{"generator", inst.generator}, {"n", inst.n}, {"seed", inst.seed},
                     {"labeled", inst.labeled}};
    j["command"] = command;
    j["criterion"] = criterion;
    j["v"] = {res.v.x, res.v.y};
    j["value"] = res.value;
    j["translation_length"] = norm(res.v);
    j["r_sum_discs"] = disc_radius_sum(inst);
    j["wall_ms"] = wall_ms;
    j["seed"] = seed;
    j["directions"] = directions;
    j["eps"] = eps();
    j["candidates_examined"] = res.candidates_examined;
    if (per_direction) j["per_direction"] = *per_direction;
    return j;
}

int cmd_gen(const std::string& kind, std::size_t n, std::uint64_t seed, bool labeled,
            const std::string& format, const std::string& out) {
    check_format(format, {"json"});
    Instance inst;
    try {
        inst = generate(kind, n, seed, labeled);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    write_text(out, to_json(inst).dump(2) + "\n");
    return kExitOk;
}

int cmd_solve(const std::string& in, const std::string& align_mode, bool labeled_flag, bool unlabeled_flag,
              const std::string& v_text, std::uint64_t seed, const std::string& out) {
    Instance inst = load_instance(in, align_mode);
    bool labeled = inst.labeled;
    if (labeled_flag) labeled = true;
    if (unlabeled_flag) labeled = false;

    if (labeled) {
        Matching m = instance_matching(inst);
        Vec2 v{0.0, 0.0};
        std::optional<Itinerary> it;
        if (!v_text.empty()) {
            v = parse_vec(v_text);
            auto res = topo_itinerary(build_tbg(inst.start, inst.target, m, v), v);
            if (auto* ok = std::get_if<Itinerary>(&res)) it = *ok;
        } else {
            OptimizationResult res = LabeledProblem(inst.start, inst.target, m).minimize_translation();
            if (res.status == SolveStatus::Optimal) {
                v = res.v;
                it = res.itinerary;
            }
        }
        if (!it) throw InfeasibleError("no valid translation exists");
        if (!validate_itinerary(inst.start, inst.target, m, v, *it))
            throw std::logic_error("itinerary failed validation");
        write_text(out, itinerary_json(inst, m, v, *it).dump(2) + "\n");
        return kExitOk;
    }

    // Unlabeled: matching induced by a generic direction (the direction of
    // the given translation when usable, otherwise a seeded draw).
    Rng rng(seed);
    Vec2 delta{1.0, 0.0};
    if (!v_text.empty() && norm(parse_vec(v_text)) > 0.0 &&
        is_generic_direction(inst.start, inst.target, parse_vec(v_text))) {
        delta = normalized(parse_vec(v_text));
    } else {
        delta = generic_direction(inst.start, inst.target, rng);
    }
    DirectionContext ctx = delta_matching(inst.start, inst.target, delta);
    Vec2 v;
    std::optional<Itinerary> it;
    if (!v_text.empty()) {
        v = parse_vec(v_text);
        Itinerary plan = ctx.plan_itinerary(v);
        if (validate_itinerary(ctx.s, ctx.t, ctx.matching, v, plan)) {
            it = plan;
        } else {
            auto res = topo_itinerary(build_tbg(ctx.s, ctx.t, ctx.matching, v), v);
            if (auto* ok = std::get_if<Itinerary>(&res)) it = *ok;
        }
        if (!it) throw InfeasibleError("no valid itinerary at the given translation");
    } else {
        v = feasibility_translation(ctx);
        it = ctx.plan_itinerary(v);
    }
    if (!validate_itinerary(ctx.s, ctx.t, ctx.matching, v, *it))
        throw std::logic_error("itinerary failed validation");
    write_text(out, itinerary_json(inst, ctx.matching, v, *it).dump(2) + "\n");
    return kExitOk;
}

int cmd_optimize(const std::string& in, const std::string& align_mode, const std::string& mode,
                 const std::string& criterion_name, std::size_t directions, std::uint64_t seed,
                 const std::string& format, const std::string& out) {
    check_format(format, {"json", "csv"});
    Instance inst = load_instance(in, align_mode);
    Criterion criterion = parse_criterion(criterion_name);
    auto t0 = std::chrono::steady_clock::now();

    if (mode == "labeled") {
        Matching m = instance_matching(inst);
        LabeledProblem prob(inst.start, inst.target, m);
        OptimizationResult res;
        switch (criterion) {
            case Criterion::Shortest: res = prob.minimize_translation(); break;
            case Criterion::Aabr: res = prob.minimize_aabr(); break;
            case Criterion::Sed: res = prob.minimize_sed(); break;
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (res.status != SolveStatus::Optimal) throw InfeasibleError("no valid translation exists");
        if (!validate_itinerary(inst.start, inst.target, m, res.v, res.itinerary))
            throw std::logic_error("itinerary failed validation");
        json report =
            run_report(inst, "optimize --mode labeled", criterion_name, res, ms, seed, 0, nullptr);
        write_text(out, format == "csv" ? report_csv_row(report) : report.dump(2) + "\n");
        return kExitOk;
    }
    if (mode == "unlabeled-2d") {
        // Restricted 2-D mode: the matching and move order are fixed by a
        // sampled direction, and the chosen criterion is optimized over all
        // translations avoiding the order-violating vippodromes. Much
        // heavier per direction than the ray mode; keep --directions small.
        Rng rng(seed);
        std::optional<OptimizationResult> best;
        std::vector<double> per_direction;
        for (std::size_t i = 0; i < directions; ++i) {
            DirectionContext ctx =
                delta_matching(inst.start, inst.target, generic_direction(inst.start, inst.target, rng));
            std::vector<std::size_t> order(ctx.matching.size());
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
            LabeledProblem prob(ctx.s, ctx.t, ctx.matching, order);
            OptimizationResult res;
            switch (criterion) {
                case Criterion::Shortest: res = prob.minimize_translation(); break;
                case Criterion::Aabr: res = prob.minimize_aabr(); break;
                case Criterion::Sed: res = prob.minimize_sed(); break;
            }
            if (res.status != SolveStatus::Optimal)
                throw std::logic_error("restricted validity is never empty for a generic direction");
            if (!validate_itinerary(ctx.s, ctx.t, ctx.matching, res.v, res.itinerary))
                throw std::logic_error("itinerary failed validation");
            per_direction.push_back(res.value);
            if (!best || res.value < best->value) best = res;
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        json report = run_report(inst, "optimize --mode unlabeled-2d", criterion_name, *best, ms, seed,
                                 directions, &per_direction);
        write_text(out, format == "csv" ? report_csv_row(report) : report.dump(2) + "\n");
        return kExitOk;
    }
    if (mode != "unlabeled") throw InputError("unknown mode: " + mode);

    MultiDirectionResult multi =
        multi_direction_optimize(inst.start, inst.target, directions, criterion, seed);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    DirectionContext ctx = delta_matching(inst.start, inst.target, multi.directions[multi.best_index]);
    if (!validate_itinerary(ctx.s, ctx.t, ctx.matching, multi.best.v, multi.best.itinerary))
        throw std::logic_error("itinerary failed validation");
    json report = run_report(inst, "optimize --mode unlabeled", criterion_name, multi.best, ms, seed,
                             directions, &multi.per_direction);
    write_text(out, format == "csv" ? report_csv_row(report) : report.dump(2) + "\n");
    return kExitOk;
}

int cmd_bench(const std::string& kinds_csv, const std::string& sizes_csv, const std::string& seeds_csv,
              const std::string& criterion_name, std::size_t directions, const std::string& out) {
    auto split = [](const std::string& csv) {
        std::vector<std::string> parts;
        std::istringstream in(csv);
        std::string item;
        while (std::getline(in, item, ',')) parts.push_back(item);
        return parts;
    };
    Criterion criterion = parse_criterion(criterion_name);
    std::ostringstream csv;
    csv << "kind,n,seed,directions,criterion,r_sum_discs,value,translation_length,wall_ms\n";
    for (const std::string& kind : split(kinds_csv)) {
        for (const std::string& size_str : split(sizes_csv)) {
            for (const std::string& seed_str : split(seeds_csv)) {
                std::size_t n = std::stoull(size_str);
                std::uint64_t seed = std::stoull(seed_str);
                Instance inst = align(generate(kind, n, seed));
                auto t0 = std::chrono::steady_clock::now();
                MultiDirectionResult multi =
                    multi_direction_optimize(inst.start, inst.target, directions, criterion, seed);
                double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                csv << kind << "," << inst.n << "," << seed << "," << directions << "," << criterion_name
                    << "," << disc_radius_sum(inst) << "," << multi.best.value << "," << norm(multi.best.v)
                    << "," << ms << "\n";
            }
        }
    }
    write_text(out, csv.str());
    return kExitOk;
}

int cmd_render(const std::string& in, const std::string& align_mode, const std::string& v_text,
               const std::string& result_path, bool moves, const std::string& out) {
    Instance inst = load_instance(in, align_mode);
    Vec2 v{0.0, 0.0};
    std::optional<Itinerary> it;
    Matching m = instance_matching(inst);
    if (!result_path.empty()) {
        std::ifstream rin(result_path);
        if (!rin) throw InputError("cannot open: " + result_path);
        json j;
        try {
            rin >> j;
        } catch (const json::exception& e) {
            throw InputError(std::string("result parse error: ") + e.what());
        }
        if (j.contains("v") && j["v"].is_array() && j["v"].size() == 2)
            v = {j["v"][0].get<double>(), j["v"][1].get<double>()};
        if (j.contains("order") && j["order"].is_array()) {
            Itinerary parsed;
            parsed.translation = v;
            for (const auto& e : j["order"]) parsed.order.push_back(e.get<std::size_t>());
            if (parsed.order.size() == m.size()) it = parsed;
        }
    }
    if (!v_text.empty()) v = parse_vec(v_text);
    RenderOptions opt;
    opt.draw_moves = moves && it.has_value();
    std::string svg = render_svg(inst.start, inst.target, v, &m, it ? &*it : nullptr, opt);
    write_text(out, svg);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Space-aware reconfiguration of unit discs"};
    app.require_subcommand(1);

    double eps_value = 1e-9;
    app.add_option("--eps", eps_value, "comparison tolerance")->capture_default_str();

    std::string kind = "random", out_path, in_path, v_text, align_mode = "sed";
    std::string mode = "unlabeled", criterion = "shortest";
    std::string kinds_csv = "circle,packing,cross,random", sizes_csv = "100", seeds_csv = "1";
    std::string result_path;
    std::string format_name = "json";
    std::size_t n = 10, directions = 100;
    std::uint64_t seed = 1;
    bool labeled = false, unlabeled = false, moves = false;

    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", kind, "circle|packing|cross|random")->capture_default_str();
    gen->add_option("--n", n, "number of discs")->capture_default_str();
    gen->add_option("--seed", seed, "random seed")->capture_default_str();
    gen->add_flag("--labeled", labeled, "attach identity labels/matching");
    gen->add_option("--format", format_name, "json")->capture_default_str();
    gen->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* solve = app.add_subcommand("solve", "compute an itinerary");
    solve->add_option("--in", in_path, "instance JSON")->required();
    solve->add_option("--align", align_mode, "sed|com|none")->capture_default_str();
    solve->add_flag("--labeled", labeled, "force labeled semantics");
    solve->add_flag("--unlabeled", unlabeled, "force unlabeled semantics");
    solve->add_option("--v", v_text, "fixed translation X,Y");
    solve->add_option("--seed", seed, "seed for direction sampling")->capture_default_str();
    solve->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* optimize = app.add_subcommand("optimize", "optimize the translation");
    optimize->add_option("--in", in_path, "instance JSON")->required();
    optimize->add_option("--align", align_mode, "sed|com|none")->capture_default_str();
    optimize->add_option("--mode", mode, "labeled|unlabeled|unlabeled-2d")->capture_default_str();
    optimize->add_option("--criterion", criterion, "shortest|aabr|sed")->capture_default_str();
    optimize->add_option("--directions", directions, "direction count (unlabeled)")->capture_default_str();
    optimize->add_option("--seed", seed, "seed for direction sampling")->capture_default_str();
    optimize->add_option("--format", format_name, "json|csv")->capture_default_str();
    optimize->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "benchmark across generators/sizes");
    bench->add_option("--kinds", kinds_csv, "comma-separated kinds")->capture_default_str();
    bench->add_option("--sizes", sizes_csv, "comma-separated sizes")->capture_default_str();
    bench->add_option("--seeds", seeds_csv, "comma-separated seeds")->capture_default_str();
    bench->add_option("--criterion", criterion, "shortest|aabr|sed")->capture_default_str();
    bench->add_option("--directions", directions, "directions per run")->capture_default_str();
    bench->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* render = app.add_subcommand("render", "render an instance to SVG");
    render->add_option("--in", in_path, "instance JSON")->required();
    render->add_option("--align", align_mode, "sed|com|none")->capture_default_str();
    render->add_option("--v", v_text, "translation X,Y");
    render->add_option("--result", result_path, "solve/optimize output JSON to draw");
    render->add_flag("--moves", moves, "draw move segments");
    render->add_option("--out", out_path, "output SVG path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    eps() = eps_value;

    try {
        if (gen->parsed()) return cmd_gen(kind, n, seed, labeled, format_name, out_path);
        if (solve->parsed())
            return cmd_solve(in_path, align_mode, labeled, unlabeled, v_text, seed, out_path);
        if (optimize->parsed())
            return cmd_optimize(in_path, align_mode, mode, criterion, directions, seed, format_name,
                                out_path);
        if (bench->parsed()) return cmd_bench(kinds_csv, sizes_csv, seeds_csv, criterion, directions, out_path);
        if (render->parsed()) return cmd_render(in_path, align_mode, v_text, result_path, moves, out_path);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
