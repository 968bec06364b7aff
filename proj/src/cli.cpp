#include "bsv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsv/appendix.hpp"
#include "bsv/autom.hpp"
#include "bsv/graph6.hpp"
#include "bsv/hyper.hpp"
#include "bsv/mis.hpp"
#include "bsv/parallel.hpp"
#include "bsv/scan.hpp"

namespace bsv {

using json = nlohmann::ordered_json;

int default_jobs() {
    if (const char* env = std::getenv("RF_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace {

struct InputGraph {
    Graph graph;
    bool labeled = false;  // biggs-smith labels apply
};

InputGraph load_input(const std::string& builtin, const std::string& file) {
    if (!builtin.empty()) {
        if (builtin != "biggs-smith") throw std::invalid_argument("unknown builtin: " + builtin);
        return {build_biggs_smith().graph, true};
    }
    std::string line;
    if (file.empty() || file == "-") {
        if (!std::getline(std::cin, line)) throw std::invalid_argument("no input on stdin");
    } else {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        if (!std::getline(in, line)) throw std::invalid_argument("empty input file " + file);
    }
    return {parse_graph6(line), false};
}

std::string vertex_name(int v, bool labeled) {
    return labeled ? LabeledBs::label_of(v) : std::to_string(v);
}

json edge_json(const Edge& e, bool labeled) {
    return json::array({vertex_name(e.first, labeled), vertex_name(e.second, labeled)});
}

int parse_vertex_token(const std::string& tok, const InputGraph& in) {
    if (in.labeled)
        if (auto v = LabeledBs::vertex_by_label(tok)) return *v;
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos == tok.size() && v >= 0 && v < in.graph.vertex_count()) return v;
    } catch (...) {
    }
    throw std::invalid_argument("bad vertex token: " + tok);
}

json report_json(const VerificationReport& rep) {
    json j;
    j["claim"] = rep.subject;
    j["passed"] = rep.passed();
    j["checks"] = rep.checks;
    j["failures"] = json::array();
    for (std::size_t i = 0; i < rep.failures.size() && i < 20; i++)
        j["failures"].push_back(
            {{"check", rep.failures[i].check}, {"witness", rep.failures[i].witness}});
    j["failure_count"] = rep.failures.size();
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    if (!rep.counters.empty()) {
        json c;
        for (const auto& [k, v] : rep.counters) c[k] = v;
        j["counters"] = c;
    }
    return j;
}

int cmd_build(int n, const std::vector<int>& offsets) {
    HExpansionSpec spec;
    spec.n = n;
    if (!offsets.empty()) {
        if (offsets.size() != 4) throw std::invalid_argument("--offsets takes four values");
        for (int i = 0; i < 4; i++) spec.offsets[i] = offsets[i];
    }
    Graph g = build_h_expansion(spec);
    json rec;
    rec["graph6"] = write_graph6(g);
    auto cc = spec.cycle_counts();
    rec["cycle_counts"] = cc;
    json labels;
    for (int v = 0; v < g.vertex_count(); v++)
        labels[std::to_string(v)] =
            std::to_string(v / 6 + 1) + static_cast<char>('a' + v % 6);
    rec["labels"] = labels;
    std::cout << rec.dump() << "\n";
    std::cerr << "built expansion: n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    return 0;
}

int cmd_invariants(const InputGraph& in) {
    auto inv = distance_invariants(in.graph);
    json rec;
    rec["n"] = in.graph.vertex_count();
    rec["m"] = in.graph.edge_count();
    rec["regular_degree"] = inv.regular_degree ? json(*inv.regular_degree) : json(nullptr);
    rec["girth"] = inv.girth ? json(*inv.girth) : json(nullptr);
    rec["diameter"] = inv.diameter ? json(*inv.diameter) : json(nullptr);
    if (inv.intersection_array)
        rec["intersection_array"] =
            json{{"b", inv.intersection_array->b}, {"c", inv.intersection_array->c}};
    else
        rec["intersection_array"] = nullptr;
    std::cout << rec.dump() << "\n";
    return 0;
}

int cmd_alpha(const InputGraph& in, const std::string& avoid) {
    VertexSet forbidden;
    if (!avoid.empty()) {
        std::stringstream ss(avoid);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) forbidden.set(parse_vertex_token(tok, in));
    }
    MisResult r = avoid.empty() ? max_independent_set(in.graph)
                                : alpha_avoiding(in.graph, forbidden);
    json rec;
    rec["size"] = r.size;
    json w = json::array();
    for (int v = r.witness.first(); v >= 0; v = r.witness.next(v))
        w.push_back(vertex_name(v, in.labeled));
    rec["witness"] = w;
    rec["nodes_explored"] = r.nodes_explored;
    std::cout << rec.dump() << "\n";
    std::cerr << "alpha = " << r.size << "\n";
    return 0;
}

int cmd_autom(const InputGraph& in, bool pairs) {
    auto gd = automorphism_group(in.graph);
    json rec;
    rec["order"] = gd.order;
    rec["vertex_orbit_count"] = gd.vertex_orbits.size();
    rec["edge_orbit_count"] = gd.edge_orbits.size();
    rec["chain_orbit_sizes"] = gd.chain_orbit_sizes;
    json gens = json::array();
    for (const auto& p : gd.generators) gens.push_back(cycle_notation(p));
    rec["generators"] = gens;
    std::cout << rec.dump() << "\n";
    if (pairs) {
        auto rep = verify_pair_transitivity(in.graph, gd);
        std::cout << report_json(rep).dump() << "\n";
        // canonical class table over unordered pairs of distinct edges
        auto edges = in.graph.edges();
        std::map<std::array<int, 4>, long long> table;
        for (std::size_t e = 0; e < edges.size(); e++)
            for (std::size_t f = e + 1; f < edges.size(); f++)
                table[pair_profile(in.graph, edges[e], edges[f]).canonical]++;
        json trec;
        trec["pair_classes"] = json::array();
        for (const auto& [profile, cnt] : table)
            trec["pair_classes"].push_back({{"profile", profile}, {"pairs", cnt}});
        std::cout << trec.dump() << "\n";
        if (!rep.passed()) return 1;
    }
    std::cerr << "|Aut| = " << gd.order << ", vertex orbits " << gd.vertex_orbits.size()
              << ", edge orbits " << gd.edge_orbits.size() << "\n";
    return 0;
}

int cmd_verify_lovasz(const InputGraph& in, const std::string& mode_str, int jobs) {
    LovaszMode mode = mode_str == "orbit" ? LovaszMode::orbit_reduced : LovaszMode::brute;
    LovaszOptions opt;
    opt.jobs = jobs;
    auto rep = verify_lovasz_property(in.graph, mode, opt);
    for (const auto& f : rep.failures) {
        json rec;
        rec["pair"] = json::array({edge_json(f.e, in.labeled), edge_json(f.f, in.labeled)});
        rec["achieved_alpha"] = f.achieved_alpha;
        std::cout << rec.dump() << "\n";
    }
    json sum;
    sum["alpha"] = rep.alpha;
    sum["pairs_checked"] = rep.pairs_checked;
    sum["pruned"] = rep.pruned;
    sum["failures"] = rep.failures.size();
    sum["mode"] = rep.fell_back_to_brute ? "brute(fallback)"
                                         : (mode == LovaszMode::brute ? "brute" : "orbit");
    sum["passed"] = rep.passed();
    std::cout << sum.dump() << "\n";
    std::cerr << (rep.passed() ? "PASS" : "FAIL") << ": alpha " << rep.alpha << ", "
              << rep.pairs_checked << " pairs, " << rep.failures.size() << " failures\n";
    return rep.passed() ? 0 : 1;
}

int cmd_verify_paper() {
    auto bs = build_biggs_smith();
    bool all = true;
    auto emit = [&](const VerificationReport& rep) {
        std::cout << report_json(rep).dump() << "\n";
        std::cerr << (rep.passed() ? "PASS " : "FAIL ") << rep.subject << "\n";
        all = all && rep.passed();
    };
    emit(verify_level_set_properties(bs.graph));
    emit(verify_acycle_geodesics(bs));
    emit(verify_displaced_paths(bs));
    emit(verify_case_certificates(bs));
    emit(verify_claims(bs));
    emit(final_disjointness_check());
    return all ? 0 : 1;
}

int cmd_witness(const InputGraph& in, int k) {
    auto res = weak_conjecture_witness(in.graph, k);
    json rec;
    rec["k"] = k;
    rec["found"] = res.found();
    rec["status"] = res.status == WitnessResult::Status::found
                        ? "found"
                        : (res.status == WitnessResult::Status::exhausted ? "exhausted"
                                                                          : "budget_exceeded");
    if (res.found()) {
        json es = json::array();
        for (const auto& e : res.edges) es.push_back(edge_json(e, in.labeled));
        rec["edges"] = es;
        rec["achieved_drop"] = res.achieved_drop;
    }
    std::cout << rec.dump() << "\n";
    std::cerr << "witness " << rec["status"].get<std::string>() << "\n";
    return res.status == WitnessResult::Status::budget_exceeded ? 1 : 0;
}

int cmd_scan(const std::string& file, const RunConfig& cfg) {
    std::ifstream fin;
    std::istream* in = &std::cin;
    if (file != "-") {
        fin.open(file);
        if (!fin) {
            std::cerr << "cannot open " << file << "\n";
            return 2;
        }
        in = &fin;
    }
    long long records = 0, failures = 0;
    scan_census(
        *in, cfg,
        [&](const ScanRecord& rec) {
            records++;
            if (rec.property_holds && !*rec.property_holds) failures++;
            json j;
            j["source_line"] = rec.source_line;
            j["n"] = rec.n;
            j["m"] = rec.m;
            j["cubic"] = rec.cubic;
            j["colorable3"] = rec.colorable3 ? json(*rec.colorable3) : json(nullptr);
            j["alpha"] = rec.alpha ? json(*rec.alpha) : json(nullptr);
            j["property_holds"] = rec.property_holds ? json(*rec.property_holds) : json(nullptr);
            j["failing_pair"] = rec.failing_pair
                                    ? json::array({edge_json(rec.failing_pair->first, false),
                                                   edge_json(rec.failing_pair->second, false)})
                                    : json(nullptr);
            j["elapsed_ms"] = rec.elapsed_ms;
            std::cout << j.dump() << "\n";
        },
        [&](int line, const std::string& msg) {
            std::cerr << "parse error at line " << line << ": " << msg << "\n";
        });
    std::cerr << "scanned " << records << " graphs\n";
    return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
    CLI::App app{"exact verification toolkit for the Biggs-Smith graph and the Lovasz "
                 "matching-reduction property"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "emit an H-expansion as graph6 plus a label map");
    int build_n = 17;
    std::vector<int> build_offsets;
    build->add_option("--n", build_n, "number of H-copies (odd, >= 5)");
    build->add_option("--offsets", build_offsets, "four step offsets")->expected(4);

    // shared input options
    std::string builtin, input_file = "-", avoid, mode = "brute";
    int jobs = default_jobs();
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", builtin, "use a built-in graph (biggs-smith)");
        cmd->add_option("file", input_file, "graph6 input file, - for stdin");
    };

    auto* invariants = app.add_subcommand("invariants", "distance invariants of one graph");
    add_input(invariants);

    auto* alpha = app.add_subcommand("alpha", "exact independence number");
    add_input(alpha);
    alpha->add_option("--avoid", avoid, "comma-separated vertices to exclude");

    auto* autom = app.add_subcommand("autom", "automorphism group, orbits, generators");
    add_input(autom);
    bool pairs = false;
    autom->add_flag("--pairs", pairs, "add the edge-pair class table");

    auto* lovasz = app.add_subcommand("verify-lovasz", "pair-deletion property over all edge pairs");
    add_input(lovasz);
    lovasz->add_option("--mode", mode, "brute|orbit")
        ->check(CLI::IsMember({"brute", "orbit"}));
    lovasz->add_option("--jobs", jobs, "parallel jobs");

    auto* paper = app.add_subcommand("verify-paper", "replay the recorded claims end to end");

    auto* witness = app.add_subcommand("witness", "weak-conjecture witness search");
    add_input(witness);
    int k = 2;
    witness->add_option("--k", k, "matching-number drop to certify (1 or 2)");

    auto* scan = app.add_subcommand("scan", "scan a graph6 census file");
    std::string scan_file;
    RunConfig cfg;
    cfg.jobs = default_jobs();
    scan->add_option("file", scan_file, "graph6 census file, - for stdin")->required();
    scan->add_option("--jobs", cfg.jobs, "parallel jobs");
    std::string scan_mode = "brute";
    scan->add_option("--mode", scan_mode, "brute|orbit")->check(CLI::IsMember({"brute", "orbit"}));
    scan->add_option("--skip", cfg.skip, "skip the first N data lines");
    scan->add_flag("--filter-cubic", cfg.require_cubic, "only cubic graphs");
    bool filter_col = false;
    scan->add_flag("--filter-colorable", filter_col, "only 3-edge-colorable cubic graphs");
    int min_n = -1, max_n = -1;
    scan->add_option("--min-n", min_n, "minimum order");
    scan->add_option("--max-n", max_n, "maximum order");
    scan->add_option("--node-budget", cfg.node_budget, "automorphism search node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(build_n, build_offsets);
        if (invariants->parsed()) return cmd_invariants(load_input(builtin, input_file));
        if (alpha->parsed()) return cmd_alpha(load_input(builtin, input_file), avoid);
        if (autom->parsed()) return cmd_autom(load_input(builtin, input_file), pairs);
        if (lovasz->parsed()) return cmd_verify_lovasz(load_input(builtin, input_file), mode, jobs);
        if (paper->parsed()) return cmd_verify_paper();
        if (witness->parsed()) {
            if (k < 1 || k > 2) {
                std::cerr << "--k must be 1 or 2\n";
                return 2;
            }
            return cmd_witness(load_input(builtin, input_file), k);
        }
        if (scan->parsed()) {
            cfg.mode = scan_mode == "orbit" ? LovaszMode::orbit_reduced : LovaszMode::brute;
            cfg.require_colorable = filter_col;
            if (min_n >= 0) cfg.min_n = min_n;
            if (max_n >= 0) cfg.max_n = max_n;
            return cmd_scan(scan_file, cfg);
        }
    } catch (const Graph6Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const AutBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace bsv
