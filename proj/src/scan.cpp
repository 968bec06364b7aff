#include "bsv/scan.hpp"

#include <chrono>
#include <string>

#include "bsv/graph6.hpp"
#include "bsv/mis.hpp"
#include "bsv/parallel.hpp"

namespace bsv {

namespace {

struct PendingLine {
    int line;
    std::string text;
};

ScanRecord process_graph(const Graph& g, int line, const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    ScanRecord rec;
    rec.source_line = line;
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.cubic = g.is_cubic();
    if (rec.cubic) {
        rec.colorable3 = three_edge_coloring(g).has_value();
        LovaszOptions opt;
        opt.jobs = 1;  // the scan parallelizes across graphs
        opt.aut_node_budget = cfg.node_budget;
        opt.stop_on_first_failure = true;
        auto report = verify_lovasz_property(g, cfg.mode, opt);
        rec.alpha = report.alpha;
        rec.property_holds = report.passed();
        if (!report.failures.empty())
            rec.failing_pair = std::make_pair(report.failures.front().e, report.failures.front().f);
    }
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace

void scan_census(std::istream& in, const RunConfig& cfg,
                 const std::function<void(const ScanRecord&)>& on_record,
                 const std::function<void(int line, const std::string& msg)>& on_error) {
    std::vector<PendingLine> lines;
    std::string raw;
    int line_no = 0, data_seen = 0;
    while (std::getline(in, raw)) {
        line_no++;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty() || raw[0] == '#') continue;
        data_seen++;
        if (data_seen <= cfg.skip) continue;
        lines.push_back({line_no, raw});
    }

    const int block = std::max(1, cfg.jobs) * 4;
    std::vector<std::optional<ScanRecord>> results(lines.size());
    std::vector<std::optional<std::string>> errors(lines.size());

    for (std::size_t base = 0; base < lines.size(); base += block) {
        const std::int64_t cnt = std::min<std::size_t>(block, lines.size() - base);
        parallel_for(cnt, cfg.jobs, [&](std::int64_t i) {
            const auto& item = lines[base + i];
            try {
                Graph g = parse_graph6(item.text);
                if (cfg.min_n && g.vertex_count() < *cfg.min_n) return;
                if (cfg.max_n && g.vertex_count() > *cfg.max_n) return;
                if (cfg.require_cubic && !g.is_cubic()) return;
                if (cfg.require_colorable &&
                    (!g.is_cubic() || !three_edge_coloring(g).has_value()))
                    return;
                results[base + i] = process_graph(g, item.line, cfg);
            } catch (const Graph6Error& e) {
                errors[base + i] = e.what();
            }
        });
        for (std::int64_t i = 0; i < cnt; i++) {
            if (errors[base + i]) on_error(lines[base + i].line, *errors[base + i]);
            if (results[base + i]) on_record(*results[base + i]);
        }
    }
}

}  // namespace bsv
