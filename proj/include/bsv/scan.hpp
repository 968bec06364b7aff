#ifndef BSV_SCAN_HPP
#define BSV_SCAN_HPP

#include <functional>
#include <istream>
#include <optional>

#include "bsv/hyper.hpp"

namespace bsv {

struct ScanRecord {
    int source_line = 0;  // 1-based line in the input
    int n = 0, m = 0;
    bool cubic = false;
    std::optional<bool> colorable3;       // cubic graphs only
    std::optional<int> alpha;             // cubic graphs only
    std::optional<bool> property_holds;   // cubic graphs only
    std::optional<std::pair<Edge, Edge>> failing_pair;  // present iff property fails
    double elapsed_ms = 0.0;
};

struct RunConfig {
    int jobs = 1;
    LovaszMode mode = LovaszMode::brute;
    std::uint64_t node_budget = 50'000'000;
    int skip = 0;  // data lines to skip before scanning
    std::optional<int> min_n, max_n;
    bool require_cubic = false;
    bool require_colorable = false;
};

// One record per selected graph, in input order regardless of parallelism.
// Parse failures go to on_error and the scan continues.
void scan_census(std::istream& in, const RunConfig& cfg,
                 const std::function<void(const ScanRecord&)>& on_record,
                 const std::function<void(int line, const std::string& msg)>& on_error);

}  // namespace bsv

#endif
