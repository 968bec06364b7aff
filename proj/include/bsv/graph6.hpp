#ifndef BSV_GRAPH6_HPP
#define BSV_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "bsv/graph.hpp"

namespace bsv {

// Parse failure with the byte offset of the offending input position.
struct Graph6Error : std::runtime_error {
    enum class Kind { malformed_header, non_printable, truncated, order_too_large, trailing };
    Graph6Error(Kind k, std::size_t off, const std::string& what)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"),
          kind(k),
          offset(off) {}
    Kind kind;
    std::size_t offset;
};

// One-line graph6 record, optional ">>graph6<<" prefix.  Orders above
// kMaxVertices are rejected even though the format itself allows them.
Graph parse_graph6(std::string_view line);

// Canonical encoding (no header prefix).  parse_graph6(write_graph6(g)) == g.
std::string write_graph6(const Graph& g);

}  // namespace bsv

#endif
