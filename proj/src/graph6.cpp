#include "bsv/graph6.hpp"

namespace bsv {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sixbits_at(std::string_view s, std::size_t pos, std::size_t base) {
    if (pos >= s.size())
        throw Graph6Error(Graph6Error::Kind::truncated, base + pos, "truncated graph6 record");
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error(Graph6Error::Kind::non_printable, base + pos,
                          "byte outside graph6 range 63..126");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    // strip trailing newline/cr, tolerate them in file input
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

    std::size_t base = 0;
    if (line.starts_with(">>")) {
        if (!line.starts_with(kHeader))
            throw Graph6Error(Graph6Error::Kind::malformed_header, 0, "malformed >>graph6<< header");
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }

    std::size_t pos = 0;
    long long n;
    int b0 = sixbits_at(line, pos, base);
    if (b0 < 63) {
        n = b0;
        pos = 1;
    } else {
        // 126 marker: 18-bit order in three bytes; 126 126 means 36 bits.
        if (pos + 1 < line.size() && static_cast<unsigned char>(line[1]) == 126)
            throw Graph6Error(Graph6Error::Kind::order_too_large, base + 1,
                              "36-bit graph6 order exceeds supported cap");
        n = 0;
        for (int i = 0; i < 3; i++) n = n * 64 + sixbits_at(line, 1 + i, base);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Graph6Error(Graph6Error::Kind::order_too_large, base,
                          "graph order " + std::to_string(n) + " exceeds cap " +
                              std::to_string(kMaxVertices));

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() < pos + nbytes)
        throw Graph6Error(Graph6Error::Kind::truncated, base + line.size(),
                          "adjacency bit stream truncated");
    if (line.size() > pos + nbytes)
        throw Graph6Error(Graph6Error::Kind::trailing, base + pos + nbytes,
                          "trailing bytes after adjacency bit stream");

    // column-major upper triangle x(0,1), x(0,2), x(1,2), ..., MSB first
    long long bit = 0;
    int cur = 0;
    for (int col = 1; col < n; col++) {
        for (int row = 0; row < col; row++) {
            if (bit % 6 == 0) cur = sixbits_at(line, pos + bit / 6, base);
            if (cur & (1 << (5 - bit % 6))) g.add_edge(row, col);
            bit++;
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxVertices) throw std::invalid_argument("graph order exceeds cap");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; col++) {
        for (int row = 0; row < col; row++) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

}  // namespace bsv
