#include "kegraph/io.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

namespace keg {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": expected header \"n m\"");
        } else {
            int u, v;
            if (!(ls >> u >> v))
                throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": expected \"u v\"");
            if (u < 0 || u >= n || v < 0 || v >= n || u == v)
                throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": bad edge " + std::to_string(u) + " " + std::to_string(v));
            edges.push_back(make_edge(u, v));
        }
        std::string rest;
        if (ls >> rest)
            throw parse_error("edge list line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n < 0) throw parse_error("edge list: missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error("edge list: header promises " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    return Graph::from_edge_list(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";

void append_bits(std::string& out, std::uint64_t value, int bits) {
    // big-endian bit groups of 6, each offset by 63
    for (int shift = bits - 6; shift >= 0; shift -= 6)
        out.push_back(static_cast<char>(((value >> shift) & 63) + 63));
}

} // namespace

std::string format_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph6: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        append_bits(out, static_cast<std::uint64_t>(n), 18);
    }
    int bit = 0;
    std::uint64_t acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bit = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(kGraph6Header, 0) == 0) s = s.substr(std::string(kGraph6Header).size());
    if (s.empty()) throw parse_error("graph6: empty input");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw parse_error("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range");
        return c - 63;
    };
    long long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    std::vector<Edge> edges;
    int bit = 0, acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bit == 0) {
                acc = next();
                bit = 6;
            }
            --bit;
            if ((acc >> bit) & 1) edges.push_back(Edge{row, col});
        }
    }
    if (pos != s.size()) throw parse_error("graph6: trailing bytes");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0)
                throw parse_error("dimacs line " + std::to_string(lineno) +
                                  ": expected \"p edge n m\"");
        } else if (tag == "e") {
            if (n < 0)
                throw parse_error("dimacs line " + std::to_string(lineno) +
                                  ": edge before problem line");
            int u, v;
            if (!(ls >> u >> v) || u < 1 || u > n || v < 1 || v > n || u == v)
                throw parse_error("dimacs line " + std::to_string(lineno) + ": bad edge");
            edges.push_back(make_edge(u - 1, v - 1));
        } else {
            throw parse_error("dimacs line " + std::to_string(lineno) + ": unknown record \"" +
                              tag + "\"");
        }
    }
    if (n < 0) throw parse_error("dimacs: missing problem line");
    return Graph::from_edge_list(n, edges);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
    case GraphFormat::edge_list: return parse_edge_list(text);
    case GraphFormat::graph6: return parse_graph6(text);
    case GraphFormat::dimacs: return parse_dimacs(text);
    }
    throw std::invalid_argument("unknown graph format");
}

} // namespace keg
