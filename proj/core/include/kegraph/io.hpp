#pragma once

#include <string>

#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"

namespace keg {

// Edge-list text: first non-comment line "n m", then m lines "u v" with
// 0-based endpoints. '#' starts a comment; blank lines are ignored.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g); // canonical: header + sorted edges

// graph6 ASCII encoding, one graph per string (trailing newline tolerated on
// read, ">>graph6<<" header tolerated on read). Supports n up to 258047.
Graph parse_graph6(const std::string& text);
std::string format_graph6(const Graph& g);

// DIMACS: "p edge <n> <m>" then "e <u> <v>" with 1-based endpoints. Read-only.
Graph parse_dimacs(const std::string& text);

enum class GraphFormat { edge_list, graph6, dimacs };

Graph parse_graph(const std::string& text, GraphFormat format);

} // namespace keg
