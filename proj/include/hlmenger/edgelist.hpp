#pragma once

#include <string>
#include <string_view>

#include "hlmenger/graph.hpp"

namespace hlmenger {

// Text interchange format shared by every CLI subcommand:
//
//   p <n_vertices> <n_edges>
//   e <u> <v>            one per edge, 0-based, ascending canonical order
//   l <v> <label>        optional, one per vertex
//
// Lines starting with `c` are comments. Labels are single tokens (bit strings
// for hypercube-like networks, `<a>-<b>` pairs for line graphs).
std::string to_edge_list(const Graph& g);

// Throws Error{Parse} with a line number, or the graph construction errors
// for bad edges.
Graph parse_edge_list(std::string_view text);

}  // namespace hlmenger
