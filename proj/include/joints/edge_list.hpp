#pragma once

#include "joints/graph.hpp"

#include <iosfwd>
#include <string>

namespace joints {

// Text format: first line "n m", then m lines "u v" (0-based, u < v, sorted on
// write). Blank lines and lines starting with '#' are ignored on read.

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace joints
