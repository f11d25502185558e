#pragma once

#include <cstddef>
#include <iosfwd>

#include "mlcn/graph.hpp"

namespace mlcn {

// One "u v" line per edge, u < v, ascending.
void write_edge_list(std::ostream& out, const Graph& g);

// Reads the format above into a graph with n vertices. Throws ArgumentError
// on malformed lines, self-loops, or ids >= n.
Graph read_edge_list(std::istream& in, std::size_t n);

}  // namespace mlcn
