#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "graphpoly/graph.hpp"

namespace graphpoly {

/// graph6 line for a simple graph. Throws UnsupportedFormatError on loops or
/// parallel edges.
std::string write_graph6(const Graph& g);

/// Parses one graph6 line (an optional ">>graph6<<" header is accepted).
/// Errors carry the byte offset of the offending character.
Graph parse_graph6(std::string_view text);

/// sparse6 line; loops and parallel edges are representable.
std::string write_sparse6(const Graph& g);
Graph parse_sparse6(std::string_view text);

/// Dispatches on the leading ':' of sparse6.
Graph parse_graph_line(std::string_view text);

/// graph6 for simple graphs, sparse6 otherwise.
std::string write_graph_line(const Graph& g);

/// Reads every non-empty line of a graph6/sparse6 stream.
std::vector<Graph> read_graph_lines(std::istream& in);

}  // namespace graphpoly
