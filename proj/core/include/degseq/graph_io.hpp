#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "degseq/graph.hpp"

namespace degseq {

/// graph6 as used by nauty: size prefix, then the upper triangle column by
/// column packed six bits per printable byte. A leading ">>graph6<<" header
/// is accepted on decode; trailing newline/whitespace is ignored.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

/// Edge-list text: first non-comment line is n, then one "u v" pair per line
/// with 1-based endpoints. '#' starts a comment line.
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

/// Picks the format by content: a single-token first line that is not an
/// integer is graph6, anything else is an edge list.
Graph decode_graph_auto(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace degseq
