#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pcf/graph.hpp"

namespace pcf {

/// edgelist: optional '#' comment lines, a header "n m", then m lines "u v".
/// dimacs:   'c' comment lines, one "p edge n m" line, then m lines "e u v".
/// Both are 1-based. Blank lines are ignored by the readers.
enum class GraphFormat { edgelist, dimacs };

GraphFormat parse_graph_format(std::string_view name);
std::string_view format_name(GraphFormat f);

/// ".col" and ".dimacs" select dimacs, anything else edgelist.
GraphFormat format_from_path(std::string_view path);

Graph load_graph(std::istream& in, GraphFormat format);
void save_graph(std::ostream& out, const Graph& g, GraphFormat format);

Graph load_graph_file(const std::string& path, GraphFormat format);

} // namespace pcf
