#pragma once

#include <iosfwd>
#include <string>

#include "strongdom/graph.hpp"

namespace strongdom {

// Text graph format, one record per line (blank lines are skipped):
//
//   n <count>        header, must come first
//   l <id> <label>   optional; at most one per id
//   e <a> <b>        undirected edge, 0-based ids, a != b
//
// Any other line type is rejected. Writing emits the canonical form: the
// header, one label line per vertex in id order, then the sorted edge list;
// read(write(g)) reproduces g exactly, and a second write is byte-identical.
//
// Files ending in .json (or streams starting with '{') use the structured
// form instead: {"n": int, "edges": [[a,b],...], "labels": [s,...]}.

Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path);

Graph parse_graph_text(std::istream& in, const std::string& origin = "<stream>");
Graph parse_graph_json(const std::string& text, const std::string& origin = "<stream>");

std::string to_text(const Graph& g);
std::string to_json_string(const Graph& g);

} // namespace strongdom
