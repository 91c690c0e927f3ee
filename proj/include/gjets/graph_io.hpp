#pragma once

#include "gjets/graph.hpp"

#include <string>

namespace gjets {

// Accepted input formats, detected from the leading non-blank byte:
//   * structured: a JSON object with "vertices" (array of strings) and
//     "edges" (array of 2-arrays of strings)
//   * DOT subset: graph [name] { a -- b; ... } with optional bare vertex
//     statements and edge chains
//   * plain edge list: one edge per line, two whitespace-separated names
// Base vertex names must not contain the jets separator '.'.
Graph parse_graph(const std::string& text);

Graph graph_from_edge_list(const std::string& text);
Graph graph_from_json(const std::string& text);
Graph graph_from_dot(const std::string& text);

// Structured form with vertices kept in ingest order.
std::string graph_to_json(const Graph& g);

// One "u v" line per edge; isolated vertices appear as single-name lines,
// which the edge-list parser accepts back.
std::string graph_to_edge_list(const Graph& g);

} // namespace gjets
