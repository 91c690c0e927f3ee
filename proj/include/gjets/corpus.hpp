#pragma once

#include "gjets/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gjets {

// Named graph families used by tests and verification suites.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n); // center v1 with n-1 leaves
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

// All labeled graphs on vertices v1..vn (every edge subset).
std::vector<Graph> all_graphs(int n);

// All connected labeled graphs with 1..max_n vertices; exhaustive and
// duplicate-free for a fixed labeling, no isomorphism reduction.
std::vector<std::pair<std::string, Graph>> all_connected_graphs(int max_n);

// Corpus description: comma-separated tokens
//   path:N cycle:N star:N complete:N bipartite:A,B
//   all-connected:N   (connected labeled graphs with at most N vertices)
//   file:PATH         (one graph parsed from the file)
struct Corpus {
    std::string spec;
    std::vector<std::pair<std::string, Graph>> instances;
};

Corpus parse_corpus(const std::string& spec);

} // namespace gjets
