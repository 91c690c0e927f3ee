#pragma once

#include "gjets/limits.hpp"
#include "gjets/monomial_ideal.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gjets {

// Simple graph with named vertices. Vertex order is stable and determines
// every downstream output. Edges are stored as index pairs u < v, sorted
// and duplicate-free; loops are rejected.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges);

    int n() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    std::optional<int> find_vertex(const std::string& name) const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

struct VertexCover {
    Graph graph;
    std::vector<int> cover; // ascending vertex indices
    bool minimal = false;
};

// Closed path on >= 3 distinct vertices; chordless means no edge joins two
// non-adjacent cycle positions.
struct Cycle {
    std::vector<int> path;
    bool chordless = false;
};

Graph complement(const Graph& g);

bool is_cover(const Graph& g, const std::vector<int>& vertices);
bool is_minimal_cover(const Graph& g, const std::vector<int>& vertices);

// All maximal independent sets via pivoting Bron-Kerbosch, sorted by size
// then lexicographically. Requires n <= limits.cover_cap.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g, const Limits& limits = {});

// All minimal vertex covers as complements of maximal independent sets.
std::vector<VertexCover> minimal_vertex_covers(const Graph& g, const Limits& limits = {});

// Minimal covers of a hypergraph (the Bron-Kerbosch enumerator generalized
// to hyperedges): inclusion-minimal vertex sets meeting every edge. An
// empty edge admits no cover.
std::vector<std::vector<int>> minimal_hypergraph_covers(int n,
                                                        const std::vector<std::vector<int>>& edges,
                                                        const Limits& limits = {});

// Chordality via lexicographic BFS and the perfect-elimination check; on
// failure returns a witness chordless cycle of length >= 4.
std::pair<bool, std::optional<Cycle>> is_chordal(const Graph& g);

bool is_cochordal(const Graph& g);

bool is_connected(const Graph& g);

// The squarefree quadratic ideal <x_i x_j : {i,j} edge> in the ring whose
// variables are the graph's vertices.
MonomialIdeal edge_ideal(const Graph& g);

RingPtr vertex_ring(const Graph& g, MonomialOrder order = MonomialOrder::grevlex());

bool cycle_is_valid(const Graph& g, const Cycle& c);

} // namespace gjets
