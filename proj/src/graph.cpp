#include "gjets/graph.hpp"

#include "gjets/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <set>

namespace gjets {

Graph::Graph(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)) {
    std::set<std::string> seen;
    for (const auto& name : vertices_) {
        if (name.empty())
            throw Error("empty vertex name");
        for (char c : name)
            if (!std::isprint(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)))
                throw Error("vertex name contains whitespace or unprintable character: " + name);
        if (!seen.insert(name).second)
            throw Error("duplicate vertex name: " + name);
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n() || v >= n())
            throw Error("edge references an invalid vertex index");
        if (u == v)
            throw Error("loop edge at vertex " + vertices_[static_cast<std::size_t>(u)]);
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<std::size_t>(n()), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

std::optional<int> Graph::find_vertex(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (vertices_[static_cast<std::size_t>(i)] == name)
            return i;
    return std::nullopt;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

const std::vector<int>& Graph::neighbors(int v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v))
                edges.emplace_back(u, v);
    return Graph(g.vertices(), std::move(edges));
}

bool is_cover(const Graph& g, const std::vector<int>& vertices) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : vertices)
        in[static_cast<std::size_t>(v)] = 1;
    for (const auto& [u, v] : g.edges())
        if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)])
            return false;
    return true;
}

bool is_minimal_cover(const Graph& g, const std::vector<int>& vertices) {
    if (!is_cover(g, vertices))
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::vector<int> reduced = vertices;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_cover(g, reduced))
            return false;
    }
    return true;
}

namespace {

using Mask = std::uint64_t;

void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& adj, int n,
                   std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of P|X maximizing |P & N(u)|, smallest index on ties
    int pivot = -1, best = -1;
    for (int u = 0; u < n; ++u) {
        if (!((p | x) >> u & 1))
            continue;
        int cnt = __builtin_popcountll(p & adj[static_cast<std::size_t>(u)]);
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    Mask candidates = p & ~adj[static_cast<std::size_t>(pivot)];
    for (int v = 0; v < n; ++v) {
        if (!(candidates >> v & 1))
            continue;
        Mask vm = Mask(1) << v;
        bron_kerbosch(r | vm, p & adj[static_cast<std::size_t>(v)],
                      x & adj[static_cast<std::size_t>(v)], adj, n, out);
        p &= ~vm;
        x |= vm;
    }
}

std::vector<int> mask_to_vector(Mask m, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (m >> v & 1)
            out.push_back(v);
    return out;
}

void sort_vertex_sets(std::vector<std::vector<int>>& sets) {
    std::sort(sets.begin(), sets.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
}

} // namespace

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g, const Limits& limits) {
    int n = g.n();
    if (n > limits.cover_cap || n > 63)
        throw CapExceeded("vertex count " + std::to_string(n) + " exceeds the enumeration cap");
    if (n == 0)
        return {{}};
    // maximal independent sets of g = maximal cliques of its complement
    std::vector<Mask> coadj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.has_edge(u, v))
                coadj[static_cast<std::size_t>(u)] |= Mask(1) << v;
    std::vector<Mask> found;
    Mask all = (Mask(1) << n) - 1;
    bron_kerbosch(0, all, 0, coadj, n, found);
    std::vector<std::vector<int>> out;
    out.reserve(found.size());
    for (Mask m : found)
        out.push_back(mask_to_vector(m, n));
    sort_vertex_sets(out);
    return out;
}

std::vector<VertexCover> minimal_vertex_covers(const Graph& g, const Limits& limits) {
    std::vector<std::vector<int>> independent = maximal_independent_sets(g, limits);
    std::vector<std::vector<int>> covers;
    covers.reserve(independent.size());
    for (const auto& s : independent) {
        std::vector<int> cover;
        std::size_t k = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (k < s.size() && s[k] == v)
                ++k;
            else
                cover.push_back(v);
        }
        covers.push_back(std::move(cover));
    }
    sort_vertex_sets(covers);
    std::vector<VertexCover> out;
    out.reserve(covers.size());
    for (auto& c : covers)
        out.push_back(VertexCover{g, std::move(c), true});
    return out;
}

namespace {

void transversal_branch(const std::vector<std::vector<int>>& edges, std::vector<char>& chosen,
                        std::vector<std::vector<int>>& candidates, int n) {
    int uncovered = -1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool hit = false;
        for (int v : edges[i])
            if (chosen[static_cast<std::size_t>(v)]) {
                hit = true;
                break;
            }
        if (!hit) {
            uncovered = static_cast<int>(i);
            break;
        }
    }
    if (uncovered < 0) {
        std::vector<int> set;
        for (int v = 0; v < n; ++v)
            if (chosen[static_cast<std::size_t>(v)])
                set.push_back(v);
        candidates.push_back(std::move(set));
        return;
    }
    for (int v : edges[static_cast<std::size_t>(uncovered)]) {
        chosen[static_cast<std::size_t>(v)] = 1;
        transversal_branch(edges, chosen, candidates, n);
        chosen[static_cast<std::size_t>(v)] = 0;
    }
}

} // namespace

std::vector<std::vector<int>> minimal_hypergraph_covers(int n,
                                                        const std::vector<std::vector<int>>& edges,
                                                        const Limits& limits) {
    if (n > limits.cover_cap)
        throw CapExceeded("vertex count " + std::to_string(n) + " exceeds the enumeration cap");
    std::vector<std::vector<int>> cleaned;
    for (auto e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.empty())
            return {}; // no set can meet an empty edge
        for (int v : e)
            if (v < 0 || v >= n)
                throw Error("hyperedge references an invalid vertex");
        cleaned.push_back(std::move(e));
    }
    // keep only inclusion-minimal edges; covers are unchanged
    std::sort(cleaned.begin(), cleaned.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::vector<int>> minimal_edges;
    for (const auto& e : cleaned) {
        bool redundant = false;
        for (const auto& kept : minimal_edges)
            if (std::includes(e.begin(), e.end(), kept.begin(), kept.end())) {
                redundant = true;
                break;
            }
        if (!redundant)
            minimal_edges.push_back(e);
    }
    if (minimal_edges.empty())
        return {{}};

    bool all_pairs = std::all_of(minimal_edges.begin(), minimal_edges.end(),
                                 [](const auto& e) { return e.size() == 2; });
    if (all_pairs && n <= 63) {
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            names.push_back("h" + std::to_string(i));
        std::vector<std::pair<int, int>> pair_edges;
        pair_edges.reserve(minimal_edges.size());
        for (const auto& e : minimal_edges)
            pair_edges.emplace_back(e[0], e[1]);
        Graph h(std::move(names), std::move(pair_edges));
        std::vector<std::vector<int>> out;
        for (auto& c : minimal_vertex_covers(h, limits))
            out.push_back(std::move(c.cover));
        return out;
    }

    std::vector<std::vector<int>> candidates;
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    transversal_branch(minimal_edges, chosen, candidates, n);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<std::vector<int>> out;
    for (const auto& c : candidates) {
        bool minimal = true;
        for (const auto& other : candidates)
            if (other.size() < c.size() &&
                std::includes(c.begin(), c.end(), other.begin(), other.end())) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(c);
    }
    sort_vertex_sets(out);
    return out;
}

namespace {

// Shortest a-b path avoiding N[v] \ {a, b}; empty when none exists.
std::vector<int> path_outside_neighborhood(const Graph& g, int v, int a, int b) {
    std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
    blocked[static_cast<std::size_t>(v)] = 1;
    for (int w : g.neighbors(v))
        if (w != a && w != b)
            blocked[static_cast<std::size_t>(w)] = 1;
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
    std::deque<int> queue{a};
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    seen[static_cast<std::size_t>(a)] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == b)
            break;
        for (int w : g.neighbors(u)) {
            if (blocked[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)])
                continue;
            seen[static_cast<std::size_t>(w)] = 1;
            parent[static_cast<std::size_t>(w)] = u;
            queue.push_back(w);
        }
    }
    if (!seen[static_cast<std::size_t>(b)])
        return {};
    std::vector<int> path;
    for (int u = b; u != -1; u = parent[static_cast<std::size_t>(u)])
        path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path; // a ... b
}

std::optional<Cycle> witness_from_triple(const Graph& g, int v, int a, int b) {
    std::vector<int> path = path_outside_neighborhood(g, v, a, b);
    if (path.empty())
        return std::nullopt;
    Cycle c;
    c.path.push_back(v);
    c.path.insert(c.path.end(), path.begin(), path.end());
    c.chordless = true;
    if (!cycle_is_valid(g, c))
        return std::nullopt;
    return c;
}

std::optional<Cycle> find_chordless_cycle(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        const auto& nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.has_edge(nbrs[i], nbrs[j]))
                    continue;
                auto c = witness_from_triple(g, v, nbrs[i], nbrs[j]);
                if (c)
                    return c;
            }
    }
    return std::nullopt;
}

} // namespace

bool cycle_is_valid(const Graph& g, const Cycle& c) {
    std::size_t len = c.path.size();
    if (len < 3)
        return false;
    std::set<int> distinct(c.path.begin(), c.path.end());
    if (distinct.size() != len)
        return false;
    for (std::size_t i = 0; i < len; ++i)
        if (!g.has_edge(c.path[i], c.path[(i + 1) % len]))
            return false;
    if (c.chordless) {
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = i + 2; j < len; ++j) {
                if (i == 0 && j == len - 1)
                    continue;
                if (g.has_edge(c.path[i], c.path[j]))
                    return false;
            }
    }
    return true;
}

std::pair<bool, std::optional<Cycle>> is_chordal(const Graph& g) {
    int n = g.n();
    // lexicographic BFS: number vertices n..1, always taking the largest label
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<int> number(static_cast<std::size_t>(n), 0);
    std::vector<int> by_number(static_cast<std::size_t>(n) + 1, -1);
    std::vector<char> numbered(static_cast<std::size_t>(n), 0);
    for (int i = n; i >= 1; --i) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (numbered[static_cast<std::size_t>(v)])
                continue;
            if (pick < 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(pick)])
                pick = v;
        }
        numbered[static_cast<std::size_t>(pick)] = 1;
        number[static_cast<std::size_t>(pick)] = i;
        by_number[static_cast<std::size_t>(i)] = pick;
        for (int w : g.neighbors(pick))
            if (!numbered[static_cast<std::size_t>(w)])
                label[static_cast<std::size_t>(w)].push_back(i);
    }
    // perfect elimination check in increasing number order: the later
    // neighbors of each vertex, minus its parent, must all see the parent
    for (int i = 1; i <= n; ++i) {
        int v = by_number[static_cast<std::size_t>(i)];
        int parent = -1;
        for (int w : g.neighbors(v))
            if (number[static_cast<std::size_t>(w)] > i &&
                (parent < 0 ||
                 number[static_cast<std::size_t>(w)] < number[static_cast<std::size_t>(parent)]))
                parent = w;
        if (parent < 0)
            continue;
        for (int w : g.neighbors(v)) {
            if (w == parent || number[static_cast<std::size_t>(w)] <= i)
                continue;
            if (!g.has_edge(parent, w)) {
                auto witness = witness_from_triple(g, v, parent, w);
                if (!witness)
                    witness = find_chordless_cycle(g);
                return {false, witness};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_cochordal(const Graph& g) { return is_chordal(complement(g)).first; }

bool is_connected(const Graph& g) {
    if (g.n() <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                queue.push_back(w);
            }
    }
    return count == g.n();
}

RingPtr vertex_ring(const Graph& g, MonomialOrder order) {
    return make_ring(g.vertices(), order);
}

MonomialIdeal edge_ideal(const Graph& g) {
    RingPtr ring = vertex_ring(g);
    std::vector<Monomial> gens;
    gens.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        gens.push_back(Monomial::var(u) * Monomial::var(v));
    return MonomialIdeal(std::move(ring), std::move(gens));
}

} // namespace gjets
