#include "gjets/corpus.hpp"
#include "gjets/error.hpp"
#include "gjets/graph.hpp"
#include "gjets/graph_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace gjets;

namespace {

Graph from_edges(std::vector<std::string> names, std::vector<std::pair<int, int>> edges) {
    return Graph(std::move(names), std::move(edges));
}

std::vector<std::vector<int>> cover_sets(const std::vector<VertexCover>& covers) {
    std::vector<std::vector<int>> out;
    for (const auto& w : covers)
        out.push_back(w.cover);
    return out;
}

} // namespace

TEST_CASE("complement of the path on four vertices is again a path") {
    Graph g = from_edges({"x", "y", "z", "w"}, {{0, 1}, {1, 2}, {2, 3}});
    Graph c = complement(g);
    std::vector<std::pair<int, int>> expected = {{0, 2}, {0, 3}, {1, 3}}; // xz, xw, yw
    CHECK(c.edges() == expected);
    CHECK(complement(complete_graph(4)).edge_count() == 0);
}

TEST_CASE("complement is an involution on all graphs with up to five vertices") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : all_graphs(n))
            CHECK(complement(complement(g)) == g);
}

TEST_CASE("minimal covers of the star match the center/leaves split") {
    Graph star = from_edges({"v1", "v2", "v3", "v4", "v5"},
                            {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto covers = cover_sets(minimal_vertex_covers(star));
    CHECK(covers == std::vector<std::vector<int>>{{0}, {1, 2, 3, 4}});
}

TEST_CASE("minimal covers of the five-cycle with crossing edges") {
    // edges v1v3, v1v4, v2v4, v2v5, v3v5
    Graph g = from_edges({"v1", "v2", "v3", "v4", "v5"},
                         {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
    auto covers = cover_sets(minimal_vertex_covers(g));
    std::vector<std::vector<int>> expected = {
        {0, 1, 2}, {0, 1, 4}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4}};
    CHECK(covers == expected);

    // adding the edge v4v5 loses exactly the cover {v1, v2, v3}
    Graph g2 = from_edges({"v1", "v2", "v3", "v4", "v5"},
                          {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    auto covers2 = cover_sets(minimal_vertex_covers(g2));
    std::vector<std::vector<int>> expected2 = {{0, 1, 4}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4}};
    CHECK(covers2 == expected2);
}

TEST_CASE("cover enumeration agrees with brute force on all graphs up to six vertices") {
    for (int n = 0; n <= 6; ++n) {
        if (n == 0) {
            CHECK(cover_sets(minimal_vertex_covers(Graph({}, {}))) ==
                  std::vector<std::vector<int>>{{}});
            continue;
        }
        for (const auto& g : all_graphs(n)) {
            auto covers = cover_sets(minimal_vertex_covers(g));
            CHECK(covers == oracle::minimal_covers(g));
            for (const auto& c : covers)
                CHECK(is_minimal_cover(g, c));
        }
    }
}

TEST_CASE("every cover vertex sees an uncovered neighbor, and no vertex is in all covers") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs(n)) {
            auto covers = minimal_vertex_covers(g);
            for (const auto& w : covers) {
                std::set<int> in(w.cover.begin(), w.cover.end());
                for (int x : w.cover) {
                    bool outside_neighbor = false;
                    for (int y : g.neighbors(x))
                        if (!in.count(y)) {
                            outside_neighbor = true;
                            break;
                        }
                    CHECK(outside_neighbor);
                }
            }
            if (g.edge_count() == 0)
                continue;
            for (int v = 0; v < n; ++v) {
                bool in_all = true;
                for (const auto& w : covers)
                    if (!std::binary_search(w.cover.begin(), w.cover.end(), v)) {
                        in_all = false;
                        break;
                    }
                CHECK(!in_all);
            }
        }
}

TEST_CASE("cover cap raises") {
    CHECK_THROWS_AS(minimal_vertex_covers(complete_graph(26)), CapExceeded);
    Limits tight;
    tight.cover_cap = 3;
    CHECK_THROWS_AS(minimal_vertex_covers(complete_graph(4), tight), CapExceeded);
}

TEST_CASE("four-cycle is the smallest non-chordal graph") {
    Graph c4 = cycle_graph(4);
    auto [chordal, witness] = is_chordal(c4);
    CHECK(!chordal);
    REQUIRE(witness.has_value());
    CHECK(witness->path.size() == 4);
    CHECK(witness->chordless);
    CHECK(cycle_is_valid(c4, *witness));

    Graph chorded = from_edges({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    CHECK(is_chordal(chorded).first);
}

TEST_CASE("complement of the length-three path is chordal, so the path is cochordal") {
    Graph p4 = from_edges({"x", "y", "z", "w"}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_chordal(complement(p4)).first);
    CHECK(is_cochordal(p4));
    CHECK(is_cochordal(complete_bipartite_graph(3, 2)));
    CHECK(!is_cochordal(cycle_graph(5))); // self-complementary chordless five-cycle
}

TEST_CASE("chordality matches brute force on all graphs with up to six vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs(n)) {
            auto [chordal, witness] = is_chordal(g);
            CHECK(chordal == !oracle::has_chordless_cycle(g));
            if (!chordal) {
                REQUIRE(witness.has_value());
                CHECK(witness->path.size() >= 4);
                CHECK(witness->chordless);
                CHECK(cycle_is_valid(g, *witness));
            }
        }
}

TEST_CASE("chordality matches brute force on random seven-vertex graphs") {
    oracle::Rng rng(2026);
    std::vector<std::string> names = {"a", "b", "c", "d", "e", "f", "g"};
    for (int trial = 0; trial < 4000; ++trial) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (rng.below(2))
                    edges.emplace_back(i, j);
        Graph g(names, std::move(edges));
        auto [chordal, witness] = is_chordal(g);
        CHECK(chordal == !oracle::has_chordless_cycle(g));
        if (!chordal) {
            REQUIRE(witness.has_value());
            CHECK(cycle_is_valid(g, *witness));
        }
    }
}

TEST_CASE("edge ideal generators are the edge monomials") {
    Graph star = star_graph(5);
    MonomialIdeal ideal = edge_ideal(star);
    CHECK(ideal.generators().size() == 4);
    for (const auto& m : ideal.generators()) {
        CHECK(m.degree() == 2);
        CHECK(m.is_squarefree());
        CHECK(m.exponent(0) == 1); // the center divides every generator
    }
    CHECK(edge_ideal(Graph({"a", "b"}, {})).is_zero());
    CHECK(edge_ideal(complete_graph(3)).generators().size() == 3);
}

TEST_CASE("graph formats parse and round-trip") {
    Graph g1 = parse_graph("x y\ny z\n");
    CHECK(g1.n() == 3);
    CHECK(g1.edge_count() == 2);

    Graph g2 = parse_graph(R"({"vertices": ["a", "b", "c"], "edges": [["a","b"], ["b","c"]]})");
    CHECK(g2.n() == 3);
    CHECK(g2.edge_count() == 2);

    Graph g3 = parse_graph("graph { a -- b; b -- c; d; }");
    CHECK(g3.n() == 4);
    CHECK(g3.edge_count() == 2);
    CHECK(g3.find_vertex("d").has_value());

    Graph back = parse_graph(graph_to_json(g3));
    CHECK(back == g3);
    CHECK(parse_graph(graph_to_edge_list(g3)) == g3);

    CHECK_THROWS_AS(parse_graph("x.0 y\n"), ParseError); // reserved separator
    CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a"], "edges": [["a","b"]]})"), ParseError);
}

TEST_CASE("loops and bad indices are rejected") {
    CHECK_THROWS(Graph({"a", "b"}, {{0, 0}}));
    CHECK_THROWS(Graph({"a", "b"}, {{0, 5}}));
    CHECK_THROWS(Graph({"a", "a"}, {}));
}

TEST_CASE("malformed input raises a parse error instead of crashing") {
    oracle::Rng rng(777);
    const std::string alphabet = "abxy {}--;[]\",.:0123456789\n^*+";
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        int len = rng.below(40);
        for (int k = 0; k < len; ++k)
            text += alphabet[static_cast<std::size_t>(rng.below(static_cast<int>(alphabet.size())))];
        try {
            Graph g = parse_graph(text);
            CHECK(g.n() >= 0); // valid by accident is fine
        } catch (const Error&) {
            // rejected inputs must fail through the error hierarchy
        }
    }
}
