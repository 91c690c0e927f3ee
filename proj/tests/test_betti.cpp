#include "gjets/betti.hpp"
#include "gjets/corpus.hpp"
#include "gjets/error.hpp"
#include "gjets/jets.hpp"
#include "gjets/simplicial.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gjets;

namespace {

std::set<std::set<int>> facet_sets(const SimplicialComplex& c) {
    std::set<std::set<int>> out;
    for (std::uint32_t facet : c.facets) {
        std::set<int> f;
        for (int v = 0; v < c.n; ++v)
            if (facet >> v & 1)
                f.insert(v);
        out.insert(std::move(f));
    }
    return out;
}

void check_hilbert_consistency(const MonomialIdeal& ideal, const BettiTable& table) {
    std::map<int, long long> alternating;
    for (const auto& [key, value] : table.entries) {
        if (value == 0)
            continue;
        alternating[key.second] += (key.first % 2 == 0 ? value : -value);
    }
    for (auto it = alternating.begin(); it != alternating.end();)
        it = it->second == 0 ? alternating.erase(it) : std::next(it);
    CHECK(alternating == k_polynomial(ideal));
}

} // namespace

TEST_CASE("independence complex facets are the maximal independent sets") {
    Graph p4 = Graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(facet_sets(independence_complex(p4)) ==
          std::set<std::set<int>>{{0, 2}, {0, 3}, {1, 3}});
    Graph triangle = complete_graph(3);
    CHECK(facet_sets(independence_complex(triangle)) ==
          std::set<std::set<int>>{{0}, {1}, {2}});
    Graph edgeless = Graph({"a", "b", "c"}, {});
    CHECK(facet_sets(independence_complex(edgeless)) == std::set<std::set<int>>{{0, 1, 2}});
}

TEST_CASE("reduced homology of basic complexes") {
    // two isolated points
    SimplicialComplex points{2, {0b01, 0b10}};
    CHECK(reduced_homology_ranks(points) == std::vector<long>{0, 1});
    // hollow triangle
    SimplicialComplex hollow{3, {0b011, 0b101, 0b110}};
    CHECK(reduced_homology_ranks(hollow) == std::vector<long>{0, 0, 1});
    // the complex whose only face is the empty set
    SimplicialComplex empty{0, {0}};
    CHECK(reduced_homology_ranks(empty) == std::vector<long>{1});
    // a filled triangle is contractible
    SimplicialComplex filled{3, {0b111}};
    CHECK(reduced_homology_ranks(filled) == std::vector<long>{0, 0, 0, 0});
    // hollow tetrahedron boundary is a 2-sphere
    SimplicialComplex sphere{4, {0b0111, 0b1011, 0b1101, 0b1110}};
    CHECK(reduced_homology_ranks(sphere) == std::vector<long>{0, 0, 0, 1});
}

TEST_CASE("homology cap raises") {
    Limits tight;
    tight.betti_cap = 2;
    SimplicialComplex filled{3, {0b111}};
    CHECK_THROWS_AS(reduced_homology_ranks(filled, tight), CapExceeded);
}

TEST_CASE("betti table of the complete bipartite graph on 3+2 vertices") {
    MonomialIdeal ideal = edge_ideal(complete_bipartite_graph(3, 2));
    BettiTable table = betti_table(ideal);
    CHECK(table.column_totals() == std::vector<long long>{1, 6, 9, 5, 1});
    CHECK(table.get(0, 0) == 1);
    CHECK(table.get(1, 2) == 6);
    CHECK(table.get(2, 3) == 9);
    CHECK(table.get(3, 4) == 5);
    CHECK(table.get(4, 5) == 1);
    // all nonzero entries beyond the corner sit in the linear strand
    for (const auto& [key, value] : table.entries)
        if (value != 0 && key.first >= 1)
            CHECK(key.second == key.first + 1);
    check_hilbert_consistency(ideal, table);
}

TEST_CASE("betti table of the path on four vertices") {
    Graph p4 = Graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
    MonomialIdeal ideal = edge_ideal(p4);
    BettiTable table = betti_table(ideal);
    CHECK(table.entries ==
          std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
    check_hilbert_consistency(ideal, table);
    // independent oracle: inclusion-exclusion over generator subsets
    CHECK(oracle::k_polynomial_inclusion_exclusion(ideal) ==
          std::map<int, long long>{{0, 1}, {2, -3}, {3, 2}});
}

TEST_CASE("betti table of the triangle") {
    MonomialIdeal ideal = edge_ideal(complete_graph(3));
    BettiTable table = betti_table(ideal);
    CHECK(table.entries ==
          std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
    check_hilbert_consistency(ideal, table);
}

TEST_CASE("betti table of the pentagon has the hand-computed third row") {
    // the independence complex of the five-cycle is again a five-cycle, so
    // the full vertex set contributes rank-one first homology at (3, 5);
    // the five consecutive triples give the (2, 3) entry
    MonomialIdeal ideal = edge_ideal(cycle_graph(5));
    BettiTable table = betti_table(ideal);
    CHECK(table.entries == std::map<std::pair<int, int>, long long>{
                               {{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}});
    CHECK(table.to_text() == "       0 1 2 3\n"
                             "total: 1 5 5 1\n"
                             "    0: 1 . . .\n"
                             "    1: . 5 5 .\n"
                             "    2: . . . 1\n");
    check_hilbert_consistency(ideal, table);
}

TEST_CASE("betti table of the zero ideal is the corner entry") {
    MonomialIdeal zero(make_ring({"x", "y"}), {});
    BettiTable table = betti_table(zero);
    CHECK(table.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}});
}

TEST_CASE("parallel and serial evaluations agree across a corpus") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : all_graphs(n)) {
            MonomialIdeal ideal = edge_ideal(g);
            CHECK(betti_table(ideal) == betti_table_serial(ideal));
        }
    MonomialIdeal pc = principal_component_ideal(complete_bipartite_graph(3, 2), 1);
    CHECK(betti_table(pc) == betti_table_serial(pc));
}

TEST_CASE("alternating sums reproduce the independent Hilbert numerator") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : all_graphs(n)) {
            MonomialIdeal ideal = edge_ideal(g);
            BettiTable table = betti_table(ideal);
            check_hilbert_consistency(ideal, table);
            CHECK(k_polynomial(ideal) == oracle::k_polynomial_inclusion_exclusion(ideal));
        }
}

TEST_CASE("the first column counts minimal generators by degree") {
    for (const auto& g : all_graphs(4)) {
        MonomialIdeal ideal = edge_ideal(g);
        BettiTable table = betti_table(ideal);
        CHECK(table.get(1, 2) == static_cast<long long>(ideal.generators().size()));
    }
}

TEST_CASE("linear resolution detection on the named examples") {
    CHECK(has_linear_resolution(edge_ideal(complete_bipartite_graph(3, 2))));
    CHECK(has_linear_resolution(edge_ideal(cycle_graph(4)))); // complement is 2K2, chordal
    CHECK(!has_linear_resolution(edge_ideal(cycle_graph(5))));
    MonomialIdeal mixed(make_ring({"x", "y"}),
                        {Monomial::var(0), Monomial::var(1) * Monomial::var(1)});
    CHECK_THROWS_AS(has_linear_resolution(mixed), NotEquigenerated);
}

TEST_CASE("linear resolution equals cochordality on connected graphs up to five vertices") {
    for (const auto& [name, g] : all_connected_graphs(5))
        CHECK(has_linear_resolution(edge_ideal(g)) == is_cochordal(g));
}

TEST_CASE("principal components of small cochordal graphs keep linear resolutions") {
    for (const auto& [name, g] : all_connected_graphs(4)) {
        if (!is_cochordal(g))
            continue;
        for (int s : {1, 2}) {
            if (g.n() * (s + 1) > 16)
                continue;
            CHECK(has_linear_resolution(principal_component_ideal(g, s)));
            CHECK(is_cochordal(principal_component_graph(g, s)));
        }
    }
}

TEST_CASE("table text layout is byte-stable") {
    BettiTable table = betti_table(edge_ideal(complete_bipartite_graph(3, 2)));
    CHECK(table.to_text() == "       0 1 2 3 4\n"
                             "total: 1 6 9 5 1\n"
                             "    0: 1 . . . .\n"
                             "    1: . 6 9 5 1\n");
    BettiTable p4 = betti_table(edge_ideal(path_graph(4)));
    CHECK(p4.to_text() == "       0 1 2\n"
                          "total: 1 3 2\n"
                          "    0: 1 . .\n"
                          "    1: . 3 2\n");
}

TEST_CASE("module table shifts the quotient table") {
    BettiTable q = betti_table(edge_ideal(path_graph(4)));
    BettiTable m = module_betti_table(q);
    CHECK(m.entries ==
          std::map<std::pair<int, int>, long long>{{{0, 2}, 3}, {{1, 3}, 2}});
}

TEST_CASE("betti rejects non-squarefree and unit input") {
    RingPtr r = make_ring({"x", "y"});
    CHECK_THROWS_AS(betti_table(MonomialIdeal(r, {Monomial::var(0, 2)})), NotSquarefree);
    CHECK_THROWS_AS(betti_table(MonomialIdeal(r, {Monomial::one()})), Error);
    Limits tight;
    tight.betti_cap = 3;
    CHECK_THROWS_AS(betti_table(edge_ideal(complete_graph(4)), tight), CapExceeded);
}
