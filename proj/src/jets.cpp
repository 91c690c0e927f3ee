#include "gjets/jets.hpp"

#include "gjets/error.hpp"

#include <algorithm>

namespace gjets {

std::string jets_variable_name(const std::string& base_name, int order) {
    return base_name + kJetsSeparator + std::to_string(order);
}

JetsRing make_jets_ring(const RingPtr& base, int s) {
    if (s < 0)
        throw Error("negative jet order");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(base->nvars()) * static_cast<std::size_t>(s + 1));
    for (const auto& name : base->variable_names()) {
        if (name.find(kJetsSeparator) != std::string::npos)
            throw Error("base variable name contains the jets separator: " + name);
        for (int j = 0; j <= s; ++j)
            names.push_back(jets_variable_name(name, j));
    }
    JetsRing jr;
    jr.base = base;
    jr.s = s;
    jr.ring = make_ring(std::move(names), base->order());
    return jr;
}

namespace {

using Series = std::vector<Polynomial>; // coefficient of t^m at index m

Series series_zero(const JetsRing& jr) {
    return Series(static_cast<std::size_t>(jr.s + 1), Polynomial::zero(jr.ring));
}

Series series_mul(const JetsRing& jr, const Series& a, const Series& b) {
    Series out = series_zero(jr);
    for (int i = 0; i <= jr.s; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; i + j <= jr.s; ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero())
                continue;
            out[static_cast<std::size_t>(i + j)] =
                out[static_cast<std::size_t>(i + j)] +
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

} // namespace

std::vector<Polynomial> jets_of_polynomial(const JetsRing& jr, const Polynomial& f) {
    if (!f.ring()->same_variables(*jr.base))
        throw RingMismatch("polynomial does not live in the base ring");
    Series acc = series_zero(jr);
    for (const auto& term : f.terms()) {
        Series cur = series_zero(jr);
        cur[0] = Polynomial::constant(jr.ring, term.coefficient);
        for (const auto& [v, e] : term.monomial.entries()) {
            Series var_series = series_zero(jr);
            for (int j = 0; j <= jr.s; ++j)
                var_series[static_cast<std::size_t>(j)] =
                    Polynomial::variable(jr.ring, jr.var(v, j));
            for (int rep = 0; rep < e; ++rep)
                cur = series_mul(jr, cur, var_series);
        }
        for (int m = 0; m <= jr.s; ++m)
            acc[static_cast<std::size_t>(m)] =
                acc[static_cast<std::size_t>(m)] + cur[static_cast<std::size_t>(m)];
    }
    return acc;
}

PolyIdeal jets_of_ideal(const JetsRing& jr, const std::vector<Polynomial>& generators) {
    std::vector<Polynomial> gens;
    gens.reserve(generators.size() * static_cast<std::size_t>(jr.s + 1));
    for (const auto& f : generators)
        for (auto& alpha : jets_of_polynomial(jr, f))
            if (!alpha.is_zero())
                gens.push_back(std::move(alpha));
    return PolyIdeal(jr.ring, std::move(gens));
}

PolyIdeal jets_of_ideal(const PolyIdeal& ideal, int s) {
    return jets_of_ideal(make_jets_ring(ideal.ring(), s), ideal.generators());
}

PolyIdeal jets_of_ideal(const MonomialIdeal& ideal, int s) {
    return jets_of_ideal(PolyIdeal::from_monomial_ideal(ideal), s);
}

Graph jets_of_graph(const Graph& g, int s) {
    JetsRing jr = make_jets_ring(vertex_ring(g), s);
    std::vector<std::string> names = jr.ring->variable_names();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size() * static_cast<std::size_t>((s + 1) * (s + 2) / 2));
    for (const auto& [u, v] : g.edges())
        for (int i = 0; i <= s; ++i)
            for (int j = 0; i + j <= s; ++j)
                edges.emplace_back(jr.var(u, i), jr.var(v, j));
    return Graph(std::move(names), std::move(edges));
}

VertexCover jets_of_cover(const VertexCover& w, int s) {
    if (!w.minimal)
        throw NotMinimal("jets of a vertex cover require a minimal cover");
    Graph jets_graph = jets_of_graph(w.graph, s);
    std::vector<int> cover;
    cover.reserve(w.cover.size() * static_cast<std::size_t>(s + 1));
    for (int v : w.cover)
        for (int j = 0; j <= s; ++j)
            cover.push_back(v * (s + 1) + j);
    std::sort(cover.begin(), cover.end());
    return VertexCover{std::move(jets_graph), std::move(cover), true};
}

MonomialIdeal cover_prime_ideal(const JetsRing& jr, const std::vector<int>& cover) {
    std::vector<Monomial> gens;
    gens.reserve(cover.size() * static_cast<std::size_t>(jr.s + 1));
    for (int v : cover)
        for (int j = 0; j <= jr.s; ++j)
            gens.push_back(Monomial::var(jr.var(v, j)));
    return MonomialIdeal(jr.ring, std::move(gens));
}

MonomialIdeal radical_of_jets(const MonomialIdeal& ideal, int s) {
    JetsRing jr = make_jets_ring(ideal.ring(), s);
    std::vector<Monomial> gens;
    for (const auto& m : ideal.generators()) {
        Polynomial f = Polynomial::from_monomial(ideal.ring(), m);
        for (const auto& alpha : jets_of_polynomial(jr, f))
            for (const auto& term : alpha.terms())
                gens.push_back(term.monomial.radical());
    }
    return MonomialIdeal(jr.ring, std::move(gens));
}

MonomialIdeal principal_component_ideal(const Graph& g, int s) {
    JetsRing jr = make_jets_ring(vertex_ring(g), s);
    std::vector<Monomial> gens;
    gens.reserve(g.edges().size() * static_cast<std::size_t>((s + 1) * (s + 1)));
    for (const auto& [u, v] : g.edges())
        for (int i = 0; i <= s; ++i)
            for (int j = 0; j <= s; ++j)
                gens.push_back(Monomial::var(jr.var(u, i)) * Monomial::var(jr.var(v, j)));
    return MonomialIdeal(jr.ring, std::move(gens));
}

Graph principal_component_graph(const Graph& g, int s) {
    JetsRing jr = make_jets_ring(vertex_ring(g), s);
    std::vector<std::string> names = jr.ring->variable_names();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size() * static_cast<std::size_t>((s + 1) * (s + 1)));
    for (const auto& [u, v] : g.edges())
        for (int i = 0; i <= s; ++i)
            for (int j = 0; j <= s; ++j)
                edges.emplace_back(jr.var(u, i), jr.var(v, j));
    return Graph(std::move(names), std::move(edges));
}

MonomialIdeal singular_locus_monomial(const Graph& g, int s, const Limits& limits) {
    std::vector<VertexCover> covers = minimal_vertex_covers(g, limits);
    if (covers.size() < 2)
        throw SmoothVariety("a single irreducible component has no intersection locus");
    JetsRing jr = make_jets_ring(vertex_ring(g), s);
    std::vector<MonomialIdeal> pair_sums;
    for (std::size_t a = 0; a < covers.size(); ++a)
        for (std::size_t b = a + 1; b < covers.size(); ++b) {
            std::vector<int> joint = covers[a].cover;
            joint.insert(joint.end(), covers[b].cover.begin(), covers[b].cover.end());
            std::sort(joint.begin(), joint.end());
            joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
            std::vector<Monomial> gens;
            gens.reserve(joint.size());
            for (int v : joint)
                gens.push_back(Monomial::var(jr.var(v, 0)));
            pair_sums.emplace_back(jr.ring, std::move(gens));
        }
    return mono_intersect(pair_sums, jr.ring);
}

PolyIdeal singular_locus_ideal(const Graph& g, int s, const Limits& limits) {
    return PolyIdeal::from_monomial_ideal(singular_locus_monomial(g, s, limits));
}

PolyIdeal principal_component_via_saturation(const Graph& g, int s, const Limits& limits) {
    PolyIdeal jets = jets_of_ideal(edge_ideal(g), s);
    std::vector<VertexCover> covers = minimal_vertex_covers(g, limits);
    if (covers.size() < 2)
        return jets; // smooth variety: nothing to saturate away
    PolyIdeal locus = singular_locus_ideal(g, s, limits);
    return saturate(jets, locus, limits);
}

MonomialIdeal pc_as_cover_intersection(const Graph& g, int s, const Limits& limits) {
    JetsRing jr = make_jets_ring(vertex_ring(g), s);
    std::vector<MonomialIdeal> primes;
    for (const auto& w : minimal_vertex_covers(g, limits))
        primes.push_back(cover_prime_ideal(jr, w.cover));
    return mono_intersect(primes, jr.ring);
}

Graph jets_complement_edges(const Graph& g, int s) {
    return complement(jets_of_graph(g, s));
}

} // namespace gjets
