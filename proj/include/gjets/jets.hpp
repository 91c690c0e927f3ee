#pragma once

#include "gjets/graph.hpp"
#include "gjets/groebner.hpp"
#include "gjets/monomial_ideal.hpp"

#include <string>
#include <vector>

namespace gjets {

// The jets separator: variable x at jet order j is named "x.j". Base
// variable names must not contain it.
inline constexpr char kJetsSeparator = '.';

// Polynomial ring in n(s+1) variables x_i.j, ordered base index major and
// jet order minor.
struct JetsRing {
    RingPtr base;
    int s = 0;
    RingPtr ring;

    int var(int base_var, int order) const { return base_var * (s + 1) + order; }
    int base_var(int jets_var) const { return jets_var / (s + 1); }
    int jet_order(int jets_var) const { return jets_var % (s + 1); }
};

JetsRing make_jets_ring(const RingPtr& base, int s);

std::string jets_variable_name(const std::string& base_name, int order);

// Coefficients of t^0..t^s after substituting truncated power series for
// the variables of f and expanding modulo t^(s+1). Entry m is independent
// of s for s >= m.
std::vector<Polynomial> jets_of_polynomial(const JetsRing& jr, const Polynomial& f);

// Ideal generated by all coefficients of all generators.
PolyIdeal jets_of_ideal(const JetsRing& jr, const std::vector<Polynomial>& generators);
PolyIdeal jets_of_ideal(const PolyIdeal& ideal, int s);
PolyIdeal jets_of_ideal(const MonomialIdeal& ideal, int s);

// Graph on the jets variables with edges {x.i, y.j} for base edges {x, y}
// and i + j <= s.
Graph jets_of_graph(const Graph& g, int s);

// { x.j : x in w, 0 <= j <= s }, a minimal vertex cover of the jets graph.
// Requires w flagged minimal.
VertexCover jets_of_cover(const VertexCover& w, int s);

// <x.j : x in cover, j <= s> inside the jets ring of the cover's graph.
MonomialIdeal cover_prime_ideal(const JetsRing& jr, const std::vector<int>& cover);

// Squarefree radical of the jets of a monomial ideal, computed
// combinatorially from the terms of the coefficient polynomials.
MonomialIdeal radical_of_jets(const MonomialIdeal& ideal, int s);

// <x.i y.j : {x,y} edge, 0 <= i,j <= s>; the edge ideal of the
// principal-component graph.
MonomialIdeal principal_component_ideal(const Graph& g, int s);

Graph principal_component_graph(const Graph& g, int s);

// Ideal of the singular locus embedded at jet order s (order-0 variables
// only): the intersection over pairs of distinct minimal covers of the sum
// of their order-0 primes. Throws SmoothVariety with fewer than two covers.
PolyIdeal singular_locus_ideal(const Graph& g, int s, const Limits& limits = {});
MonomialIdeal singular_locus_monomial(const Graph& g, int s, const Limits& limits = {});

// Saturation of the jets of the edge ideal by the singular-locus ideal;
// cuts the jets variety down to the closure of the jets of the smooth
// locus. With at most one minimal cover the jets ideal is returned as is.
PolyIdeal principal_component_via_saturation(const Graph& g, int s, const Limits& limits = {});

// Intersection of the cover primes <jets of W> over all minimal covers;
// equal to principal_component_ideal.
MonomialIdeal pc_as_cover_intersection(const Graph& g, int s, const Limits& limits = {});

// complement(jets_of_graph(g, s)): base edges with i + j > s, plus all
// pairs over base non-edges including same-base pairs x.a x.b.
Graph jets_complement_edges(const Graph& g, int s);

} // namespace gjets
