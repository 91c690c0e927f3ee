#pragma once

#include "gjets/limits.hpp"
#include "gjets/polynomial.hpp"

#include <string>
#include <vector>

namespace gjets {

// Monomial ideal held by its unique minimal generating set, sorted
// ascending under the ring's term order. Supports the closed-form
// (Groebner-free) operations available for monomial ideals.
class MonomialIdeal {
public:
    explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
    MonomialIdeal(RingPtr ring, std::vector<Monomial> generators); // minimalizes

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_squarefree() const;

    bool operator==(const MonomialIdeal& other) const;
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    std::string to_string() const; // one generator per line after a ring header

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

// Divisibility-minimal subset generating the same ideal.
MonomialIdeal minimalize(const RingPtr& ring, const std::vector<Monomial>& generators);

bool mono_member(const Monomial& m, const MonomialIdeal& ideal);
// Every term's monomial must be divisible by some generator.
bool mono_member(const Polynomial& f, const MonomialIdeal& ideal);

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_intersect(const std::vector<MonomialIdeal>& ideals, const RingPtr& ring);

MonomialIdeal mono_colon(const MonomialIdeal& ideal, const Monomial& m);
// Iterates the colon until it stabilizes.
MonomialIdeal mono_saturate(const MonomialIdeal& ideal, const Monomial& m);

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal mono_radical(const MonomialIdeal& ideal);

// Minimal primes of a squarefree monomial ideal, each generated by
// variables. Computed as the minimal covers of the hypergraph whose edges
// are the generators' supports. Throws NotSquarefree otherwise.
std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& ideal, const Limits& limits = {});

} // namespace gjets
