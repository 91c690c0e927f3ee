#pragma once

#include "gjets/limits.hpp"
#include "gjets/monomial_ideal.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gjets {

// Graded Betti numbers of a quotient S/I, indexed by (homological degree
// i, internal degree j). Only nonzero entries are stored.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    long long get(int i, int j) const;
    int projective_dimension() const; // largest i with a nonzero entry
    int regularity() const;           // largest j - i
    std::vector<long long> column_totals() const;

    // Columns are homological degrees, rows are j - i, with a total row
    // and dots for zeros. Byte-stable.
    std::string to_text() const;
    std::string to_json_text() const;

    bool operator==(const BettiTable& other) const { return entries == other.entries; }
};

// Graded Betti table of S/I over the rationals via Hochster's formula,
// summing reduced homology ranks of induced subcomplexes of the
// Stanley-Reisner complex over all vertex subsets. Requires I squarefree
// and proper, with at most limits.betti_cap variables. Subset
// contributions are evaluated in parallel; the result is deterministic.
BettiTable betti_table(const MonomialIdeal& ideal, const Limits& limits = {});

// Single-threaded reference evaluation of the same sum.
BettiTable betti_table_serial(const MonomialIdeal& ideal, const Limits& limits = {});

// Betti table of the module I itself: beta_i(I) = beta_{i+1}(S/I).
BettiTable module_betti_table(const BettiTable& quotient_table);

// True iff all nonzero beta_{i,j} with i >= 1 sit on the line
// j = i + d - 1, where d is the common generator degree. Throws
// NotEquigenerated for mixed generator degrees; the zero ideal passes.
bool has_linear_resolution(const MonomialIdeal& ideal, const Limits& limits = {});

// Numerator of the Hilbert series of S/I (the K-polynomial), computed by
// the colon recursion on monomial generators; degree -> coefficient.
// Independent of the homology route: for every j the alternating sum
// over i of (-1)^i beta_{i,j} must reproduce it.
std::map<int, long long> k_polynomial(const MonomialIdeal& ideal);

} // namespace gjets
