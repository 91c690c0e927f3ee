#pragma once

#include "gjets/graph.hpp"
#include "gjets/limits.hpp"

#include <cstdint>
#include <vector>

namespace gjets {

// Abstract simplicial complex on vertices 0..n-1, held by its facets as
// bitmasks. The facet list is an antichain; a single zero mask is the
// complex whose only face is the empty set.
struct SimplicialComplex {
    int n = 0;
    std::vector<std::uint32_t> facets;
};

// Faces are the independent sets of g; facets are the maximal ones.
SimplicialComplex independence_complex(const Graph& g, const Limits& limits = {});

// Ranks of reduced simplicial homology over the rationals, by exact
// integer rank computation of the boundary matrices. Entry k holds the
// rank of the reduced homology in degree k-1 (entry 0 is degree -1).
std::vector<long> reduced_homology_ranks(const SimplicialComplex& complex,
                                         const Limits& limits = {});

// Rank of the boundary matrix from the faces in `upper` (dimension k) to
// the faces in `lower` (dimension k-1); both sorted ascending as masks.
long boundary_rank(const std::vector<std::uint32_t>& lower,
                   const std::vector<std::uint32_t>& upper);

// Reduced homology ranks from a face list grouped by popcount (index p
// holds the faces with p vertices, so index 0 is the empty face).
std::vector<long> homology_from_faces(const std::vector<std::vector<std::uint32_t>>& by_size);

} // namespace gjets
