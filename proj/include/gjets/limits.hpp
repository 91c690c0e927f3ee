#pragma once

#include <cstddef>
#include <string>

namespace gjets {

// Resource configuration shared by the enumeration and Groebner engines.
// Exceeding a limit raises ResourceLimit / CapExceeded instead of hanging.
struct Limits {
    std::size_t max_basis = 20000; // Groebner basis element cap
    int max_pair_degree = 40;      // S-pair lcm degree cap
    int cover_cap = 25;            // vertex-cover enumeration cap
    int betti_cap = 16;            // Hochster subset-enumeration variable cap
    unsigned long seed = 0;        // randomized property-test seed
};

// Loads a limits file: a JSON object with any subset of the fields above.
Limits load_limits(const std::string& path);

} // namespace gjets
