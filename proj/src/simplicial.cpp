#include "gjets/simplicial.hpp"

#include "gjets/error.hpp"
#include "gjets/rational.hpp"

#include <algorithm>
#include <numeric>

namespace gjets {

SimplicialComplex independence_complex(const Graph& g, const Limits& limits) {
    if (g.n() > 31)
        throw CapExceeded("independence complex limited to 31 vertices");
    SimplicialComplex c;
    c.n = g.n();
    for (const auto& s : maximal_independent_sets(g, limits)) {
        std::uint32_t mask = 0;
        for (int v : s)
            mask |= std::uint32_t(1) << v;
        c.facets.push_back(mask);
    }
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

namespace {

// Exact rank of an integer matrix by row elimination, preferring unit
// pivots (no growth) and falling back to fraction-free cross-elimination.
// Rows are divided by their content to keep entries small.
template <typename Int>
long rank_eliminate(std::vector<std::vector<Int>>& m);

bool mul_overflow(long long a, long long b, long long* out) {
    return __builtin_mul_overflow(a, b, out);
}
bool sub_overflow(long long a, long long b, long long* out) {
    return __builtin_sub_overflow(a, b, out);
}

struct Overflow {};

void row_reduce_gcd(std::vector<long long>& row) {
    long long g = 0;
    for (long long x : row)
        g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : row)
            x /= g;
}

void row_reduce_gcd(std::vector<Integer>& row) {
    Integer g = 0;
    for (const auto& x : row)
        g = ::gcd(g, x);
    if (g > 1)
        for (auto& x : row)
            x /= g;
}

template <typename Int>
long rank_eliminate(std::vector<std::vector<Int>>& m) {
    if (m.empty() || m[0].empty())
        return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // prefer a +-1 pivot in this column
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][col] == 1 || m[r][col] == -1) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            for (std::size_t r = rank; r < rows; ++r)
                if (m[r][col] != 0) {
                    pivot = r;
                    break;
                }
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        const Int p = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            Int e = m[r][col];
            if (e == 0)
                continue;
            if constexpr (std::is_same_v<Int, long long>) {
                for (std::size_t c = col; c < cols; ++c) {
                    long long a, b, d;
                    if (mul_overflow(m[r][c], p, &a) || mul_overflow(m[rank][c], e, &b) ||
                        sub_overflow(a, b, &d))
                        throw Overflow{};
                    m[r][c] = d;
                }
            } else {
                for (std::size_t c = col; c < cols; ++c)
                    m[r][c] = m[r][c] * p - m[rank][c] * e;
            }
            row_reduce_gcd(m[r]);
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

} // namespace

long boundary_rank(const std::vector<std::uint32_t>& lower,
                   const std::vector<std::uint32_t>& upper) {
    if (lower.empty() || upper.empty())
        return 0;
    // rows = upper faces, columns = lower faces; rank is side-agnostic
    std::vector<std::vector<long long>> m(upper.size(),
                                          std::vector<long long>(lower.size(), 0));
    for (std::size_t r = 0; r < upper.size(); ++r) {
        std::uint32_t face = upper[r];
        int position = 0;
        for (std::uint32_t rest = face; rest; rest &= rest - 1, ++position) {
            std::uint32_t bit = rest & (~rest + 1);
            std::uint32_t sub = face & ~bit;
            auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            if (it == lower.end() || *it != sub)
                throw Error("boundary face missing from the complex");
            m[r][static_cast<std::size_t>(it - lower.begin())] = (position % 2 == 0) ? 1 : -1;
        }
    }
    try {
        return rank_eliminate(m);
    } catch (const Overflow&) {
        std::vector<std::vector<Integer>> big(m.size());
        for (std::size_t r = 0; r < m.size(); ++r) {
            big[r].reserve(m[r].size());
            for (long long x : m[r])
                big[r].emplace_back(static_cast<long>(x));
        }
        return rank_eliminate(big);
    }
}

std::vector<long> homology_from_faces(const std::vector<std::vector<std::uint32_t>>& by_size) {
    // entry k of the result is the reduced homology rank in degree k-1
    int top = static_cast<int>(by_size.size());
    std::vector<long> ranks(static_cast<std::size_t>(top) + 1, 0); // boundary ranks, index = face size
    for (int p = 1; p < top; ++p)
        ranks[static_cast<std::size_t>(p)] =
            boundary_rank(by_size[static_cast<std::size_t>(p - 1)],
                          by_size[static_cast<std::size_t>(p)]);
    std::vector<long> homology;
    homology.reserve(static_cast<std::size_t>(top));
    for (int p = 0; p < top; ++p) {
        long faces = static_cast<long>(by_size[static_cast<std::size_t>(p)].size());
        long h = faces - ranks[static_cast<std::size_t>(p)] - ranks[static_cast<std::size_t>(p) + 1];
        homology.push_back(h);
    }
    return homology;
}

std::vector<long> reduced_homology_ranks(const SimplicialComplex& complex, const Limits& limits) {
    if (complex.n > limits.betti_cap)
        throw CapExceeded("complex exceeds the homology vertex cap");
    if (complex.facets.empty())
        return {}; // void complex: no faces at all
    std::vector<char> is_face(std::size_t(1) << complex.n, 0);
    for (std::uint32_t facet : complex.facets) {
        std::uint32_t sub = facet;
        for (;;) {
            is_face[sub] = 1;
            if (sub == 0)
                break;
            sub = (sub - 1) & facet;
        }
    }
    int top = 0;
    for (std::uint32_t facet : complex.facets)
        top = std::max(top, __builtin_popcount(facet));
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(top) + 1);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << complex.n); ++mask)
        if (is_face[mask])
            by_size[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    return homology_from_faces(by_size);
}

} // namespace gjets
