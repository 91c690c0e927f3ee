#include "gjets/betti.hpp"

#include "gjets/error.hpp"
#include "gjets/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gjets {

long long BettiTable::get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [key, value] : entries)
        if (value != 0)
            pd = std::max(pd, key.first);
    return pd;
}

int BettiTable::regularity() const {
    int reg = 0;
    for (const auto& [key, value] : entries)
        if (value != 0)
            reg = std::max(reg, key.second - key.first);
    return reg;
}

std::vector<long long> BettiTable::column_totals() const {
    std::vector<long long> totals(static_cast<std::size_t>(projective_dimension()) + 1, 0);
    for (const auto& [key, value] : entries)
        totals[static_cast<std::size_t>(key.first)] += value;
    return totals;
}

std::string BettiTable::to_text() const {
    int pd = projective_dimension();
    int reg = regularity();
    std::vector<long long> totals = column_totals();
    auto cell = [&](int r, int c) -> std::string {
        long long v = get(c, c + r);
        return v == 0 ? "." : std::to_string(v);
    };
    std::size_t gutter = std::string("total:").size();
    gutter = std::max(gutter, std::to_string(reg).size() + 1);
    std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 1);
    for (int c = 0; c <= pd; ++c) {
        std::size_t w = std::to_string(c).size();
        w = std::max(w, std::to_string(totals[static_cast<std::size_t>(c)]).size());
        for (int r = 0; r <= reg; ++r)
            w = std::max(w, cell(r, c).size());
        width[static_cast<std::size_t>(c)] = w;
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };
    std::ostringstream os;
    os << std::string(gutter, ' ');
    for (int c = 0; c <= pd; ++c)
        os << " " << pad(std::to_string(c), width[static_cast<std::size_t>(c)]);
    os << "\n" << pad("total:", gutter);
    for (int c = 0; c <= pd; ++c)
        os << " "
           << pad(std::to_string(totals[static_cast<std::size_t>(c)]),
                  width[static_cast<std::size_t>(c)]);
    os << "\n";
    for (int r = 0; r <= reg; ++r) {
        os << pad(std::to_string(r) + ":", gutter);
        for (int c = 0; c <= pd; ++c)
            os << " " << pad(cell(r, c), width[static_cast<std::size_t>(c)]);
        os << "\n";
    }
    return os.str();
}

std::string BettiTable::to_json_text() const {
    std::ostringstream os;
    os << "{\"pd\": " << projective_dimension() << ", \"regularity\": " << regularity()
       << ", \"totals\": [";
    std::vector<long long> totals = column_totals();
    for (std::size_t c = 0; c < totals.size(); ++c)
        os << (c ? ", " : "") << totals[c];
    os << "], \"entries\": [";
    bool first = true;
    for (const auto& [key, value] : entries) {
        if (value == 0)
            continue;
        os << (first ? "" : ", ") << "[" << key.first << ", " << key.second << ", " << value
           << "]";
        first = false;
    }
    os << "]}";
    return os.str();
}

namespace {

struct HochsterProblem {
    int n = 0;
    std::vector<std::uint32_t> supports; // minimal non-faces of the complex
};

HochsterProblem make_problem(const MonomialIdeal& ideal, const Limits& limits) {
    if (ideal.is_unit())
        throw Error("the unit ideal has no quotient resolution");
    if (!ideal.is_squarefree())
        throw NotSquarefree("Betti tables implemented for squarefree ideals");
    int n = ideal.ring()->nvars();
    if (n > limits.betti_cap || n > 31)
        throw CapExceeded("variable count " + std::to_string(n) +
                          " exceeds the Betti evaluation cap");
    HochsterProblem p;
    p.n = n;
    for (const auto& g : ideal.generators()) {
        std::uint32_t mask = 0;
        for (int v : g.support())
            mask |= std::uint32_t(1) << v;
        p.supports.push_back(mask);
    }
    return p;
}

// Contribution of one vertex subset sigma: the reduced homology ranks of
// the induced subcomplex land at (|sigma| - k - 1, |sigma|).
void accumulate_subset(const HochsterProblem& p, std::uint32_t sigma,
                       std::map<std::pair<int, int>, long long>& table) {
    // a vertex lying in no non-face inside sigma makes the subcomplex a cone
    std::uint32_t covered = 0;
    for (std::uint32_t s : p.supports)
        if ((s & sigma) == s)
            covered |= s;
    if (covered != sigma)
        return;
    int size = __builtin_popcount(sigma);
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(size) + 1);
    std::uint32_t sub = sigma;
    for (;;) {
        bool face = true;
        for (std::uint32_t s : p.supports)
            if ((s & sub) == s) {
                face = false;
                break;
            }
        if (face)
            by_size[static_cast<std::size_t>(__builtin_popcount(sub))].push_back(sub);
        if (sub == 0)
            break;
        sub = (sub - 1) & sigma;
    }
    while (!by_size.empty() && by_size.back().empty())
        by_size.pop_back();
    for (auto& faces : by_size)
        std::sort(faces.begin(), faces.end());
    std::vector<long> homology = homology_from_faces(by_size);
    for (std::size_t k = 0; k < homology.size(); ++k) {
        if (homology[k] == 0)
            continue;
        int degree = static_cast<int>(k) - 1; // reduced homology degree
        int i = size - degree - 1;
        table[{i, size}] += homology[k];
    }
}

BettiTable run_hochster(const MonomialIdeal& ideal, const Limits& limits, bool parallel) {
    HochsterProblem p = make_problem(ideal, limits);
    std::uint32_t count = std::uint32_t(1) << p.n;
    BettiTable result;
    if (!parallel) {
        for (std::uint32_t sigma = 0; sigma < count; ++sigma)
            accumulate_subset(p, sigma, result.entries);
        return result;
    }
#ifdef _OPENMP
#pragma omp parallel
    {
        std::map<std::pair<int, int>, long long> local;
#pragma omp for schedule(dynamic, 256)
        for (long long sigma = 0; sigma < static_cast<long long>(count); ++sigma)
            accumulate_subset(p, static_cast<std::uint32_t>(sigma), local);
#pragma omp critical
        for (const auto& [key, value] : local)
            result.entries[key] += value;
    }
#else
    for (std::uint32_t sigma = 0; sigma < count; ++sigma)
        accumulate_subset(p, sigma, result.entries);
#endif
    return result;
}

} // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const Limits& limits) {
    return run_hochster(ideal, limits, true);
}

BettiTable betti_table_serial(const MonomialIdeal& ideal, const Limits& limits) {
    return run_hochster(ideal, limits, false);
}

BettiTable module_betti_table(const BettiTable& quotient_table) {
    BettiTable out;
    for (const auto& [key, value] : quotient_table.entries)
        if (key.first >= 1)
            out.entries[{key.first - 1, key.second}] = value;
    return out;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const Limits& limits) {
    if (ideal.is_zero())
        return true; // resolved by 0 -> S -> S/0 -> 0
    int d = -1;
    for (const auto& g : ideal.generators()) {
        if (d < 0)
            d = g.degree();
        else if (g.degree() != d)
            throw NotEquigenerated("generators of mixed degrees");
    }
    BettiTable table = betti_table(ideal, limits);
    for (const auto& [key, value] : table.entries) {
        if (value == 0 || key.first < 1)
            continue;
        if (key.second != key.first + d - 1)
            return false;
    }
    return true;
}

namespace {

std::map<int, long long> k_polynomial_rec(const RingPtr& ring, std::vector<Monomial> gens) {
    gens = MonomialIdeal(ring, std::move(gens)).generators();
    if (gens.empty())
        return {{0, 1}};
    if (gens.size() == 1 && gens[0].is_one())
        return {}; // S/<1> = 0
    Monomial m = gens.back();
    gens.pop_back();
    std::map<int, long long> without = k_polynomial_rec(ring, gens);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens)
        colon.push_back(g / Monomial::gcd(g, m));
    std::map<int, long long> quotient = k_polynomial_rec(ring, std::move(colon));
    int d = m.degree();
    for (const auto& [deg, coef] : quotient)
        without[deg + d] -= coef;
    for (auto it = without.begin(); it != without.end();)
        it = it->second == 0 ? without.erase(it) : std::next(it);
    return without;
}

} // namespace

std::map<int, long long> k_polynomial(const MonomialIdeal& ideal) {
    return k_polynomial_rec(ideal.ring(), ideal.generators());
}

} // namespace gjets
