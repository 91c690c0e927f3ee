#include "gjets/monomial_ideal.hpp"

#include "gjets/error.hpp"
#include "gjets/graph.hpp"

#include <algorithm>
#include <sstream>

namespace gjets {

namespace {

std::vector<Monomial> minimal_generators(const RingPtr& ring, std::vector<Monomial> gens) {
    // <1> swallows everything
    for (const auto& m : gens)
        if (m.is_one())
            return {Monomial::one()};
    // canonical: degree ascending, then descending under the ring order
    std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
        int c = a.degree() - b.degree();
        if (c != 0)
            return c < 0;
        return compare_monomials(ring->order(), a, b) > 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant)
            kept.push_back(m);
    }
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
    gens_ = minimal_generators(ring_, std::move(generators));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    return gens_ == other.gens_;
}

std::string MonomialIdeal::to_string() const {
    std::ostringstream os;
    os << "ring";
    for (const auto& name : ring_->variable_names())
        os << " " << name;
    os << "\n";
    if (gens_.empty())
        os << "0\n";
    for (const auto& m : gens_)
        os << Polynomial::from_monomial(ring_, m).to_string() << "\n";
    return os.str();
}

MonomialIdeal minimalize(const RingPtr& ring, const std::vector<Monomial>& generators) {
    return MonomialIdeal(ring, generators);
}

bool mono_member(const Monomial& m, const MonomialIdeal& ideal) {
    for (const auto& g : ideal.generators())
        if (g.divides(m))
            return true;
    return false;
}

bool mono_member(const Polynomial& f, const MonomialIdeal& ideal) {
    require_same_ring(f.ring(), ideal.ring());
    for (const auto& t : f.terms())
        if (!mono_member(t.monomial, ideal))
            return false;
    return true;
}

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& x : a.generators())
        for (const auto& y : b.generators())
            gens.push_back(Monomial::lcm(x, y));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mono_intersect(const std::vector<MonomialIdeal>& ideals, const RingPtr& ring) {
    if (ideals.empty())
        return MonomialIdeal(ring, {Monomial::one()}); // empty intersection is the unit ideal
    MonomialIdeal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i)
        acc = mono_intersect(acc, ideals[i]);
    return acc;
}

MonomialIdeal mono_colon(const MonomialIdeal& ideal, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        gens.push_back(g / Monomial::gcd(g, m));
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal mono_saturate(const MonomialIdeal& ideal, const Monomial& m) {
    MonomialIdeal current = ideal;
    for (;;) {
        MonomialIdeal next = mono_colon(current, m);
        if (next == current)
            return current;
        current = std::move(next);
    }
}

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal mono_radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        gens.push_back(g.radical());
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& ideal, const Limits& limits) {
    if (!ideal.is_squarefree())
        throw NotSquarefree("minimal primes implemented for squarefree ideals only");
    std::vector<std::vector<int>> edges;
    edges.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        edges.push_back(g.support());
    std::vector<std::vector<int>> covers =
        minimal_hypergraph_covers(ideal.ring()->nvars(), edges, limits);
    std::vector<MonomialIdeal> primes;
    primes.reserve(covers.size());
    for (const auto& c : covers) {
        std::vector<Monomial> gens;
        gens.reserve(c.size());
        for (int v : c)
            gens.push_back(Monomial::var(v));
        primes.emplace_back(ideal.ring(), std::move(gens));
    }
    return primes;
}

} // namespace gjets
