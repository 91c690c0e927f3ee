#include "gjets/groebner.hpp"

#include "gjets/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gjets {

PolyIdeal::PolyIdeal(RingPtr ring)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.is_zero())
            continue;
        require_same_ring(ring_, g.ring());
        gens_.push_back(std::move(g));
    }
}

PolyIdeal PolyIdeal::from_monomial_ideal(const MonomialIdeal& ideal) {
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& m : ideal.generators())
        gens.push_back(Polynomial::from_monomial(ideal.ring(), m));
    return PolyIdeal(ideal.ring(), std::move(gens));
}

std::string PolyIdeal::to_string() const {
    std::ostringstream os;
    os << "ring";
    for (const auto& name : ring_->variable_names())
        os << " " << name;
    os << "\n";
    if (gens_.empty())
        os << "0\n";
    for (const auto& g : gens_)
        os << g.to_string() << "\n";
    return os.str();
}

namespace {

std::tuple<int, int, int> order_key(const MonomialOrder& order) {
    return {order.block, order.block == 0 ? 0 : static_cast<int>(order.outer),
            static_cast<int>(order.inner)};
}

} // namespace

std::shared_ptr<const GroebnerBasis> PolyIdeal::cached_basis(const MonomialOrder& order) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->by_order.find(order_key(order));
    return it == cache_->by_order.end() ? nullptr : it->second;
}

void PolyIdeal::store_basis(std::shared_ptr<const GroebnerBasis> basis) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->by_order.emplace(order_key(basis->order), std::move(basis));
}

namespace {

// leading term of p divided away; p must be nonzero
Polynomial drop_leading(const Polynomial& p) {
    std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
    return Polynomial(p.ring(), std::move(rest));
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial p = f;
    std::vector<Term> remainder;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis)
            if (g.leading_monomial().divides(lt.monomial)) {
                reducer = &g;
                break;
            }
        if (reducer) {
            p = p - reducer->times_term(lt.monomial / reducer->leading_monomial(),
                                        lt.coefficient / reducer->leading_coefficient());
        } else {
            remainder.push_back(lt);
            p = drop_leading(p);
        }
    }
    return Polynomial(f.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    return f.times_term(l / f.leading_monomial(), Rational(1) / f.leading_coefficient()) -
           g.times_term(l / g.leading_monomial(), Rational(1) / g.leading_coefficient());
}

struct Pair {
    int i, j;
    Monomial lcm;
    int degree;
};

bool coprime(const Monomial& a, const Monomial& b) {
    return Monomial::gcd(a, b).is_one();
}

// Gebauer-Moeller update: prunes the pending pair set and queues the
// surviving pairs with the new element t.
void update_pairs(std::vector<Pair>& pairs, const std::vector<Polynomial>& basis, int t) {
    const Monomial& lm_t = basis[static_cast<std::size_t>(t)].leading_monomial();
    std::vector<Monomial> lcm_with_t;
    std::vector<char> is_coprime;
    lcm_with_t.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        const Monomial& lm_i = basis[static_cast<std::size_t>(i)].leading_monomial();
        lcm_with_t.push_back(Monomial::lcm(lm_i, lm_t));
        is_coprime.push_back(coprime(lm_i, lm_t) ? 1 : 0);
    }
    // first pass: keep (a,t) if the leading terms are coprime, or no pair
    // still pending (b > a) nor already kept divides its lcm
    std::vector<int> kept;
    for (int a = 0; a < t; ++a) {
        const Monomial& la = lcm_with_t[static_cast<std::size_t>(a)];
        bool dominated = false;
        if (!is_coprime[static_cast<std::size_t>(a)]) {
            for (int b = a + 1; b < t && !dominated; ++b)
                if (lcm_with_t[static_cast<std::size_t>(b)].divides(la))
                    dominated = true;
            for (std::size_t k = 0; k < kept.size() && !dominated; ++k)
                if (lcm_with_t[static_cast<std::size_t>(kept[k])].divides(la))
                    dominated = true;
        }
        if (!dominated)
            kept.push_back(a);
    }
    // chain criterion against the old pair set
    std::vector<Pair> surviving;
    surviving.reserve(pairs.size());
    for (const auto& p : pairs) {
        const Monomial& l12 = p.lcm;
        const Monomial& lm1 = basis[static_cast<std::size_t>(p.i)].leading_monomial();
        const Monomial& lm2 = basis[static_cast<std::size_t>(p.j)].leading_monomial();
        if (!lm_t.divides(l12) || Monomial::lcm(lm1, lm_t) == l12 ||
            Monomial::lcm(lm_t, lm2) == l12)
            surviving.push_back(p);
    }
    pairs = std::move(surviving);
    // second pass: coprime leading terms need no S-polynomial at all
    for (int a : kept) {
        if (is_coprime[static_cast<std::size_t>(a)])
            continue;
        pairs.push_back(
            {a, t, lcm_with_t[static_cast<std::size_t>(a)],
             lcm_with_t[static_cast<std::size_t>(a)].degree()});
    }
}

} // namespace

GroebnerBasis buchberger(const PolyIdeal& ideal, const MonomialOrder& order,
                         const Limits& limits) {
    if (auto cached = ideal.cached_basis(order))
        return *cached;

    RingPtr ring = with_order(ideal.ring(), order);
    std::vector<Polynomial> input;
    input.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        input.push_back(g.in_ring(ring).monic());
    std::sort(input.begin(), input.end(),
              [](const Polynomial& a, const Polynomial& b) { return compare_polynomials(a, b) < 0; });
    input.erase(std::unique(input.begin(), input.end()), input.end());

    std::vector<Polynomial> basis;
    std::vector<Pair> pairs;
    auto add_element = [&](Polynomial h) {
        basis.push_back(std::move(h));
        if (basis.size() > limits.max_basis)
            throw ResourceLimit("basis size limit exceeded");
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
    };

    for (const auto& f : input) {
        Polynomial h = reduce_full(f, basis);
        if (!h.is_zero())
            add_element(h.monic());
    }

    const MonomialOrder& ord = ring->order();
    while (!pairs.empty()) {
        // normal strategy: minimal lcm degree, then lcm, then indices
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair& a = pairs[k];
            const Pair& b = pairs[best];
            int cmp = a.degree != b.degree ? (a.degree < b.degree ? -1 : 1)
                                           : compare_monomials(ord, a.lcm, b.lcm);
            if (cmp < 0 || (cmp == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        if (p.degree > limits.max_pair_degree)
            throw ResourceLimit("pair degree limit exceeded");
        Polynomial s = s_polynomial(basis[static_cast<std::size_t>(p.i)],
                                    basis[static_cast<std::size_t>(p.j)]);
        Polynomial h = reduce_full(s, basis);
        if (!h.is_zero())
            add_element(h.monic());
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another element's leading monomial
    std::vector<int> idx(basis.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int cmp = compare_monomials(ord, basis[static_cast<std::size_t>(a)].leading_monomial(),
                                    basis[static_cast<std::size_t>(b)].leading_monomial());
        return cmp != 0 ? cmp < 0 : a < b;
    });
    std::vector<Polynomial> minimal;
    for (int i : idx) {
        const Monomial& lm = basis[static_cast<std::size_t>(i)].leading_monomial();
        bool redundant = false;
        for (const auto& k : minimal)
            if (k.leading_monomial().divides(lm)) {
                redundant = true;
                break;
            }
        if (!redundant)
            minimal.push_back(basis[static_cast<std::size_t>(i)]);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i)
                others.push_back(reduced[j]);
        reduced[i] = reduce_full(reduced[i], others).monic();
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare_monomials(ord, a.leading_monomial(), b.leading_monomial()) < 0;
    });

    GroebnerBasis result{ring, ring->order(), std::move(reduced)};
    ideal.store_basis(std::make_shared<GroebnerBasis>(result));
    return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (!basis.ring->same_variables(*f.ring()))
        throw RingMismatch("normal form requires the basis ring");
    return reduce_full(f.in_ring(basis.ring), basis.elements);
}

bool ideal_member(const Polynomial& f, const PolyIdeal& ideal, const Limits& limits) {
    if (f.is_zero())
        return true;
    GroebnerBasis gb = buchberger(ideal, ideal.ring()->order(), limits);
    return normal_form(f, gb).is_zero();
}

bool ideal_contains(const PolyIdeal& outer, const PolyIdeal& inner, const Limits& limits) {
    require_same_ring(outer.ring(), inner.ring());
    GroebnerBasis gb = buchberger(outer, outer.ring()->order(), limits);
    for (const auto& g : inner.generators())
        if (!normal_form(g, gb).is_zero())
            return false;
    return true;
}

bool ideal_equal(const PolyIdeal& a, const PolyIdeal& b, const Limits& limits) {
    return ideal_contains(a, b, limits) && ideal_contains(b, a, limits);
}

bool is_unit_ideal(const PolyIdeal& ideal, const Limits& limits) {
    GroebnerBasis gb = buchberger(ideal, ideal.ring()->order(), limits);
    for (const auto& g : gb.elements)
        if (g.is_constant() && !g.is_zero())
            return true;
    return false;
}

namespace {

RingPtr subring_without_prefix(const RingPtr& ring, int k) {
    std::vector<std::string> names(ring->variable_names().begin() + k,
                                   ring->variable_names().end());
    MonomialOrder order = MonomialOrder::grevlex();
    order.inner = ring->order().inner;
    return make_ring(std::move(names), order);
}

// adds a fresh elimination variable in front
RingPtr extend_with_aux(const RingPtr& ring, std::string base_name) {
    std::string name = std::move(base_name);
    while (ring->find(name))
        name += "_";
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(ring->nvars()) + 1);
    names.push_back(name);
    names.insert(names.end(), ring->variable_names().begin(), ring->variable_names().end());
    return make_ring(std::move(names), MonomialOrder::elimination(1));
}

std::vector<int> shifted_map(int n, int shift) {
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        map[static_cast<std::size_t>(i)] = i + shift;
    return map;
}

// single-divisor division; the remainder must vanish
Polynomial divide_by_polynomial(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero())
        throw NotDivisible("division by the zero polynomial");
    Polynomial p = g;
    std::vector<Term> quotient;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        if (!f.leading_monomial().divides(lt.monomial))
            throw NotDivisible("polynomial division with remainder");
        Monomial m = lt.monomial / f.leading_monomial();
        Rational c = lt.coefficient / f.leading_coefficient();
        quotient.push_back({m, c});
        p = p - f.times_term(m, c);
    }
    return Polynomial(g.ring(), std::move(quotient));
}

} // namespace

PolyIdeal eliminate(const PolyIdeal& ideal, int k, const Limits& limits) {
    if (k < 0 || k > ideal.ring()->nvars())
        throw Error("elimination block out of range");
    if (k == 0) {
        GroebnerBasis gb = buchberger(ideal, ideal.ring()->order(), limits);
        return PolyIdeal(ideal.ring(),
                         {gb.elements.begin(), gb.elements.end()});
    }
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::elimination(k), limits);
    RingPtr sub = subring_without_prefix(ideal.ring(), k);
    std::vector<int> map(static_cast<std::size_t>(ideal.ring()->nvars()), -1);
    for (int i = k; i < ideal.ring()->nvars(); ++i)
        map[static_cast<std::size_t>(i)] = i - k;
    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements) {
        bool free_of_block = true;
        for (const auto& t : g.terms())
            if (!t.monomial.is_one() && t.monomial.entries().front().first < k) {
                free_of_block = false;
                break;
            }
        if (free_of_block)
            gens.push_back(map_variables(g, sub, map));
    }
    return PolyIdeal(sub, std::move(gens));
}

PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b, const Limits& limits) {
    require_same_ring(a.ring(), b.ring());
    RingPtr ext = extend_with_aux(a.ring(), "t");
    std::vector<int> up = shifted_map(a.ring()->nvars(), 1);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() + b.generators().size());
    for (const auto& g : a.generators())
        gens.push_back(t * map_variables(g, ext, up));
    for (const auto& g : b.generators())
        gens.push_back(one_minus_t * map_variables(g, ext, up));
    PolyIdeal extended(ext, std::move(gens));
    PolyIdeal eliminated = eliminate(extended, 1, limits);
    // contract to the original ring (same variables, original order)
    std::vector<int> identity = shifted_map(a.ring()->nvars(), 0);
    std::vector<Polynomial> out;
    out.reserve(eliminated.generators().size());
    for (const auto& g : eliminated.generators())
        out.push_back(map_variables(g, a.ring(), identity));
    return PolyIdeal(a.ring(), std::move(out));
}

PolyIdeal colon(const PolyIdeal& ideal, const Polynomial& f, const Limits& limits) {
    if (f.is_zero())
        throw Error("colon by the zero polynomial");
    require_same_ring(ideal.ring(), f.ring());
    PolyIdeal principal(ideal.ring(), {f});
    PolyIdeal common = intersect(ideal, principal, limits);
    std::vector<Polynomial> gens;
    gens.reserve(common.generators().size());
    for (const auto& g : common.generators())
        gens.push_back(divide_by_polynomial(g, f));
    return PolyIdeal(ideal.ring(), std::move(gens));
}

PolyIdeal saturate(const PolyIdeal& ideal, const Polynomial& f, const Limits& limits) {
    if (f.is_zero())
        throw Error("saturation by the zero polynomial");
    require_same_ring(ideal.ring(), f.ring());
    RingPtr ext = extend_with_aux(ideal.ring(), "t");
    std::vector<int> up = shifted_map(ideal.ring()->nvars(), 1);
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size() + 1);
    for (const auto& g : ideal.generators())
        gens.push_back(map_variables(g, ext, up));
    Polynomial t = Polynomial::variable(ext, 0);
    gens.push_back(Polynomial::constant(ext, 1) - t * map_variables(f, ext, up));
    PolyIdeal extended(ext, std::move(gens));
    PolyIdeal eliminated = eliminate(extended, 1, limits);
    std::vector<int> identity = shifted_map(ideal.ring()->nvars(), 0);
    std::vector<Polynomial> out;
    out.reserve(eliminated.generators().size());
    for (const auto& g : eliminated.generators())
        out.push_back(map_variables(g, ideal.ring(), identity));
    return PolyIdeal(ideal.ring(), std::move(out));
}

PolyIdeal saturate(const PolyIdeal& ideal, const PolyIdeal& a, const Limits& limits) {
    require_same_ring(ideal.ring(), a.ring());
    if (a.generators().empty())
        throw Error("saturation by the zero ideal");
    // I : A^inf = intersection over generators g of A of I : g^inf
    PolyIdeal acc = saturate(ideal, a.generators().front(), limits);
    for (std::size_t i = 1; i < a.generators().size(); ++i)
        acc = intersect(acc, saturate(ideal, a.generators()[i], limits), limits);
    return acc;
}

bool radical_membership(const Polynomial& g, const PolyIdeal& ideal, const Limits& limits) {
    require_same_ring(ideal.ring(), g.ring());
    if (g.is_zero())
        return true;
    RingPtr ext = extend_with_aux(ideal.ring(), "t");
    std::vector<int> up = shifted_map(ideal.ring()->nvars(), 1);
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size() + 1);
    for (const auto& h : ideal.generators())
        gens.push_back(map_variables(h, ext, up));
    Polynomial t = Polynomial::variable(ext, 0);
    gens.push_back(Polynomial::constant(ext, 1) - t * map_variables(g, ext, up));
    return is_unit_ideal(PolyIdeal(ext, std::move(gens)), limits);
}

std::string to_macaulay2(const PolyIdeal& ideal, const std::string& ideal_name) {
    std::ostringstream os;
    os << "R = QQ[";
    const auto& names = ideal.ring()->variable_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            os << ", ";
        std::string m2name = names[i];
        std::replace(m2name.begin(), m2name.end(), '.', '_');
        os << m2name;
    }
    os << "];\n";
    os << ideal_name << " = ideal(";
    if (ideal.generators().empty())
        os << "0_R";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        if (i)
            os << ", ";
        std::string text = ideal.generators()[i].to_string();
        std::replace(text.begin(), text.end(), '.', '_');
        os << text;
    }
    os << ");\n";
    return os.str();
}

} // namespace gjets
