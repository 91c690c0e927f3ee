#pragma once

#include "gjets/limits.hpp"
#include "gjets/monomial_ideal.hpp"
#include "gjets/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace gjets {

// Reduced Groebner basis: monic elements, no term of any element divisible
// by another element's leading monomial, sorted by leading monomial.
struct GroebnerBasis {
    RingPtr ring; // carries `order`
    MonomialOrder order;
    std::vector<Polynomial> elements;
};

// Finitely generated ideal with a per-order basis cache shared across
// copies. Values are immutable; the cache is internally synchronized.
class PolyIdeal {
public:
    explicit PolyIdeal(RingPtr ring);
    PolyIdeal(RingPtr ring, std::vector<Polynomial> generators); // drops zeros

    static PolyIdeal from_monomial_ideal(const MonomialIdeal& ideal);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    std::string to_string() const;

    std::shared_ptr<const GroebnerBasis> cached_basis(const MonomialOrder& order) const;
    void store_basis(std::shared_ptr<const GroebnerBasis> basis) const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::tuple<int, int, int>, std::shared_ptr<const GroebnerBasis>> by_order;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

// Buchberger with normal pair selection and the Gebauer-Moeller criteria;
// deterministic for a fixed generator list. Throws ResourceLimit when the
// basis-size or pair-degree cap is exceeded.
GroebnerBasis buchberger(const PolyIdeal& ideal, const MonomialOrder& order,
                         const Limits& limits = {});

// Remainder of full multivariate division; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_member(const Polynomial& f, const PolyIdeal& ideal, const Limits& limits = {});
bool ideal_contains(const PolyIdeal& outer, const PolyIdeal& inner, const Limits& limits = {});
bool ideal_equal(const PolyIdeal& a, const PolyIdeal& b, const Limits& limits = {});
bool is_unit_ideal(const PolyIdeal& ideal, const Limits& limits = {});

// Intersection with the subring spanned by all but the first k variables,
// via a block-order basis filtered to elements free of those variables.
PolyIdeal eliminate(const PolyIdeal& ideal, int k, const Limits& limits = {});

// Auxiliary-variable construction t*I + (1-t)*J with t eliminated.
PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b, const Limits& limits = {});

// I : <f> as (I intersect <f>) with every generator exactly divided by f.
PolyIdeal colon(const PolyIdeal& ideal, const Polynomial& f, const Limits& limits = {});

// I : f^infinity via the extended ring with 1 - t*f and t eliminated.
PolyIdeal saturate(const PolyIdeal& ideal, const Polynomial& f, const Limits& limits = {});

// I : A^infinity for an ideal A, as the intersection of the saturations by
// the generators of A.
PolyIdeal saturate(const PolyIdeal& ideal, const PolyIdeal& a, const Limits& limits = {});

// Rabinowitsch trick: g lies in the radical iff 1 in I + <1 - t*g>.
bool radical_membership(const Polynomial& g, const PolyIdeal& ideal, const Limits& limits = {});

// Macaulay2 source declaring the ring and ideal, for external cross-checks.
std::string to_macaulay2(const PolyIdeal& ideal, const std::string& ideal_name = "I");

} // namespace gjets
