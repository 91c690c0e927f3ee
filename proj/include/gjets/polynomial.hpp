#pragma once

#include "gjets/monomial.hpp"
#include "gjets/rational.hpp"
#include "gjets/ring.hpp"

#include <string>
#include <vector>

namespace gjets {

struct Term {
    Monomial monomial;
    Rational coefficient;
};

// Sparse multivariate polynomial over the rationals. Terms are kept in
// strictly decreasing order under the ring's term order with nonzero
// coefficients; the zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms); // canonicalizes

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Rational value);
    static Polynomial variable(RingPtr ring, int var);
    static Polynomial from_monomial(RingPtr ring, Monomial m, Rational coef = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const; // -1 for zero

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().monomial; }
    const Rational& leading_coefficient() const { return leading_term().coefficient; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // this * (coef * mono); order-preserving, no re-sort needed
    Polynomial times_term(const Monomial& mono, const Rational& coef) const;
    Polynomial times_scalar(const Rational& coef) const;

    Polynomial monic() const; // leading coefficient scaled to 1

    // Divides every term by m; throws NotDivisible if some term is not a
    // multiple of m.
    Polynomial divide_exact(const Monomial& m) const;

    // Re-interpret in an equal-variable ring with a possibly different
    // order (terms re-sorted).
    Polynomial in_ring(const RingPtr& ring) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Deterministic ordering of whole polynomials: by leading monomials, then
// remaining terms, then coefficients. Used to canonicalize generator lists.
int compare_polynomials(const Polynomial& a, const Polynomial& b);

// Parses the text form `2*x^2*y - 3/4*z + 1` under the given ring.
// Accepts arbitrary whitespace. Throws ParseError on malformed input or
// unknown variables.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// Rebuilds f in `target` with variable i renamed to var_map[i].
Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         const std::vector<int>& var_map);

} // namespace gjets
