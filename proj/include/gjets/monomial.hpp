#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gjets {

// Sparse power product. Entries are (variable index, exponent) pairs with
// strictly increasing variable indices and positive exponents; the empty
// entry list is the monomial 1.
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);

    static Monomial one() { return Monomial(); }
    static Monomial var(int index, int exponent = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    int degree() const;
    int exponent(int variable) const;
    int max_variable() const; // -1 for the monomial 1

    bool divides(const Monomial& other) const;
    bool is_squarefree() const;
    std::vector<int> support() const;
    Monomial radical() const; // product of the support variables

    Monomial operator*(const Monomial& other) const;
    Monomial pow(int e) const;

    // this / other; throws NotDivisible unless other divides this
    Monomial operator/(const Monomial& other) const;

    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    // Structural comparison (variable/exponent lists), used for containers.
    // Term-order comparison lives in ring.hpp.
    bool operator==(const Monomial& other) const { return entries_ == other.entries_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }
    bool operator<(const Monomial& other) const { return entries_ < other.entries_; }

private:
    std::vector<Entry> entries_;
};

} // namespace gjets
