#include "gjets/ring.hpp"

#include "gjets/error.hpp"

#include <sstream>

namespace gjets {

namespace {

// a > b iff the last variable where they differ carries the smaller
// exponent in a (ties broken by total degree first).
int cmp_grevlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    auto ia = a.entries().rbegin(), ea = a.entries().rend();
    auto ib = b.entries().rbegin(), eb = b.entries().rend();
    while (ia != ea || ib != eb) {
        int va = (ia != ea) ? ia->first : -1;
        int vb = (ib != eb) ? ib->first : -1;
        if (va > vb)
            return -1; // a has a positive exponent high up where b has none
        if (vb > va)
            return 1;
        if (ia->second != ib->second)
            return ia->second > ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        // missing entry = exponent 0 at an index past the other list's head
        if (ib == eb)
            return 1;
        if (ia == ea)
            return -1;
        if (ia->first != ib->first)
            return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second)
            return ia->second > ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    return 0;
}

int cmp_plain(OrderKind kind, const Monomial& a, const Monomial& b) {
    return kind == OrderKind::GrevLex ? cmp_grevlex(a, b) : cmp_lex(a, b);
}

Monomial restrict_below(const Monomial& m, int k) {
    std::vector<Monomial::Entry> entries;
    for (const auto& e : m.entries())
        if (e.first < k)
            entries.push_back(e);
    return Monomial(std::move(entries));
}

Monomial restrict_from(const Monomial& m, int k) {
    std::vector<Monomial::Entry> entries;
    for (const auto& e : m.entries())
        if (e.first >= k)
            entries.push_back(e);
    return Monomial(std::move(entries));
}

} // namespace

int compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    if (order.block == 0)
        return cmp_plain(order.inner, a, b);
    int head = cmp_plain(order.outer, restrict_below(a, order.block), restrict_below(b, order.block));
    if (head != 0)
        return head;
    return cmp_plain(order.inner, restrict_from(a, order.block), restrict_from(b, order.block));
}

std::string MonomialOrder::describe() const {
    auto kind_name = [](OrderKind k) { return k == OrderKind::GrevLex ? "grevlex" : "lex"; };
    if (block == 0)
        return kind_name(inner);
    std::ostringstream os;
    os << "block(" << block << ", " << kind_name(outer) << ", " << kind_name(inner) << ")";
    return os.str();
}

Ring::Ring(std::vector<std::string> variables, MonomialOrder order)
    : names_(std::move(variables)), order_(order) {
    for (int i = 0; i < nvars(); ++i) {
        if (names_[static_cast<std::size_t>(i)].empty())
            throw Error("empty variable name");
        if (!index_.emplace(names_[static_cast<std::size_t>(i)], i).second)
            throw Error("duplicate variable name: " + names_[static_cast<std::size_t>(i)]);
    }
}

std::optional<int> Ring::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

RingPtr make_ring(std::vector<std::string> variables, MonomialOrder order) {
    return std::make_shared<Ring>(std::move(variables), order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    if (ring->order() == order)
        return ring;
    return make_ring(ring->variable_names(), order);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b)
        return;
    if (!a || !b || !(*a == *b))
        throw RingMismatch("operands live in different rings");
}

} // namespace gjets
