#include "gjets/monomial.hpp"

#include "gjets/error.hpp"

#include <algorithm>

namespace gjets {

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    // merge duplicates, drop zero exponents
    std::vector<Entry> merged;
    for (const auto& [v, e] : entries_) {
        if (v < 0)
            throw Error("negative variable index in monomial");
        if (e < 0)
            throw Error("negative exponent in monomial");
        if (e == 0)
            continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    entries_ = std::move(merged);
}

Monomial Monomial::var(int index, int exponent) {
    return Monomial({{index, exponent}});
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : entries_)
        d += e;
    return d;
}

int Monomial::exponent(int variable) const {
    for (const auto& [v, e] : entries_)
        if (v == variable)
            return e;
    return 0;
}

int Monomial::max_variable() const {
    return entries_.empty() ? -1 : entries_.back().first;
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.entries_.begin();
    for (const auto& [v, e] : entries_) {
        while (it != other.entries_.end() && it->first < v)
            ++it;
        if (it == other.entries_.end() || it->first != v || it->second < e)
            return false;
    }
    return true;
}

bool Monomial::is_squarefree() const {
    for (const auto& [v, e] : entries_)
        if (e > 1)
            return false;
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> vars;
    vars.reserve(entries_.size());
    for (const auto& [v, e] : entries_)
        vars.push_back(v);
    return vars;
}

Monomial Monomial::radical() const {
    std::vector<Entry> entries;
    entries.reserve(entries_.size());
    for (const auto& [v, e] : entries_)
        entries.emplace_back(v, 1);
    Monomial m;
    m.entries_ = std::move(entries);
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first))
            out.push_back(*a++);
        else if (a == entries_.end() || b->first < a->first)
            out.push_back(*b++);
        else {
            out.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    Monomial m;
    m.entries_ = std::move(out);
    return m;
}

Monomial Monomial::pow(int e) const {
    if (e < 0)
        throw Error("negative monomial power");
    std::vector<Entry> out;
    if (e > 0) {
        out.reserve(entries_.size());
        for (const auto& [v, x] : entries_)
            out.emplace_back(v, x * e);
    }
    Monomial m;
    m.entries_ = std::move(out);
    return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this))
        throw NotDivisible("monomial division with remainder");
    std::vector<Entry> out;
    out.reserve(entries_.size());
    auto b = other.entries_.begin();
    for (const auto& [v, e] : entries_) {
        while (b != other.entries_.end() && b->first < v)
            ++b;
        int sub = (b != other.entries_.end() && b->first == v) ? b->second : 0;
        if (e - sub > 0)
            out.emplace_back(v, e - sub);
    }
    Monomial m;
    m.entries_ = std::move(out);
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    std::vector<Entry> out;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            out.emplace_back(ia->first, std::min(ia->second, ib->second));
            ++ia, ++ib;
        }
    }
    Monomial m;
    m.entries_ = std::move(out);
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<Entry> out;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first))
            out.push_back(*ia++);
        else if (ia == a.entries_.end() || ib->first < ia->first)
            out.push_back(*ib++);
        else {
            out.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia, ++ib;
        }
    }
    Monomial m;
    m.entries_ = std::move(out);
    return m;
}

} // namespace gjets
