#include "gjets/polynomial.hpp"

#include "gjets/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace gjets {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    std::map<Monomial, Rational> acc;
    for (auto& t : terms) {
        if (t.coefficient == 0)
            continue;
        auto it = acc.find(t.monomial);
        if (it == acc.end())
            acc.emplace(std::move(t.monomial), std::move(t.coefficient));
        else
            it->second += t.coefficient;
    }
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            terms_.push_back({m, c});
    const MonomialOrder& order = ring_->order();
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return compare_monomials(order, a.monomial, b.monomial) > 0;
    });
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
    Polynomial p(std::move(ring));
    if (value != 0)
        p.terms_.push_back({Monomial::one(), std::move(value)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
    if (var < 0 || var >= ring->nvars())
        throw Error("variable index out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::var(var), Rational(1)});
    return p;
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial m, Rational coef) {
    Polynomial p(std::move(ring));
    if (coef != 0)
        p.terms_.push_back({std::move(m), std::move(coef)});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, t.monomial.degree());
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw Error("leading term of the zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.monomial, -t.coefficient});
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_ring(ring_, other.ring_);
    const MonomialOrder& order = ring_->order();
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ea = terms_.end();
    auto b = other.terms_.begin(), eb = other.terms_.end();
    while (a != ea || b != eb) {
        int cmp;
        if (a == ea)
            cmp = -1;
        else if (b == eb)
            cmp = 1;
        else
            cmp = compare_monomials(order, a->monomial, b->monomial);
        if (cmp > 0)
            out.terms_.push_back(*a++);
        else if (cmp < 0)
            out.terms_.push_back(*b++);
        else {
            Rational c = a->coefficient + b->coefficient;
            if (c != 0)
                out.terms_.push_back({a->monomial, std::move(c)});
            ++a, ++b;
        }
    }
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::times_term(const Monomial& mono, const Rational& coef) const {
    Polynomial out(ring_);
    if (coef == 0)
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.monomial * mono, t.coefficient * coef});
    return out;
}

Polynomial Polynomial::times_scalar(const Rational& coef) const {
    return times_term(Monomial::one(), coef);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(ring_, other.ring_);
    std::map<Monomial, Rational> acc;
    for (const auto& ta : terms_)
        for (const auto& tb : other.terms_) {
            Monomial m = ta.monomial * tb.monomial;
            auto [it, inserted] = acc.emplace(std::move(m), ta.coefficient * tb.coefficient);
            if (!inserted)
                it->second += ta.coefficient * tb.coefficient;
        }
    Polynomial out(ring_);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.terms_.push_back({m, c});
    const MonomialOrder& order = ring_->order();
    std::sort(out.terms_.begin(), out.terms_.end(), [&](const Term& x, const Term& y) {
        return compare_monomials(order, x.monomial, y.monomial) > 0;
    });
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].monomial != other.terms_[i].monomial ||
            terms_[i].coefficient != other.terms_[i].coefficient)
            return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty())
        return *this;
    return times_scalar(Rational(1) / leading_coefficient());
}

Polynomial Polynomial::divide_exact(const Monomial& m) const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.monomial / m, t.coefficient});
    return out; // order preserved: term orders are multiplicative
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
    if (!ring_ || !ring->same_variables(*ring_))
        throw RingMismatch("in_ring requires the same variable list");
    if (ring->order() == ring_->order()) {
        Polynomial out = *this;
        out.ring_ = ring;
        return out;
    }
    Polynomial out(ring);
    out.terms_ = terms_;
    const MonomialOrder& order = ring->order();
    std::sort(out.terms_.begin(), out.terms_.end(), [&](const Term& a, const Term& b) {
        return compare_monomials(order, a.monomial, b.monomial) > 0;
    });
    return out;
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         const std::vector<int>& var_map) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<Monomial::Entry> entries;
        entries.reserve(t.monomial.entries().size());
        for (const auto& [v, e] : t.monomial.entries()) {
            int mapped = var_map.at(static_cast<std::size_t>(v));
            if (mapped < 0 || mapped >= target->nvars())
                throw Error("variable map leaves the target ring");
            entries.emplace_back(mapped, e);
        }
        terms.push_back({Monomial(std::move(entries)), t.coefficient});
    }
    return Polynomial(target, std::move(terms));
}

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
    const MonomialOrder& order = a.ring()->order();
    std::size_t n = std::min(a.terms().size(), b.terms().size());
    for (std::size_t i = 0; i < n; ++i) {
        int cmp = compare_monomials(order, a.terms()[i].monomial, b.terms()[i].monomial);
        if (cmp != 0)
            return cmp;
        const Rational& ca = a.terms()[i].coefficient;
        const Rational& cb = b.terms()[i].coefficient;
        if (ca != cb)
            return ca < cb ? -1 : 1;
    }
    if (a.terms().size() != b.terms().size())
        return a.terms().size() < b.terms().size() ? -1 : 1;
    return 0;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool identifier_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && identifier_char(text[pos]))
            ++pos;
        if (pos == start)
            throw ParseError("expected identifier at position " + std::to_string(start));
        return text.substr(start, pos - start);
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected number at position " + std::to_string(start));
        return text.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Lexer lex{text};
    std::vector<Term> terms;
    bool first = true;
    while (!lex.eof()) {
        int sign = 1;
        if (lex.accept('-'))
            sign = -1;
        else if (lex.accept('+')) {
            // leading '+' allowed only between terms
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(lex.pos));
        }
        first = false;

        Rational coef(sign);
        Monomial mono;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lex.digits();
                std::string den = "1";
                if (lex.accept('/'))
                    den = lex.digits();
                coef *= rational_from_string(num + "/" + den);
            } else if (lex.identifier_char(c) && c != '\0') {
                std::string name = lex.identifier();
                auto var = ring->find(name);
                if (!var)
                    throw ParseError("unknown variable '" + name + "'");
                int exp = 1;
                if (lex.accept('^'))
                    exp = std::stoi(lex.digits());
                mono = mono * Monomial::var(*var, exp);
            } else {
                throw ParseError("expected coefficient or variable at position " +
                                 std::to_string(lex.pos));
            }
            saw_factor = true;
            expect_factor = lex.accept('*');
        }
        if (!saw_factor)
            throw ParseError("empty term");
        terms.push_back({std::move(mono), std::move(coef)});
    }
    if (first)
        throw ParseError("empty polynomial text");
    return Polynomial(ring, std::move(terms));
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        if (t.monomial.is_one()) {
            os << c.get_str();
        } else {
            bool printed = false;
            if (c != 1) {
                os << c.get_str();
                printed = true;
            }
            for (const auto& [v, e] : t.monomial.entries()) {
                if (printed)
                    os << "*";
                os << ring_->name(v);
                if (e > 1)
                    os << "^" << e;
                printed = true;
            }
        }
    }
    return os.str();
}

} // namespace gjets
