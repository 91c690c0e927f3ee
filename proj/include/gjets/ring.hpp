#pragma once

#include "gjets/monomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gjets {

enum class OrderKind {
    GrevLex, // degree first, then reversed exponent differences
    Lex,
};

// Total multiplicative term order. block == 0 means a plain order of kind
// `inner`; block == k > 0 compares the first k variables under `outer`
// first, which makes them an elimination block.
struct MonomialOrder {
    int block = 0;
    OrderKind outer = OrderKind::Lex;
    OrderKind inner = OrderKind::GrevLex;

    static MonomialOrder grevlex() { return {0, OrderKind::Lex, OrderKind::GrevLex}; }
    static MonomialOrder lex() { return {0, OrderKind::Lex, OrderKind::Lex}; }
    static MonomialOrder elimination(int prefix_size) {
        return {prefix_size, OrderKind::Lex, OrderKind::GrevLex};
    }

    bool operator==(const MonomialOrder& o) const {
        return block == o.block && (block == 0 || outer == o.outer) && inner == o.inner;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string describe() const;
};

// -1, 0, +1 as a is smaller than, equal to, or greater than b.
int compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b);

// Ordered variable list plus the term order used for canonical forms.
class Ring {
public:
    Ring(std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex());

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& variable_names() const { return names_; }
    const std::string& name(int var) const { return names_.at(static_cast<std::size_t>(var)); }
    std::optional<int> find(const std::string& name) const;
    const MonomialOrder& order() const { return order_; }

    bool same_variables(const Ring& other) const { return names_ == other.names_; }
    bool operator==(const Ring& other) const {
        return names_ == other.names_ && order_ == other.order_;
    }

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
    std::unordered_map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::grevlex());

// Same variables, different term order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

// Operands must live in equal rings (same variables and order).
void require_same_ring(const RingPtr& a, const RingPtr& b);

} // namespace gjets
