#pragma once

#include <numeric>
#include <vector>

#include "pbwtor/monomial.hpp"

namespace pbwtor {

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// Weighted-degree order with lexicographic tie break.
/// precedence[0] is the most significant variable.
struct OrderSpec {
    std::vector<long long> weights;
    std::vector<int> precedence;

    int nvars() const { return static_cast<int>(weights.size()); }
};

inline OrderSpec default_order(int nvars) {
    OrderSpec o;
    o.weights.assign(nvars, 1);
    o.precedence.resize(nvars);
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
}

inline Ordering compare(const Monomial& a, const Monomial& b, const OrderSpec& o) {
    long long da = a.weighted_degree(o.weights);
    long long db = b.weighted_degree(o.weights);
    if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
    for (int v : o.precedence) {
        if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

inline bool less(const Monomial& a, const Monomial& b, const OrderSpec& o) {
    return compare(a, b, o) == Ordering::Less;
}

inline bool greater(const Monomial& a, const Monomial& b, const OrderSpec& o) {
    return compare(a, b, o) == Ordering::Greater;
}

/// Position handling for orders on free modules R^s.
enum class ModuleScheme { TermOverPosition, PositionOverTerm };

struct ModuleOrder {
    OrderSpec base;
    ModuleScheme scheme = ModuleScheme::TermOverPosition;
};

/// A module term is a monomial sitting at a 0-based position e_pos.
/// Under both schemes a LOWER position wins (is considered greater),
/// so leading terms gravitate toward e_0.
inline Ordering compare(int pos_a, const Monomial& a, int pos_b, const Monomial& b,
                        const ModuleOrder& mo) {
    if (mo.scheme == ModuleScheme::TermOverPosition) {
        Ordering c = compare(a, b, mo.base);
        if (c != Ordering::Equal) return c;
        if (pos_a != pos_b) return pos_a > pos_b ? Ordering::Less : Ordering::Greater;
        return Ordering::Equal;
    }
    if (pos_a != pos_b) return pos_a > pos_b ? Ordering::Less : Ordering::Greater;
    return compare(a, b, mo.base);
}

}  // namespace pbwtor
