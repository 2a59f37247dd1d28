#pragma once

// Shared fixtures: the small stable of algebras the tests exercise, string
// based element builders, and bounded random generators for the property
// batteries.

#include <random>
#include <string>
#include <vector>

#include "pbwtor/pbwtor.hpp"

namespace testsupport {

using namespace pbwtor;

inline OrderSpec make_order(std::vector<long long> weights) {
    OrderSpec o = default_order(static_cast<int>(weights.size()));
    o.weights = std::move(weights);
    return o;
}

inline PairRelation rel(const Rational& c, Polynomial tail) {
    PairRelation r;
    r.coeff = c;
    r.tail = std::move(tail);
    return r;
}

/// U(sl2): yx = xy - z, zx = xz + 2x, zy = yz - 2y, weights (1, 2, 2).
inline AlgebraSpec make_usl2() {
    Monomial z = Monomial::var(2, 3);
    Monomial x = Monomial::var(0, 3);
    Monomial y = Monomial::var(1, 3);
    std::vector<PairRelation> rels(3);
    rels[pair_index(1, 0)] = rel(1, Polynomial::monomial(-1, z));
    rels[pair_index(2, 0)] = rel(1, Polynomial::monomial(2, x));
    rels[pair_index(2, 1)] = rel(1, Polynomial::monomial(-2, y));
    return construct_algebra({"x", "y", "z"}, make_order({1, 2, 2}), std::move(rels));
}

/// First Weyl algebra: yx = xy + 1.
inline AlgebraSpec make_weyl() {
    std::vector<PairRelation> rels(1);
    rels[0] = rel(1, Polynomial::constant(1, 2));
    return construct_algebra({"x", "y"}, make_order({1, 1}), std::move(rels));
}

/// Quantum plane at q = 2: yx = 2xy.
inline AlgebraSpec make_qplane() {
    std::vector<PairRelation> rels(1);
    rels[0] = rel(2, Polynomial::zero());
    return construct_algebra({"x", "y"}, make_order({1, 1}), std::move(rels));
}

inline AlgebraSpec make_commutative(std::vector<std::string> names) {
    int n = static_cast<int>(names.size());
    std::vector<PairRelation> rels(n * (n - 1) / 2, rel(1, Polynomial::zero()));
    return construct_algebra(std::move(names), make_order(std::vector<long long>(n, 1)),
                             std::move(rels));
}

inline AlgebraSpec make_kxy() { return make_commutative({"x", "y"}); }
inline AlgebraSpec make_kxyz() { return make_commutative({"x", "y", "z"}); }

inline bool commutative(const AlgebraSpec& A) {
    for (const PairRelation& r : A.relations)
        if (r.coeff != Rational(1) || !r.tail.is_zero()) return false;
    return true;
}

inline ModuleOrder top_order(const AlgebraSpec& A) {
    ModuleOrder mo;
    mo.base = A.order;
    mo.scheme = ModuleScheme::TermOverPosition;
    return mo;
}

inline ModuleOrder pot_order(const AlgebraSpec& A) {
    ModuleOrder mo;
    mo.base = A.order;
    mo.scheme = ModuleScheme::PositionOverTerm;
    return mo;
}

inline Polynomial p(const AlgebraSpec& A, const std::string& text) {
    return parse_expression(A, text);
}

inline ModuleVector vec(const AlgebraSpec& A, const std::vector<std::string>& comps) {
    ModuleVector v = ModuleVector::zero(static_cast<int>(comps.size()));
    for (size_t i = 0; i < comps.size(); ++i)
        v.set_component(static_cast<int>(i), parse_expression(A, comps[i]));
    return v;
}

inline std::vector<ModuleVector> vecs(const AlgebraSpec& A,
                                      const std::vector<std::vector<std::string>>& rows) {
    std::vector<ModuleVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(vec(A, r));
    return out;
}

// Bounded random data. All distributions are inclusive of their bounds.

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rand_coeff(std::mt19937_64& rng) {
    int num = 0;
    while (num == 0) num = rand_int(rng, -9, 9);
    return Rational(num, rand_int(rng, 1, 3));
}

// max_weight == 0 means unbounded; otherwise monomials are redrawn until
// their weighted degree fits, which keeps basis completions tractable.
inline Monomial rand_monomial(std::mt19937_64& rng, const AlgebraSpec& A, int maxexp,
                              long long max_weight = 0) {
    for (;;) {
        Monomial m = Monomial::one(A.nvars());
        for (int v = 0; v < A.nvars(); ++v) m.exp[v] = rand_int(rng, 0, maxexp);
        if (max_weight == 0 || m.weighted_degree(A.order.weights) <= max_weight) return m;
    }
}

inline Polynomial rand_poly(std::mt19937_64& rng, const AlgebraSpec& A, int maxterms, int maxexp,
                            bool allow_zero = false, long long max_weight = 0) {
    for (;;) {
        int lo = allow_zero ? 0 : 1;
        int t = rand_int(rng, lo, maxterms);
        std::vector<Term> ts;
        for (int i = 0; i < t; ++i) {
            Term term;
            term.coeff = rand_coeff(rng);
            term.mono = rand_monomial(rng, A, maxexp, max_weight);
            ts.push_back(std::move(term));
        }
        // random drawn terms can cancel; a nonzero request must really be nonzero
        Polynomial p = normalize_terms(std::move(ts), A.order);
        if (allow_zero || !p.is_zero()) return p;
    }
}

inline ModuleVector rand_vector(std::mt19937_64& rng, const AlgebraSpec& A, int rank, int maxterms,
                                int maxexp, long long max_weight = 0) {
    ModuleVector v = ModuleVector::zero(rank);
    for (int pos = 0; pos < rank; ++pos)
        v.set_component(pos, rand_poly(rng, A, maxterms, maxexp, true, max_weight));
    if (v.is_zero())
        v.set_component(rand_int(rng, 0, rank - 1), rand_poly(rng, A, 1, maxexp, false, max_weight));
    return v;
}

/// Algebra pool for property runs; index wraps.
inline const AlgebraSpec& pool_algebra(int i) {
    static const std::vector<AlgebraSpec> pool = {make_usl2(), make_weyl(), make_kxy(),
                                                  make_qplane(), make_kxyz()};
    return pool[static_cast<size_t>(i) % pool.size()];
}

inline ModuleOrder pool_order(const AlgebraSpec& A, int i) {
    return i % 2 ? pot_order(A) : top_order(A);
}

}  // namespace testsupport
