#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pbwtor/polynomial.hpp"

namespace pbwtor {

/// One commutation rule x_j * x_i = coeff * x_i x_j + tail, for j > i.
/// Admissibility requires coeff != 0 and every tail monomial strictly below
/// x_i x_j in the ambient order.
struct PairRelation {
    Rational coeff;
    Polynomial tail;
};

/// Flat index of the pair (j, i) with j > i.
inline int pair_index(int j, int i) { return j * (j - 1) / 2 + i; }

/// Memo table for standard forms of x_j^s x_i^t. Shared between copies of an
/// algebra; never shared between distinct algebras.
struct ProductCache {
    std::map<std::array<int, 4>, Polynomial> pow_products;
};

struct AlgebraSpec {
    std::vector<std::string> names;
    OrderSpec order;
    std::vector<PairRelation> relations;
    std::shared_ptr<ProductCache> cache = std::make_shared<ProductCache>();

    int nvars() const { return static_cast<int>(names.size()); }

    const PairRelation& relation(int j, int i) const { return relations[pair_index(j, i)]; }
};

template <class Alg>
Polynomial mono_mul(const Alg& A, const Monomial& a, const Monomial& b);
template <class Alg>
Polynomial multiply(const Alg& A, const Polynomial& f, const Polynomial& g);
template <class Alg>
Polynomial pow_product(const Alg& A, int j, int s, int i, int t);

/// Standard form of the product of two standard monomials. Splits off the
/// highest block of a and the lowest block of b; only the middle pair can be
/// out of order, and its rewrite is delegated to pow_product.
template <class Alg>
Polynomial mono_mul(const Alg& A, const Monomial& a, const Monomial& b) {
    a.check_dim(b);
    int j = a.max_support();
    int i = b.min_support();
    if (j <= i) return Polynomial::monomial(1, a + b);
    int s = a.exp[j];
    int t = b.exp[i];
    Monomial head = a;
    head.exp[j] = 0;
    Monomial rest = b;
    rest.exp[i] = 0;
    Polynomial mid = pow_product(A, j, s, i, t);
    Polynomial left = multiply(A, Polynomial::monomial(1, head), mid);
    return multiply(A, left, Polynomial::monomial(1, rest));
}

template <class Alg>
Polynomial multiply(const Alg& A, const Polynomial& f, const Polynomial& g) {
    std::vector<Term> acc;
    for (const Term& tf : f.terms) {
        for (const Term& tg : g.terms) {
            Polynomial p = mono_mul(A, tf.mono, tg.mono);
            Rational c = tf.coeff * tg.coeff;
            for (const Term& u : p.terms) acc.push_back({c * u.coeff, u.mono});
        }
    }
    return normalize_terms(std::move(acc), A.order);
}

/// Standard form of x_j^s x_i^t for j > i, s,t >= 1. Cached per algebra.
template <class Alg>
Polynomial pow_product(const Alg& A, int j, int s, int i, int t) {
    std::array<int, 4> key{j, s, i, t};
    auto it = A.cache->pow_products.find(key);
    if (it != A.cache->pow_products.end()) return it->second;
    int n = A.nvars();
    Polynomial result;
    if (s == 1 && t == 1) {
        const PairRelation& rel = A.relation(j, i);
        result = add(Polynomial::monomial(rel.coeff, Monomial::var(i, n) + Monomial::var(j, n)),
                     rel.tail, A.order);
    } else if (t > 1) {
        // x_j^s x_i^t = (x_j^s x_i^{t-1}) x_i
        result = multiply(A, pow_product(A, j, s, i, t - 1),
                          Polynomial::monomial(1, Monomial::var(i, n)));
    } else {
        // x_j^s x_i = x_j^{s-1} (x_j x_i)
        result = multiply(A, Polynomial::monomial(1, Monomial::var(j, n, s - 1)),
                          pow_product(A, j, 1, i, 1));
    }
    A.cache->pow_products.emplace(key, result);
    return result;
}

template <class Alg>
Polynomial generator_poly(const Alg& A, int v) {
    return Polynomial::monomial(1, Monomial::var(v, A.nvars()));
}

/// Validates and seals an algebra description. Checks, in order: shape of the
/// order data, presence and admissibility of every pair relation, and the
/// generator overlap identities (x_k x_j) x_i = x_k (x_j x_i) for k > j > i.
/// Products of standard monomials are always returned in standard form, so
/// exact equality of the two sides decides associativity.
inline AlgebraSpec construct_algebra(std::vector<std::string> names, OrderSpec order,
                                     std::vector<PairRelation> relations) {
    int n = static_cast<int>(names.size());
    if (n == 0) throw Error("algebra needs at least one variable");
    if (static_cast<int>(order.weights.size()) != n ||
        static_cast<int>(order.precedence.size()) != n)
        throw DimensionMismatch("order data does not match the variable count " +
                                std::to_string(n));
    for (long long w : order.weights)
        if (w <= 0) throw Error("order weights must be positive");
    std::vector<bool> seen(n, false);
    for (int v : order.precedence) {
        if (v < 0 || v >= n || seen[v])
            throw Error("order precedence is not a permutation of the variables");
        seen[v] = true;
    }
    if (static_cast<int>(relations.size()) != n * (n - 1) / 2)
        throw Error("expected " + std::to_string(n * (n - 1) / 2) + " pair relations, got " +
                    std::to_string(relations.size()));

    AlgebraSpec A;
    A.names = std::move(names);
    A.order = std::move(order);
    A.relations = std::move(relations);

    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            PairRelation& rel = A.relations[pair_index(j, i)];
            if (is_zero(rel.coeff))
                throw AdmissibilityViolation("relation " + A.names[j] + "*" + A.names[i] +
                                                 " has zero leading coefficient",
                                             j, i);
            rel.tail = normalize_terms(std::move(rel.tail.terms), A.order);
            Monomial xij = Monomial::var(i, n) + Monomial::var(j, n);
            for (const Term& t : rel.tail.terms) {
                if (t.mono.nvars() != n)
                    throw DimensionMismatch("relation tail monomial has wrong variable count");
                if (!less(t.mono, xij, A.order))
                    throw AdmissibilityViolation(
                        "relation " + A.names[j] + "*" + A.names[i] + " has tail term " +
                            "not strictly below " + A.names[i] + "*" + A.names[j],
                        j, i);
            }
        }
    }

    for (int k = 2; k < n; ++k) {
        for (int j = 1; j < k; ++j) {
            for (int i = 0; i < j; ++i) {
                Polynomial xk = generator_poly(A, k);
                Polynomial xj = generator_poly(A, j);
                Polynomial xi = generator_poly(A, i);
                Polynomial lhs = multiply(A, multiply(A, xk, xj), xi);
                Polynomial rhs = multiply(A, xk, multiply(A, xj, xi));
                if (lhs != rhs)
                    throw AssociativityViolation("relations are not associative on (" +
                                                     A.names[k] + ", " + A.names[j] + ", " +
                                                     A.names[i] + ")",
                                                 k, j, i);
            }
        }
    }
    return A;
}

/// Value in R of the reversed word x_n^{b_n} ... x_1^{b_1}.
inline Polynomial reversed_word_value(const AlgebraSpec& A, const Monomial& b) {
    int n = A.nvars();
    Polynomial r = Polynomial::constant(1, n);
    for (int v = n - 1; v >= 0; --v) {
        if (b.exp[v] == 0) continue;
        r = multiply(A, r, Polynomial::monomial(1, Monomial::var(v, n, b.exp[v])));
    }
    return r;
}

/// Coordinates of f in the basis of reversed words, i.e. the standard basis
/// of the opposite algebra. Leading-term elimination: the reversed word of b
/// has leading monomial x^b, so the change of basis is unitriangular up to
/// nonzero scalars.
inline Polynomial opposite_coordinates(const AlgebraSpec& A, Polynomial f) {
    Polynomial out;
    while (!f.is_zero()) {
        const Term& lead = f.leading();
        Polynomial w = reversed_word_value(A, lead.mono);
        Rational c = lead.coeff / w.leading().coeff;
        out.terms.push_back({c, lead.mono});
        f = sub(f, scale(w, c), A.order);
    }
    return out;
}

/// The opposite algebra on the same variables and order. The standard
/// monomial with exponents b represents the reversed word x_n^{b_n}...x_1^{b_1}
/// of the base algebra.
inline AlgebraSpec opposite(const AlgebraSpec& A) {
    int n = A.nvars();
    std::vector<PairRelation> rels(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            // In the opposite product, xbar_j o xbar_i is the base element
            // x_i x_j, which is already a standard monomial.
            Monomial xij = Monomial::var(i, n) + Monomial::var(j, n);
            Polynomial coords = opposite_coordinates(A, Polynomial::monomial(1, xij));
            PairRelation rel;
            rel.coeff = coords.leading().coeff;
            rel.tail.terms.assign(coords.terms.begin() + 1, coords.terms.end());
            rels[pair_index(j, i)] = std::move(rel);
        }
    }
    return construct_algebra(A.names, A.order, std::move(rels));
}

/// Enveloping algebra R (x) R^op on 2n variables: the first n are the base
/// generators, the last n the opposite ones (rendered with an "_op" suffix).
/// The two blocks commute with each other.
struct EnvAlgebra {
    AlgebraSpec base;
    AlgebraSpec op;
    AlgebraSpec env;
};

inline EnvAlgebra enveloping(const AlgebraSpec& A) {
    EnvAlgebra E;
    E.base = A;
    E.op = opposite(A);
    int n = A.nvars();

    std::vector<std::string> names = A.names;
    for (int v = 0; v < n; ++v) names.push_back(A.names[v] + "_op");

    OrderSpec order;
    order.weights = A.order.weights;
    order.weights.insert(order.weights.end(), A.order.weights.begin(), A.order.weights.end());
    order.precedence = A.order.precedence;
    for (int v : A.order.precedence) order.precedence.push_back(v + n);

    auto lift_tail = [n](const Polynomial& p, int shift) {
        Polynomial q;
        for (const Term& t : p.terms) {
            Monomial m = Monomial::one(2 * n);
            for (int v = 0; v < n; ++v) m.exp[v + shift] = t.mono.exp[v];
            q.terms.push_back({t.coeff, std::move(m)});
        }
        return q;
    };

    std::vector<PairRelation> rels(2 * n * (2 * n - 1) / 2);
    for (int j = 1; j < 2 * n; ++j) {
        for (int i = 0; i < j; ++i) {
            PairRelation rel;
            if (j < n) {
                const PairRelation& r = A.relation(j, i);
                rel.coeff = r.coeff;
                rel.tail = lift_tail(r.tail, 0);
            } else if (i >= n) {
                const PairRelation& r = E.op.relation(j - n, i - n);
                rel.coeff = r.coeff;
                rel.tail = lift_tail(r.tail, n);
            } else {
                // Opposite generators commute with base generators.
                rel.coeff = 1;
            }
            rels[pair_index(j, i)] = std::move(rel);
        }
    }
    E.env = construct_algebra(std::move(names), std::move(order), std::move(rels));
    return E;
}

/// Embeds R into R (x) R^op by zero opposite exponents.
inline Polynomial env_lift(const Polynomial& f, int n) {
    Polynomial g;
    for (const Term& t : f.terms) {
        Monomial m = t.mono;
        m.exp.resize(2 * n, 0);
        g.terms.push_back({t.coeff, std::move(m)});
    }
    return g;
}

/// Multiplication map R (x) R^op -> R: x^a xbar^b acts as x^a times the
/// reversed word of b.
inline Polynomial env_project(const EnvAlgebra& E, const Polynomial& f) {
    int n = E.base.nvars();
    Polynomial out = Polynomial::zero();
    for (const Term& t : f.terms) {
        Monomial a = Monomial::one(n);
        Monomial b = Monomial::one(n);
        for (int v = 0; v < n; ++v) {
            a.exp[v] = t.mono.exp[v];
            b.exp[v] = t.mono.exp[v + n];
        }
        Polynomial piece = multiply(E.base, Polynomial::monomial(t.coeff, a),
                                    reversed_word_value(E.base, b));
        out = add(out, piece, E.base.order);
    }
    return out;
}

}  // namespace pbwtor
