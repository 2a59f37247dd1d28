#pragma once

#include <utility>
#include <vector>

#include "pbwtor/order.hpp"
#include "pbwtor/rational.hpp"

namespace pbwtor {

struct Term {
    Rational coeff;
    Monomial mono;
};

/// Polynomial in normal form: terms strictly descending under the ambient
/// order, no zero coefficients. The empty term list is the zero polynomial.
struct Polynomial {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }

    const Term& leading() const { return terms.front(); }

    static Polynomial zero() { return {}; }

    static Polynomial constant(const Rational& c, int nvars) {
        Polynomial p;
        if (!pbwtor::is_zero(c)) p.terms.push_back({c, Monomial::one(nvars)});
        return p;
    }

    static Polynomial monomial(const Rational& c, Monomial m) {
        Polynomial p;
        if (!pbwtor::is_zero(c)) p.terms.push_back({c, std::move(m)});
        return p;
    }

    bool operator==(const Polynomial& o) const {
        if (terms.size() != o.terms.size()) return false;
        for (size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].coeff != o.terms[i].coeff) return false;
            if (terms[i].mono != o.terms[i].mono) return false;
        }
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

/// Sorts descending, merges equal monomials, drops zeros.
inline Polynomial normalize_terms(std::vector<Term> ts, const OrderSpec& o) {
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return greater(a.mono, b.mono, o); });
    Polynomial p;
    for (auto& t : ts) {
        if (is_zero(t.coeff)) continue;
        if (!p.terms.empty() && p.terms.back().mono == t.mono) {
            p.terms.back().coeff += t.coeff;
            if (is_zero(p.terms.back().coeff)) p.terms.pop_back();
        } else {
            p.terms.push_back(std::move(t));
        }
    }
    return p;
}

inline Polynomial add(const Polynomial& a, const Polynomial& b, const OrderSpec& o) {
    // Merge of two already-sorted term lists.
    Polynomial r;
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        Ordering c = compare(a.terms[i].mono, b.terms[j].mono, o);
        if (c == Ordering::Greater) {
            r.terms.push_back(a.terms[i++]);
        } else if (c == Ordering::Less) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Rational s = a.terms[i].coeff + b.terms[j].coeff;
            if (!is_zero(s)) r.terms.push_back({std::move(s), a.terms[i].mono});
            ++i;
            ++j;
        }
    }
    while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
    return r;
}

inline Polynomial negate(const Polynomial& a) {
    Polynomial r = a;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

inline Polynomial sub(const Polynomial& a, const Polynomial& b, const OrderSpec& o) {
    return add(a, negate(b), o);
}

inline Polynomial scale(const Polynomial& a, const Rational& c) {
    if (is_zero(c)) return Polynomial::zero();
    Polynomial r = a;
    for (auto& t : r.terms) t.coeff *= c;
    return r;
}

}  // namespace pbwtor
