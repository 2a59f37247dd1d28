#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pbwtor/errors.hpp"

namespace pbwtor {

/// Commutative exponent vector of a PBW standard word x_1^{a_1}...x_n^{a_n}.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    static Monomial var(int index, int nvars, int power = 1) {
        Monomial m = one(nvars);
        m.exp[index] = power;
        return m;
    }

    int nvars() const { return static_cast<int>(exp.size()); }

    bool is_one() const {
        return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    }

    int total_degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

    long long weighted_degree(const std::vector<long long>& weights) const {
        long long d = 0;
        for (int i = 0; i < nvars(); ++i) d += weights[i] * exp[i];
        return d;
    }

    /// Largest variable index with a nonzero exponent, or -1 for the unit.
    int max_support() const {
        for (int i = nvars() - 1; i >= 0; --i)
            if (exp[i] > 0) return i;
        return -1;
    }

    /// Smallest variable index with a nonzero exponent, or nvars() for the unit.
    int min_support() const {
        for (int i = 0; i < nvars(); ++i)
            if (exp[i] > 0) return i;
        return nvars();
    }

    Monomial operator+(const Monomial& o) const {
        check_dim(o);
        Monomial r = *this;
        for (int i = 0; i < nvars(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        check_dim(o);
        for (int i = 0; i < nvars(); ++i)
            if (exp[i] > o.exp[i]) return false;
        return true;
    }

    /// Componentwise difference; requires divides(o) the other way around.
    Monomial quotient_by(const Monomial& d) const {
        check_dim(d);
        Monomial r = *this;
        for (int i = 0; i < nvars(); ++i) r.exp[i] -= d.exp[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_dim(b);
        Monomial r = a;
        for (int i = 0; i < a.nvars(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return exp == o.exp; }
    bool operator!=(const Monomial& o) const { return exp != o.exp; }

    void check_dim(const Monomial& o) const {
        if (exp.size() != o.exp.size())
            throw DimensionMismatch("monomials of dimensions " + std::to_string(exp.size()) +
                                    " and " + std::to_string(o.exp.size()));
    }
};

/// Structural (lexicographic by exponent vector) order for use as a map key.
/// Unrelated to any admissible term order.
struct MonomialKeyLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exp < b.exp; }
};

}  // namespace pbwtor
