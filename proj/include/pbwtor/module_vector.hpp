#pragma once

#include <map>

#include "pbwtor/algebra.hpp"

namespace pbwtor {

/// Sparse element of a free module R^rank, positions 0-based. Stored
/// components are nonzero and in standard form.
struct ModuleVector {
    int rank = 0;
    std::map<int, Polynomial> comps;

    static ModuleVector zero(int rank) {
        ModuleVector v;
        v.rank = rank;
        return v;
    }

    static ModuleVector unit(int pos, int rank, int nvars) {
        ModuleVector v = zero(rank);
        v.comps.emplace(pos, Polynomial::constant(1, nvars));
        return v;
    }

    bool is_zero() const { return comps.empty(); }

    const Polynomial& component(int pos) const {
        static const Polynomial kZero{};
        auto it = comps.find(pos);
        return it == comps.end() ? kZero : it->second;
    }

    void set_component(int pos, Polynomial p) {
        if (p.is_zero())
            comps.erase(pos);
        else
            comps[pos] = std::move(p);
    }

    bool operator==(const ModuleVector& o) const { return rank == o.rank && comps == o.comps; }
    bool operator!=(const ModuleVector& o) const { return !(*this == o); }

    void check_rank(const ModuleVector& o) const {
        if (rank != o.rank)
            throw DimensionMismatch("module vectors of ranks " + std::to_string(rank) + " and " +
                                    std::to_string(o.rank));
    }
};

/// Leading data of a vector: position plus that component's leading term.
struct ModuleTerm {
    int pos = -1;
    Rational coeff;
    Monomial mono;
};

inline ModuleTerm leading(const ModuleVector& v, const ModuleOrder& mo) {
    ModuleTerm best;
    for (const auto& [pos, p] : v.comps) {
        const Term& t = p.leading();
        if (best.pos < 0 || compare(pos, t.mono, best.pos, best.mono, mo) == Ordering::Greater)
            best = {pos, t.coeff, t.mono};
    }
    if (best.pos < 0) throw Error("leading term of the zero vector requested");
    return best;
}

inline ModuleVector add(const ModuleVector& a, const ModuleVector& b, const OrderSpec& o) {
    a.check_rank(b);
    ModuleVector r = a;
    for (const auto& [pos, p] : b.comps) {
        auto it = r.comps.find(pos);
        if (it == r.comps.end()) {
            r.comps.emplace(pos, p);
        } else {
            it->second = add(it->second, p, o);
            if (it->second.is_zero()) r.comps.erase(it);
        }
    }
    return r;
}

inline ModuleVector negate(const ModuleVector& a) {
    ModuleVector r = a;
    for (auto& [pos, p] : r.comps) p = negate(p);
    return r;
}

inline ModuleVector sub(const ModuleVector& a, const ModuleVector& b, const OrderSpec& o) {
    return add(a, negate(b), o);
}

inline ModuleVector scale(const ModuleVector& a, const Rational& c) {
    if (is_zero(c)) return ModuleVector::zero(a.rank);
    ModuleVector r = a;
    for (auto& [pos, p] : r.comps) p = scale(p, c);
    return r;
}

template <class Alg>
ModuleVector left_mul(const Alg& A, const Polynomial& f, const ModuleVector& v) {
    ModuleVector r = ModuleVector::zero(v.rank);
    for (const auto& [pos, p] : v.comps) r.set_component(pos, multiply(A, f, p));
    return r;
}

template <class Alg>
ModuleVector right_mul(const Alg& A, const ModuleVector& v, const Polynomial& f) {
    ModuleVector r = ModuleVector::zero(v.rank);
    for (const auto& [pos, p] : v.comps) r.set_component(pos, multiply(A, p, f));
    return r;
}

/// Matrix with row vectors; maps R^rows -> R^cols by v |-> sum v_i * row_i
/// with left coefficients.
struct PolyMatrix {
    int cols = 0;
    std::vector<ModuleVector> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
};

inline PolyMatrix matrix_from_rows(int cols, std::vector<ModuleVector> rows) {
    PolyMatrix M;
    M.cols = cols;
    for (const ModuleVector& r : rows)
        if (r.rank != cols)
            throw DimensionMismatch("matrix row of rank " + std::to_string(r.rank) +
                                    " in a matrix of width " + std::to_string(cols));
    M.rows = std::move(rows);
    return M;
}

template <class Alg>
ModuleVector vec_times_matrix(const Alg& A, const ModuleVector& v, const PolyMatrix& M) {
    if (v.rank != M.row_count())
        throw DimensionMismatch("vector of rank " + std::to_string(v.rank) +
                                " against a matrix with " + std::to_string(M.row_count()) +
                                " rows");
    ModuleVector r = ModuleVector::zero(M.cols);
    for (const auto& [i, p] : v.comps) r = add(r, left_mul(A, p, M.rows[i]), A.order);
    return r;
}

inline ModuleVector env_lift_vec(const ModuleVector& v, int n) {
    ModuleVector r = ModuleVector::zero(v.rank);
    for (const auto& [pos, p] : v.comps) r.comps.emplace(pos, env_lift(p, n));
    return r;
}

inline ModuleVector env_project_vec(const EnvAlgebra& E, const ModuleVector& v) {
    ModuleVector r = ModuleVector::zero(v.rank);
    for (const auto& [pos, p] : v.comps) r.set_component(pos, env_project(E, p));
    return r;
}

}  // namespace pbwtor
