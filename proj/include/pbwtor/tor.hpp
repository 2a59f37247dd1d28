#pragma once

#include "pbwtor/bimodule.hpp"
#include "pbwtor/resolution.hpp"

namespace pbwtor {

/// Index bookkeeping for M^s flattened into R^{m*s}: basis element e_{ij}
/// (resolution slot i, bimodule slot j) lives at flat position i*m + j.
struct FlatIndex {
    int m = 1;
    int s = 0;

    int flat(int i, int j) const { return i * m + j; }
    int block(int f) const { return f / m; }
    int slot(int f) const { return f % m; }
    int size() const { return m * s; }
};

/// The induced differential on M^{s_k} -> M^{s_{k-1}} in flat coordinates:
/// row i*m+j carries entry g_{i,lambda} at column lambda*m+j. Pure index
/// shuffling; entries are copied verbatim.
inline PolyMatrix build_Ak(const PolyMatrix& d, int m) {
    PolyMatrix out;
    out.cols = m * d.cols;
    for (int i = 0; i < d.row_count(); ++i) {
        for (int j = 0; j < m; ++j) {
            ModuleVector row = ModuleVector::zero(out.cols);
            for (const auto& [lam, p] : d.rows[i].comps) row.comps.emplace(lam * m + j, p);
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

/// Generators of the preimage of L^{s_{k-1}} under A_k: syzygies of the
/// stacked list (rows of A_k, then the block-placed basis copies), projected
/// to the A_k coordinates, zero projections pruned.
inline std::vector<ModuleVector> kernel_mod_L(const AlgebraSpec& A, const ModuleOrder& mo,
                                              const PolyMatrix& Ak,
                                              const BimodulePresentation& Mp, int s_prev) {
    if (Ak.cols != Mp.ambient * s_prev)
        throw DimensionMismatch("A_k has " + std::to_string(Ak.cols) + " columns, expected " +
                                std::to_string(Mp.ambient * s_prev));
    std::vector<ModuleVector> stacked = Ak.rows;
    for (ModuleVector& h : l_power_generators(Mp, s_prev)) stacked.push_back(std::move(h));
    int src = Ak.row_count();
    std::vector<ModuleVector> out;
    if (src == 0) return out;
    SyzygyBasis syz = left_syzygies(A, mo, Ak.cols, stacked);
    for (const ModuleVector& s : syz.generators) {
        ModuleVector v = ModuleVector::zero(src);
        for (const auto& [pos, p] : s.comps)
            if (pos < src) v.comps.emplace(pos, p);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

struct TorDimension {
    enum class Kind { NotComputed, Finite, Infinite };
    Kind kind = Kind::NotComputed;
    Integer value{};
};

/// Subquotient presentation ker/im inside R^ambient. `numerator` holds the
/// kernel generators reduced modulo the denominator GB with zero forms
/// pruned, so `zero` is immediate; the unreduced kernel and the GB actually
/// used for reduction are kept alongside.
struct QuotientPresentation {
    int ambient = 0;
    std::vector<ModuleVector> numerator;
    std::vector<ModuleVector> denominator;
    std::vector<ModuleVector> kernel;
    std::vector<ModuleVector> denominator_basis;
    bool zero = true;
    TorDimension dimension;
};

namespace detail {

inline QuotientPresentation zero_presentation() {
    QuotientPresentation Q;
    Q.ambient = 0;
    Q.zero = true;
    return Q;
}

inline void reduce_numerator(const AlgebraSpec& A, const ModuleOrder& mo,
                             QuotientPresentation& Q) {
    GroebnerBasis dgb = left_groebner_basis(A, mo, Q.ambient, Q.denominator);
    Q.denominator_basis = std::move(dgb.elements);
    for (const ModuleVector& v : Q.kernel) {
        ModuleVector r = normal_form(A, mo, v, Q.denominator_basis).remainder;
        if (!r.is_zero()) Q.numerator.push_back(std::move(r));
    }
    Q.zero = Q.numerator.empty();
}

}  // namespace detail

/// Tor_k(M, N) for k >= 1 as ker(M (x) d_k) / (im(M (x) d_{k+1}) + L^{s_k}),
/// flat ambient m*s_k. Requires the resolution to reach index k+1 or to be
/// certifiably truncated before it.
inline QuotientPresentation tor_k(const AlgebraSpec& A, const ModuleOrder& mo,
                                  const BimodulePresentation& Mp, const FreeResolution& Nres,
                                  int k) {
    if (k < 1) throw Error("tor_k handles k >= 1; Tor_0 has its own construction");
    int length = Nres.length();
    if (k > length) {
        if (!Nres.complete)
            throw InsufficientResolutionDepth("resolution of length " + std::to_string(length) +
                                              " is not certified complete; cannot decide Tor_" +
                                              std::to_string(k));
        return detail::zero_presentation();
    }
    if (Nres.ranks[k] == 0) return detail::zero_presentation();
    PolyMatrix dnext;
    if (k < length) {
        dnext = Nres.diffs[k];
    } else if (Nres.complete) {
        dnext.cols = Nres.ranks[k];
    } else {
        throw InsufficientResolutionDepth("Tor_" + std::to_string(k) + " needs differential " +
                                          std::to_string(k + 1) +
                                          " or a certified truncation");
    }
    int m = Mp.ambient;
    QuotientPresentation Q;
    Q.ambient = m * Nres.ranks[k];
    PolyMatrix Ak = build_Ak(Nres.diffs[k - 1], m);
    Q.kernel = kernel_mod_L(A, mo, Ak, Mp, Nres.ranks[k - 1]);
    PolyMatrix Anext = build_Ak(dnext, m);
    Q.denominator = std::move(Anext.rows);
    for (ModuleVector& h : l_power_generators(Mp, Nres.ranks[k]))
        Q.denominator.push_back(std::move(h));
    detail::reduce_numerator(A, mo, Q);
    return Q;
}

/// Tor_0(M, N) = M (x) N presented on the flat cover M^{s_0}: the whole
/// ambient (unit vectors) over the image of the relations plus L^{s_0}.
inline QuotientPresentation tor_zero(const AlgebraSpec& A, const ModuleOrder& mo,
                                     const BimodulePresentation& Mp,
                                     const FreeResolution& Nres) {
    int m = Mp.ambient;
    int s0 = Nres.ranks[0];
    QuotientPresentation Q;
    Q.ambient = m * s0;
    for (int f = 0; f < Q.ambient; ++f)
        Q.kernel.push_back(ModuleVector::unit(f, Q.ambient, A.nvars()));
    PolyMatrix A1 = build_Ak(Nres.diffs[0], m);
    Q.denominator = std::move(A1.rows);
    for (ModuleVector& h : l_power_generators(Mp, s0)) Q.denominator.push_back(std::move(h));
    detail::reduce_numerator(A, mo, Q);
    return Q;
}

/// Complex identity A_k * A_{k-1} = 0, checked exactly row by row.
inline bool verify_complex(const AlgebraSpec& A, const PolyMatrix& Ak,
                           const PolyMatrix& Ak_minus_1) {
    return matrix_product_is_zero(A, Ak, Ak_minus_1);
}

namespace detail {

/// Number of standard monomials of R^rank modulo the lead terms of a GB, or
/// nullopt when infinite. Finite iff every position has, for every variable,
/// a pure-power lead bounding the staircase box.
inline std::optional<Integer> count_standard_monomials(const AlgebraSpec& A, const ModuleOrder& mo,
                                                       int rank,
                                                       const std::vector<ModuleVector>& basis) {
    int n = A.nvars();
    std::vector<std::vector<Monomial>> leads_at(rank);
    for (const ModuleVector& g : basis) {
        ModuleTerm lt = leading(g, mo);
        leads_at[lt.pos].push_back(lt.mono);
    }
    Integer total = 0;
    for (int p = 0; p < rank; ++p) {
        bool unit_lead = false;
        std::vector<int> bound(n, -1);
        for (const Monomial& mono : leads_at[p]) {
            if (mono.is_one()) {
                unit_lead = true;
                break;
            }
            int lo = mono.min_support();
            if (lo == mono.max_support()) {
                if (bound[lo] < 0 || mono.exp[lo] < bound[lo]) bound[lo] = mono.exp[lo];
            }
        }
        if (unit_lead) continue;
        bool infinite = false;
        for (int v = 0; v < n; ++v)
            if (bound[v] < 0) infinite = true;
        if (infinite) return std::nullopt;
        Monomial probe = Monomial::one(n);
        for (;;) {
            bool divisible = false;
            for (const Monomial& mono : leads_at[p])
                if (mono.divides(probe)) {
                    divisible = true;
                    break;
                }
            if (!divisible) ++total;
            int v = 0;
            while (v < n) {
                if (++probe.exp[v] < bound[v]) break;
                probe.exp[v] = 0;
                ++v;
            }
            if (v == n) break;
        }
    }
    return total;
}

}  // namespace detail

/// dim_k of the subquotient: dim(R^t/D) - dim(R^t/(U+D)), both by staircase
/// counting; Infinite when the D-staircase is unbounded. A zero presentation
/// short-circuits to 0 even over an infinite-dimensional quotient.
inline TorDimension dimension_if_finite(const AlgebraSpec& A, const ModuleOrder& mo,
                                        const QuotientPresentation& Q) {
    TorDimension d;
    if (Q.zero) {
        d.kind = TorDimension::Kind::Finite;
        d.value = 0;
        return d;
    }
    std::vector<ModuleVector> dbasis = Q.denominator_basis;
    if (dbasis.empty() && !Q.denominator.empty())
        dbasis = left_groebner_basis(A, mo, Q.ambient, Q.denominator).elements;
    std::optional<Integer> dim_den = detail::count_standard_monomials(A, mo, Q.ambient, dbasis);
    if (!dim_den) {
        d.kind = TorDimension::Kind::Infinite;
        return d;
    }
    std::vector<ModuleVector> both = Q.denominator;
    for (const ModuleVector& v : Q.numerator) both.push_back(v);
    GroebnerBasis ugb = left_groebner_basis(A, mo, Q.ambient, both);
    std::optional<Integer> dim_all =
        detail::count_standard_monomials(A, mo, Q.ambient, ugb.elements);
    d.kind = TorDimension::Kind::Finite;
    d.value = *dim_den - *dim_all;
    return d;
}

/// Front-end entry: resolve N deep enough for Tor_k and dispatch.
inline QuotientPresentation compute_tor(const AlgebraSpec& A, const ModuleOrder& mo,
                                        const BimodulePresentation& Mp,
                                        const LeftPresentation& Np, int k, bool with_dimension) {
    if (k < 0) throw Error("Tor index must be non-negative");
    FreeResolution res = free_resolution(A, mo, Np, k + 1 > 1 ? k + 1 : 1);
    QuotientPresentation Q = k == 0 ? tor_zero(A, mo, Mp, res) : tor_k(A, mo, Mp, res, k);
    if (with_dimension) Q.dimension = dimension_if_finite(A, mo, Q);
    return Q;
}

}  // namespace pbwtor
