#pragma once

#include <set>

#include "pbwtor/module_vector.hpp"

namespace pbwtor {

/// Certificate of one left division: input = sum quotients[i] * divisors[i] + remainder.
struct DivisionRecord {
    std::vector<Polynomial> quotients;
    ModuleVector remainder;
};

/// Left division with full tail reduction. The first divisor whose leading
/// (position, monomial) divides the current lead wins; the multiplier monomial
/// comes from the exponent difference and its coefficient is fixed up by exact
/// division against the actual product's lead. mo.base must be the algebra's
/// own order.
inline DivisionRecord normal_form(const AlgebraSpec& A, const ModuleOrder& mo,
                                  const ModuleVector& v,
                                  const std::vector<ModuleVector>& divisors) {
    DivisionRecord rec;
    rec.quotients.assign(divisors.size(), Polynomial::zero());
    rec.remainder = ModuleVector::zero(v.rank);
    std::vector<ModuleTerm> leads;
    leads.reserve(divisors.size());
    for (const ModuleVector& g : divisors) {
        v.check_rank(g);
        leads.push_back(leading(g, mo));
    }
    ModuleVector work = v;
    while (!work.is_zero()) {
        ModuleTerm lt = leading(work, mo);
        bool reduced = false;
        for (size_t idx = 0; idx < divisors.size(); ++idx) {
            if (leads[idx].pos != lt.pos || !leads[idx].mono.divides(lt.mono)) continue;
            Monomial u = lt.mono.quotient_by(leads[idx].mono);
            ModuleVector prod = left_mul(A, Polynomial::monomial(1, u), divisors[idx]);
            Rational c = lt.coeff / leading(prod, mo).coeff;
            work = sub(work, scale(prod, c), A.order);
            rec.quotients[idx] = add(rec.quotients[idx], Polynomial::monomial(c, u), A.order);
            reduced = true;
            break;
        }
        if (reduced) continue;
        // Leads strictly decrease, so appending keeps each remainder
        // component sorted.
        auto rit = rec.remainder.comps.find(lt.pos);
        if (rit == rec.remainder.comps.end())
            rec.remainder.comps.emplace(lt.pos, Polynomial::monomial(lt.coeff, lt.mono));
        else
            rit->second.terms.push_back({lt.coeff, lt.mono});
        auto wit = work.comps.find(lt.pos);
        wit->second.terms.erase(wit->second.terms.begin());
        if (wit->second.terms.empty()) work.comps.erase(wit);
    }
    return rec;
}

struct GroebnerBasis {
    AlgebraSpec algebra;
    ModuleOrder module_order;
    int rank = 0;
    int input_size = 0;
    std::vector<ModuleVector> elements;
    /// provenance[l] has rank input_size and elements[l] = sum_t provenance[l][t] * gens[t].
    std::vector<ModuleVector> provenance;
};

namespace detail {

/// Total deterministic order on module vectors: lexicographic over the
/// descending term sequence, terms keyed by the module order then by
/// coefficient. Used only for canonical sorting, never for reduction.
inline bool vector_less(const ModuleVector& a, const ModuleVector& b, const ModuleOrder& mo) {
    auto flatten = [&](const ModuleVector& v) {
        std::vector<ModuleTerm> ts;
        for (const auto& [pos, p] : v.comps)
            for (const Term& t : p.terms) ts.push_back({pos, t.coeff, t.mono});
        std::sort(ts.begin(), ts.end(), [&](const ModuleTerm& x, const ModuleTerm& y) {
            return compare(x.pos, x.mono, y.pos, y.mono, mo) == Ordering::Greater;
        });
        return ts;
    };
    std::vector<ModuleTerm> ta = flatten(a), tb = flatten(b);
    for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        Ordering c = compare(ta[i].pos, ta[i].mono, tb[i].pos, tb[i].mono, mo);
        if (c != Ordering::Equal) return c == Ordering::Less;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    return ta.size() < tb.size();
}

struct SPairKey {
    Monomial lcm;
    int pos;
    int i;
    int j;
};

struct SPairLess {
    const OrderSpec* order;
    bool operator()(const SPairKey& a, const SPairKey& b) const {
        Ordering c = compare(a.lcm, b.lcm, *order);
        if (c != Ordering::Equal) return c == Ordering::Less;
        if (a.pos != b.pos) return a.pos < b.pos;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

/// S-vector of two monic elements with equal leading position: left
/// multipliers from the commutative lcm, coefficients corrected through the
/// actual PBW products so the leads cancel exactly. Also emits the pair of
/// (coefficient, multiplier monomial) factors for syzygy lifting.
struct SPairParts {
    ModuleVector svector;
    Rational ci, cj;  // svector = ci * x^ui * gi  +  cj * x^uj * gj
    Monomial ui, uj;
};

inline SPairParts s_vector(const AlgebraSpec& A, const ModuleOrder& mo, const ModuleVector& gi,
                           const ModuleTerm& li, const ModuleVector& gj, const ModuleTerm& lj) {
    SPairParts out;
    Monomial l = Monomial::lcm(li.mono, lj.mono);
    out.ui = l.quotient_by(li.mono);
    out.uj = l.quotient_by(lj.mono);
    ModuleVector wi = left_mul(A, Polynomial::monomial(1, out.ui), gi);
    ModuleVector wj = left_mul(A, Polynomial::monomial(1, out.uj), gj);
    out.ci = Rational(1) / leading(wi, mo).coeff;
    out.cj = Rational(-1) / leading(wj, mo).coeff;
    out.svector = add(scale(wi, out.ci), scale(wj, out.cj), A.order);
    return out;
}

}  // namespace detail

/// Buchberger completion for submodules of R^rank. S-pairs are formed only
/// for equal leading positions and processed smallest-lcm first; no product
/// or chain criterion. The result is monic, fully interreduced, and sorted
/// ascending by leading term, with provenance over the input generators.
inline GroebnerBasis left_groebner_basis(const AlgebraSpec& A, const ModuleOrder& mo, int rank,
                                         const std::vector<ModuleVector>& gens) {
    if (rank <= 0) throw Error("module rank must be positive");
    GroebnerBasis gb;
    gb.algebra = A;
    gb.module_order = mo;
    gb.rank = rank;
    gb.input_size = static_cast<int>(gens.size());
    int n = A.nvars();
    int m = gb.input_size;

    std::vector<ModuleVector> basis;
    std::vector<ModuleVector> prov;
    std::vector<ModuleTerm> leads;
    std::set<detail::SPairKey, detail::SPairLess> queue(detail::SPairLess{&A.order});

    auto append = [&](ModuleVector g, ModuleVector p) {
        ModuleTerm lt = leading(g, mo);
        Rational inv = Rational(1) / lt.coeff;
        g = scale(g, inv);
        p = scale(p, inv);
        lt.coeff = 1;
        int idx = static_cast<int>(basis.size());
        for (int l = 0; l < idx; ++l)
            if (leads[l].pos == lt.pos)
                queue.insert({Monomial::lcm(leads[l].mono, lt.mono), lt.pos, l, idx});
        basis.push_back(std::move(g));
        prov.push_back(std::move(p));
        leads.push_back(std::move(lt));
    };

    for (int t = 0; t < m; ++t) {
        if (gens[t].rank != rank)
            throw DimensionMismatch("generator of rank " + std::to_string(gens[t].rank) +
                                    " in a module of rank " + std::to_string(rank));
        if (gens[t].is_zero()) continue;
        append(gens[t], ModuleVector::unit(t, m, n));
    }

    while (!queue.empty()) {
        detail::SPairKey pk = *queue.begin();
        queue.erase(queue.begin());
        detail::SPairParts sp =
            detail::s_vector(A, mo, basis[pk.i], leads[pk.i], basis[pk.j], leads[pk.j]);
        if (sp.svector.is_zero()) continue;
        DivisionRecord rec = normal_form(A, mo, sp.svector, basis);
        if (rec.remainder.is_zero()) continue;
        ModuleVector rprov =
            add(left_mul(A, Polynomial::monomial(sp.ci, sp.ui), prov[pk.i]),
                left_mul(A, Polynomial::monomial(sp.cj, sp.uj), prov[pk.j]), A.order);
        for (size_t l = 0; l < basis.size(); ++l)
            if (!rec.quotients[l].is_zero())
                rprov = sub(rprov, left_mul(A, rec.quotients[l], prov[l]), A.order);
        append(std::move(rec.remainder), std::move(rprov));
    }

    // Minimalize: ascending by lead, keep elements whose lead no kept lead
    // divides. Divisibility implies order, so one forward scan suffices.
    std::vector<int> order_idx(basis.size());
    for (size_t l = 0; l < basis.size(); ++l) order_idx[l] = static_cast<int>(l);
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        Ordering c = compare(leads[a].pos, leads[a].mono, leads[b].pos, leads[b].mono, mo);
        if (c != Ordering::Equal) return c == Ordering::Less;
        return detail::vector_less(basis[a], basis[b], mo);
    });
    std::vector<int> kept;
    for (int idx : order_idx) {
        bool divisible = false;
        for (int k : kept)
            if (leads[k].pos == leads[idx].pos && leads[k].mono.divides(leads[idx].mono)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(idx);
    }

    // Tail-reduce against a frozen snapshot; leads are untouched, so a single
    // pass yields the unique reduced basis.
    std::vector<ModuleVector> snapshot;
    for (int idx : kept) snapshot.push_back(basis[idx]);
    for (size_t pos = 0; pos < kept.size(); ++pos) {
        std::vector<ModuleVector> others;
        std::vector<int> omap;
        for (size_t o = 0; o < kept.size(); ++o)
            if (o != pos) {
                others.push_back(snapshot[o]);
                omap.push_back(kept[o]);
            }
        DivisionRecord rec = normal_form(A, mo, snapshot[pos], others);
        ModuleVector rprov = prov[kept[pos]];
        for (size_t l = 0; l < others.size(); ++l)
            if (!rec.quotients[l].is_zero())
                rprov = sub(rprov, left_mul(A, rec.quotients[l], prov[omap[l]]), A.order);
        gb.elements.push_back(std::move(rec.remainder));
        gb.provenance.push_back(std::move(rprov));
    }
    return gb;
}

struct SyzygyBasis {
    int rank = 0;  // number of input generators
    std::vector<ModuleVector> generators;
};

/// Schreyer-style left syzygies: complete to a GB with provenance P, express
/// each input through the basis (quotients Q), and collect the rows of
/// (I - QP) together with every lifted S-vector reduction translated back
/// through P. The collected set generates Syz(gens); the returned generators
/// are its canonical GB.
inline SyzygyBasis left_syzygies(const AlgebraSpec& A, const ModuleOrder& mo, int rank,
                                 const std::vector<ModuleVector>& gens) {
    int n = A.nvars();
    int m = static_cast<int>(gens.size());
    SyzygyBasis out;
    out.rank = m;
    if (m == 0) return out;

    GroebnerBasis gb = left_groebner_basis(A, mo, rank, gens);
    std::vector<ModuleVector> raw;

    for (int t = 0; t < m; ++t) {
        DivisionRecord rec = normal_form(A, mo, gens[t], gb.elements);
        if (!rec.remainder.is_zero())
            throw Error("input generator failed to reduce modulo its own basis");
        ModuleVector row = ModuleVector::unit(t, m, n);
        for (size_t l = 0; l < gb.elements.size(); ++l)
            if (!rec.quotients[l].is_zero())
                row = sub(row, left_mul(A, rec.quotients[l], gb.provenance[l]), A.order);
        if (!row.is_zero()) raw.push_back(std::move(row));
    }

    std::vector<ModuleTerm> leads;
    leads.reserve(gb.elements.size());
    for (const ModuleVector& g : gb.elements) leads.push_back(leading(g, mo));
    for (size_t i = 0; i < gb.elements.size(); ++i) {
        for (size_t j = i + 1; j < gb.elements.size(); ++j) {
            if (leads[i].pos != leads[j].pos) continue;
            detail::SPairParts sp =
                detail::s_vector(A, mo, gb.elements[i], leads[i], gb.elements[j], leads[j]);
            DivisionRecord rec = normal_form(A, mo, sp.svector, gb.elements);
            if (!rec.remainder.is_zero())
                throw Error("S-vector failed to reduce modulo a completed basis");
            ModuleVector row =
                add(left_mul(A, Polynomial::monomial(sp.ci, sp.ui), gb.provenance[i]),
                    left_mul(A, Polynomial::monomial(sp.cj, sp.uj), gb.provenance[j]), A.order);
            for (size_t l = 0; l < gb.elements.size(); ++l)
                if (!rec.quotients[l].is_zero())
                    row = sub(row, left_mul(A, rec.quotients[l], gb.provenance[l]), A.order);
            if (!row.is_zero()) raw.push_back(std::move(row));
        }
    }

    GroebnerBasis syzgb = left_groebner_basis(A, mo, m, raw);
    out.generators = std::move(syzgb.elements);
    return out;
}

inline bool is_member(const ModuleVector& v, const GroebnerBasis& gb) {
    return normal_form(gb.algebra, gb.module_order, v, gb.elements).remainder.is_zero();
}

/// Mutual membership of generating sets.
inline bool submodule_equal(const AlgebraSpec& A, const ModuleOrder& mo, int rank,
                            const std::vector<ModuleVector>& gens_a,
                            const std::vector<ModuleVector>& gens_b) {
    GroebnerBasis ga = left_groebner_basis(A, mo, rank, gens_a);
    GroebnerBasis gbb = left_groebner_basis(A, mo, rank, gens_b);
    for (const ModuleVector& v : gens_a)
        if (!normal_form(A, mo, v, gbb.elements).remainder.is_zero()) return false;
    for (const ModuleVector& v : gens_b)
        if (!normal_form(A, mo, v, ga.elements).remainder.is_zero()) return false;
    return true;
}

}  // namespace pbwtor
