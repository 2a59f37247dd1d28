#pragma once

#include "pbwtor/groebner.hpp"

namespace pbwtor {

/// Per-variable commutators x_i*w - w*x_i. Checking on the algebra
/// generators suffices: if w commutes with every generator it commutes with
/// every element.
struct CentralizerWitness {
    std::vector<ModuleVector> commutators;

    bool central() const {
        for (const ModuleVector& c : commutators)
            if (!c.is_zero()) return false;
        return true;
    }
};

inline CentralizerWitness is_central(const AlgebraSpec& A, const ModuleVector& w) {
    CentralizerWitness cw;
    for (int v = 0; v < A.nvars(); ++v) {
        Polynomial xv = generator_poly(A, v);
        cw.commutators.push_back(sub(left_mul(A, xv, w), right_mul(A, w, xv), A.order));
    }
    return cw;
}

enum class TwoSidedRoute { Enveloping, Closure, Central };

/// Finite data of a sub-bimodule L of R^m: the declared two-sided generators
/// and a basis H that is simultaneously a canonical left GB and a two-sided
/// generating system (certified by the right-closure check).
struct BimodulePresentation {
    int ambient = 1;
    std::vector<ModuleVector> generators;
    std::vector<ModuleVector> basis;
    /// env_provenance[l] has rank = generators.size() over the enveloping
    /// algebra; basis[l] = sum_t env_action(env_provenance[l][t], generators[t]).
    std::vector<ModuleVector> env_provenance;
    bool centralizing = false;
    TwoSidedRoute route = TwoSidedRoute::Enveloping;
};

/// Action of an enveloping-algebra element on a base-module vector:
/// x^a (x) xbar^b sends g to x^a * g * revword(b).
inline ModuleVector env_action(const EnvAlgebra& E, const Polynomial& q, const ModuleVector& g) {
    int n = E.base.nvars();
    ModuleVector out = ModuleVector::zero(g.rank);
    for (const Term& t : q.terms) {
        Monomial a = Monomial::one(n);
        Monomial b = Monomial::one(n);
        for (int v = 0; v < n; ++v) {
            a.exp[v] = t.mono.exp[v];
            b.exp[v] = t.mono.exp[v + n];
        }
        ModuleVector piece = left_mul(E.base, Polynomial::monomial(t.coeff, a), g);
        piece = right_mul(E.base, piece, reversed_word_value(E.base, b));
        out = add(out, piece, E.base.order);
    }
    return out;
}

namespace detail {

/// Post-hoc certification, run on every route: H is closed under right
/// multiplication by variables, the declared generators lie in its left span,
/// and each basis element is exactly reproduced from its env provenance.
inline void verify_two_sided(const EnvAlgebra& E, const ModuleOrder& mo,
                             const BimodulePresentation& P) {
    const AlgebraSpec& A = E.base;
    for (size_t l = 0; l < P.basis.size(); ++l) {
        for (int v = 0; v < A.nvars(); ++v) {
            ModuleVector hv = right_mul(A, P.basis[l], generator_poly(A, v));
            if (!normal_form(A, mo, hv, P.basis).remainder.is_zero())
                throw TwoSidednessFailure("basis element " + std::to_string(l + 1) +
                                          " times variable " + A.names[v] +
                                          " does not reduce to zero");
        }
    }
    for (size_t t = 0; t < P.generators.size(); ++t) {
        if (!normal_form(A, mo, P.generators[t], P.basis).remainder.is_zero())
            throw TwoSidednessFailure("declared generator " + std::to_string(t + 1) +
                                      " does not reduce to zero modulo the basis");
    }
    for (size_t l = 0; l < P.basis.size(); ++l) {
        ModuleVector rebuilt = ModuleVector::zero(P.ambient);
        for (const auto& [t, q] : P.env_provenance[l].comps)
            rebuilt = add(rebuilt, env_action(E, q, P.generators[t]), A.order);
        if (rebuilt != P.basis[l])
            throw Error("internal: bimodule provenance identity failed for element " +
                        std::to_string(l + 1));
    }
}

/// env_prov_new[l] = sum_u lift(P[l][u]) * env_prov_old[u], where P is the
/// provenance of a left GB recomputation over R.
inline std::vector<ModuleVector> compose_env_provenance(
    const EnvAlgebra& E, const std::vector<ModuleVector>& left_prov,
    const std::vector<ModuleVector>& env_prov_old, int gen_count) {
    int n = E.base.nvars();
    std::vector<ModuleVector> out;
    out.reserve(left_prov.size());
    for (const ModuleVector& row : left_prov) {
        ModuleVector acc = ModuleVector::zero(gen_count);
        for (const auto& [u, p] : row.comps)
            acc = add(acc, left_mul(E.env, env_lift(p, n), env_prov_old[u]), E.env.order);
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace detail

/// Enveloping-algebra route: complete {lift(g)} together with the commutator
/// vectors (x_i (x) 1 - 1 (x) xbar_i) e_j to a left GB over R^env, project by
/// the multiplication map, discard zeros, and recompute a canonical left GB
/// over R. Projection drops the commutator columns from provenance since they
/// map to zero.
inline BimodulePresentation two_sided_gb_enveloping(const EnvAlgebra& E, const ModuleOrder& mo,
                                                    int ambient,
                                                    const std::vector<ModuleVector>& gens) {
    const AlgebraSpec& A = E.base;
    int n = A.nvars();
    int gen_count = static_cast<int>(gens.size());
    BimodulePresentation P;
    P.ambient = ambient;
    P.generators = gens;
    P.route = TwoSidedRoute::Enveloping;

    std::vector<ModuleVector> egens;
    for (const ModuleVector& g : gens) egens.push_back(env_lift_vec(g, n));
    for (int v = 0; v < n; ++v) {
        Polynomial d = sub(generator_poly(E.env, v), generator_poly(E.env, n + v), E.env.order);
        for (int j = 0; j < ambient; ++j) {
            ModuleVector vec = ModuleVector::zero(ambient);
            vec.set_component(j, d);
            egens.push_back(std::move(vec));
        }
    }
    ModuleOrder emo{E.env.order, mo.scheme};
    GroebnerBasis eg = left_groebner_basis(E.env, emo, ambient, egens);

    std::vector<ModuleVector> h0;
    std::vector<ModuleVector> h0prov;
    for (size_t l = 0; l < eg.elements.size(); ++l) {
        ModuleVector h = env_project_vec(E, eg.elements[l]);
        if (h.is_zero()) continue;
        ModuleVector ep = ModuleVector::zero(gen_count);
        for (const auto& [pos, q] : eg.provenance[l].comps)
            if (pos < gen_count) ep.comps.emplace(pos, q);
        h0.push_back(std::move(h));
        h0prov.push_back(std::move(ep));
    }

    GroebnerBasis hb = left_groebner_basis(A, mo, ambient, h0);
    P.basis = hb.elements;
    P.env_provenance = detail::compose_env_provenance(E, hb.provenance, h0prov, gen_count);
    detail::verify_two_sided(E, mo, P);
    return P;
}

/// Right-closure route: alternate left GB completion with adjoining the
/// nonzero normal forms of basis * variable until stable. Terminates because
/// each adjoined remainder strictly enlarges the leading-term module.
inline BimodulePresentation two_sided_gb_closure(const EnvAlgebra& E, const ModuleOrder& mo,
                                                 int ambient,
                                                 const std::vector<ModuleVector>& gens) {
    const AlgebraSpec& A = E.base;
    int n = A.nvars();
    int gen_count = static_cast<int>(gens.size());
    BimodulePresentation P;
    P.ambient = ambient;
    P.generators = gens;
    P.route = TwoSidedRoute::Closure;

    std::vector<ModuleVector> cur = gens;
    std::vector<ModuleVector> curprov;
    for (int t = 0; t < gen_count; ++t)
        curprov.push_back(ModuleVector::unit(t, gen_count, 2 * n));

    for (;;) {
        GroebnerBasis gb = left_groebner_basis(A, mo, ambient, cur);
        std::vector<ModuleVector> prov =
            detail::compose_env_provenance(E, gb.provenance, curprov, gen_count);
        bool stable = true;
        std::vector<ModuleVector> next = gb.elements;
        std::vector<ModuleVector> nextprov = prov;
        for (size_t l = 0; l < gb.elements.size(); ++l) {
            for (int v = 0; v < n; ++v) {
                ModuleVector hv = right_mul(A, gb.elements[l], generator_poly(A, v));
                DivisionRecord rec = normal_form(A, mo, hv, gb.elements);
                if (rec.remainder.is_zero()) continue;
                stable = false;
                ModuleVector rp =
                    left_mul(E.env, generator_poly(E.env, n + v), prov[l]);
                for (size_t u = 0; u < gb.elements.size(); ++u)
                    if (!rec.quotients[u].is_zero())
                        rp = sub(rp, left_mul(E.env, env_lift(rec.quotients[u], n), prov[u]),
                                 E.env.order);
                next.push_back(rec.remainder);
                nextprov.push_back(std::move(rp));
            }
        }
        if (stable) {
            P.basis = gb.elements;
            P.env_provenance = std::move(prov);
            break;
        }
        cur = std::move(next);
        curprov = std::move(nextprov);
    }
    detail::verify_two_sided(E, mo, P);
    return P;
}

/// Dispatcher used by the front end: verified central generators take the
/// fast path (their left GB is already two-sided), everything else goes
/// through the enveloping route. A false centralizing claim is an input error.
inline BimodulePresentation bimodule_presentation(const EnvAlgebra& E, const ModuleOrder& mo,
                                                  int ambient,
                                                  const std::vector<ModuleVector>& gens,
                                                  bool centralizing) {
    const AlgebraSpec& A = E.base;
    if (!centralizing) return two_sided_gb_enveloping(E, mo, ambient, gens);

    for (size_t t = 0; t < gens.size(); ++t)
        if (!is_central(A, gens[t]).central())
            throw Error("generator " + std::to_string(t + 1) +
                        " is declared centralizing but is not central");
    BimodulePresentation P;
    P.ambient = ambient;
    P.generators = gens;
    P.centralizing = true;
    P.route = TwoSidedRoute::Central;
    GroebnerBasis gb = left_groebner_basis(A, mo, ambient, gens);
    P.basis = gb.elements;
    int n = A.nvars();
    for (const ModuleVector& row : gb.provenance) {
        ModuleVector ep = ModuleVector::zero(static_cast<int>(gens.size()));
        for (const auto& [t, p] : row.comps) ep.comps.emplace(t, env_lift(p, n));
        P.env_provenance.push_back(std::move(ep));
    }
    detail::verify_two_sided(E, mo, P);
    return P;
}

/// Block-placed copies of the basis generating L^s inside R^{m*s}: for each
/// basis element, one copy per block, flat position i*m + j.
inline std::vector<ModuleVector> l_power_generators(const BimodulePresentation& P, int s) {
    std::vector<ModuleVector> out;
    for (const ModuleVector& h : P.basis) {
        for (int i = 0; i < s; ++i) {
            ModuleVector v = ModuleVector::zero(P.ambient * s);
            for (const auto& [j, p] : h.comps) v.comps.emplace(i * P.ambient + j, p);
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace pbwtor
