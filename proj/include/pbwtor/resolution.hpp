#pragma once

#include <optional>

#include "pbwtor/groebner.hpp"

namespace pbwtor {

/// Presentation of a left module N as R^{cover_rank} modulo the row span of
/// `relations`. Modules given by generators inside an ambient free module are
/// converted (cover rank = number of generators, relations = their syzygies)
/// and keep the original generator matrix for the record.
struct LeftPresentation {
    int cover_rank = 0;
    PolyMatrix relations;
    std::optional<PolyMatrix> generators;
    std::vector<int> pruned_relation_rows;
};

inline LeftPresentation presentation_from_cokernel(int cover_rank, const PolyMatrix& relations) {
    if (cover_rank <= 0) throw Error("cover rank must be positive");
    if (relations.cols != cover_rank)
        throw DimensionMismatch("relation rows of rank " + std::to_string(relations.cols) +
                                " for a cover of rank " + std::to_string(cover_rank));
    LeftPresentation P;
    P.cover_rank = cover_rank;
    P.relations.cols = cover_rank;
    for (int r = 0; r < relations.row_count(); ++r) {
        if (relations.rows[r].is_zero())
            P.pruned_relation_rows.push_back(r);
        else
            P.relations.rows.push_back(relations.rows[r]);
    }
    return P;
}

inline LeftPresentation presentation_from_generators(const AlgebraSpec& A, const ModuleOrder& mo,
                                                     int ambient,
                                                     std::vector<ModuleVector> gens) {
    if (gens.empty()) throw Error("generator form needs at least one generator");
    LeftPresentation P;
    P.cover_rank = static_cast<int>(gens.size());
    SyzygyBasis syz = left_syzygies(A, mo, ambient, gens);
    P.relations = matrix_from_rows(P.cover_rank, std::move(syz.generators));
    P.generators = matrix_from_rows(ambient, std::move(gens));
    return P;
}

/// diffs[k] is the differential from R^{ranks[k+1]} to R^{ranks[k]}; rows are
/// the images of the source basis. `complete` marks a certified truncation:
/// the syzygy module of the last differential's rows vanished.
struct FreeResolution {
    std::vector<int> ranks;
    std::vector<PolyMatrix> diffs;
    bool complete = false;

    int length() const { return static_cast<int>(diffs.size()); }
};

inline FreeResolution free_resolution(const AlgebraSpec& A, const ModuleOrder& mo,
                                      const LeftPresentation& P, int depth) {
    if (depth < 1) throw Error("resolution depth must be at least 1");
    FreeResolution res;
    res.ranks.push_back(P.cover_rank);
    res.diffs.push_back(P.relations);
    res.ranks.push_back(P.relations.row_count());
    while (res.length() < depth) {
        const PolyMatrix& last = res.diffs.back();
        if (last.row_count() == 0) break;
        SyzygyBasis syz = left_syzygies(A, mo, last.cols, last.rows);
        if (syz.generators.empty()) {
            res.complete = true;
            break;
        }
        res.diffs.push_back(matrix_from_rows(last.row_count(), std::move(syz.generators)));
        res.ranks.push_back(res.diffs.back().row_count());
    }
    if (res.diffs.back().row_count() == 0) res.complete = true;
    return res;
}

/// Exact check that every row of M1 maps to zero through M2 (row-vector
/// convention, left coefficients).
inline bool matrix_product_is_zero(const AlgebraSpec& A, const PolyMatrix& M1,
                                   const PolyMatrix& M2) {
    for (const ModuleVector& row : M1.rows)
        if (!vec_times_matrix(A, row, M2).is_zero()) return false;
    return true;
}

}  // namespace pbwtor
