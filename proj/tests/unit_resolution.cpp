#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("cokernel presentations prune zero relation rows") {
    AlgebraSpec A = make_kxy();
    std::vector<ModuleVector> rows = vecs(A, {{"x", "0"}, {"0", "0"}, {"0", "y"}});
    LeftPresentation P = presentation_from_cokernel(2, matrix_from_rows(2, rows));
    CHECK(P.cover_rank == 2);
    CHECK(P.relations.row_count() == 2);
    REQUIRE(P.pruned_relation_rows.size() == 1);
    CHECK(P.pruned_relation_rows[0] == 1);
    CHECK_THROWS_AS(presentation_from_cokernel(0, PolyMatrix{}), Error);
}

TEST_CASE("generator presentations cover by one column per generator") {
    AlgebraSpec A = make_usl2();
    ModuleOrder mo = top_order(A);
    std::vector<ModuleVector> gens =
        vecs(A, {{"y^3", "x"}, {"y", "x*z"}, {"0", "x*y^2*z - 2*y*z^2 + 2*y*z - x"}});
    LeftPresentation P = presentation_from_generators(A, mo, 2, gens);
    CHECK(P.cover_rank == 3);
    CHECK(P.relations.row_count() == 1);
    CHECK(P.relations.cols == 3);
    REQUIRE(P.generators.has_value());
    CHECK(P.generators->row_count() == 3);
    CHECK_THROWS_AS(presentation_from_generators(A, mo, 2, {}), Error);
}

TEST_CASE("free resolution of the Koszul quotient k[x,y]/(x,y)") {
    AlgebraSpec A = make_kxy();
    ModuleOrder mo = top_order(A);
    LeftPresentation P =
        presentation_from_cokernel(1, matrix_from_rows(1, vecs(A, {{"x"}, {"y"}})));
    FreeResolution res = free_resolution(A, mo, P, 5);
    CHECK(res.complete);
    REQUIRE(res.ranks.size() >= 3);
    CHECK(res.ranks[0] == 1);
    CHECK(res.ranks[1] == 2);
    CHECK(res.ranks[2] == 1);
    for (size_t d = 0; d + 1 < res.diffs.size(); ++d)
        CHECK(matrix_product_is_zero(A, res.diffs[d + 1], res.diffs[d]));
}

TEST_CASE("free resolution of the U(sl2) module stops at the syzygy row") {
    AlgebraSpec A = make_usl2();
    ModuleOrder mo = top_order(A);
    std::vector<ModuleVector> gens =
        vecs(A, {{"y^3", "x"}, {"y", "x*z"}, {"0", "x*y^2*z - 2*y*z^2 + 2*y*z - x"}});
    LeftPresentation P = presentation_from_generators(A, mo, 2, gens);
    FreeResolution res = free_resolution(A, mo, P, 6);
    CHECK(res.complete);
    CHECK(res.ranks == std::vector<int>{3, 1});
    REQUIRE(res.diffs.size() == 1);
    CHECK(submodule_equal(A, mo, 3, res.diffs[0].rows, vecs(A, {{"1", "-y^2", "1"}})));
}

TEST_CASE("a free module resolves immediately") {
    AlgebraSpec A = make_kxy();
    ModuleOrder mo = top_order(A);
    LeftPresentation P = presentation_from_cokernel(2, matrix_from_rows(2, {}));
    FreeResolution res = free_resolution(A, mo, P, 3);
    CHECK(res.complete);
    CHECK(res.ranks == std::vector<int>{2, 0});
    CHECK(res.diffs.size() == 1);
    CHECK(res.diffs[0].row_count() == 0);
}

TEST_CASE("truncated resolutions are reported incomplete") {
    AlgebraSpec A = make_kxyz();
    ModuleOrder mo = top_order(A);
    LeftPresentation P =
        presentation_from_cokernel(1, matrix_from_rows(1, vecs(A, {{"x"}, {"y"}, {"z"}})));
    FreeResolution res = free_resolution(A, mo, P, 1);
    CHECK_FALSE(res.complete);
    CHECK(res.length() == 1);
}

TEST_CASE("centralizer witnesses report the offending commutators") {
    AlgebraSpec A = make_usl2();
    CentralizerWitness w = is_central(A, vec(A, {"1/2*z^2 + 2*x*y - z", "1"}));
    CHECK(w.central());
    for (const ModuleVector& c : w.commutators) CHECK(c.is_zero());

    CentralizerWitness bad = is_central(A, vec(A, {"x", "0"}));
    CHECK_FALSE(bad.central());
    // z x - x z = 2x
    CHECK(bad.commutators[2] == vec(A, {"2*x", "0"}));
}

TEST_CASE("two-sided routes agree on the Casimir bimodule") {
    AlgebraSpec A = make_usl2();
    ModuleOrder mo = top_order(A);
    EnvAlgebra E = enveloping(A);
    std::vector<ModuleVector> gens =
        vecs(A, {{"1/2*z^2 + 2*x*y - z", "1"}, {"1", "1/2*z^2 + 2*x*y - z"}});

    BimodulePresentation env = two_sided_gb_enveloping(E, mo, 2, gens);
    BimodulePresentation clo = two_sided_gb_closure(E, mo, 2, gens);
    BimodulePresentation cen = bimodule_presentation(E, mo, 2, gens, true);

    CHECK(env.route == TwoSidedRoute::Enveloping);
    CHECK(clo.route == TwoSidedRoute::Closure);
    CHECK(cen.route == TwoSidedRoute::Central);

    std::vector<ModuleVector> expected =
        vecs(A, {{"2", "z^2 + 4*x*y - 2*z"}, {"z^2 + 4*x*y - 2*z", "2"}});
    CHECK(env.basis == expected);
    CHECK(clo.basis == expected);
    CHECK(cen.basis == expected);
}

TEST_CASE("two-sided routes agree on a commutative ideal") {
    AlgebraSpec A = make_kxy();
    ModuleOrder mo = top_order(A);
    EnvAlgebra E = enveloping(A);
    std::vector<ModuleVector> gens = vecs(A, {{"x^2"}, {"x*y"}});
    BimodulePresentation env = two_sided_gb_enveloping(E, mo, 1, gens);
    BimodulePresentation clo = two_sided_gb_closure(E, mo, 1, gens);
    CHECK(env.basis == clo.basis);
    CHECK(submodule_equal(A, mo, 1, env.basis, gens));
}

TEST_CASE("the Weyl ideal of x closes to the unit ideal") {
    AlgebraSpec A = make_weyl();
    ModuleOrder mo = top_order(A);
    EnvAlgebra E = enveloping(A);
    std::vector<ModuleVector> gens = vecs(A, {{"x"}});
    BimodulePresentation env = two_sided_gb_enveloping(E, mo, 1, gens);
    BimodulePresentation clo = two_sided_gb_closure(E, mo, 1, gens);
    std::vector<ModuleVector> unit = vecs(A, {{"1"}});
    CHECK(env.basis == unit);
    CHECK(clo.basis == unit);
}

TEST_CASE("a false centralizing claim is rejected") {
    AlgebraSpec A = make_weyl();
    ModuleOrder mo = top_order(A);
    EnvAlgebra E = enveloping(A);
    CHECK_THROWS_AS(bimodule_presentation(E, mo, 1, vecs(A, {{"x"}}), true), Error);
}

TEST_CASE("enveloping provenance rebuilds the basis from the generators") {
    AlgebraSpec A = make_usl2();
    ModuleOrder mo = top_order(A);
    EnvAlgebra E = enveloping(A);
    std::vector<ModuleVector> gens =
        vecs(A, {{"1/2*z^2 + 2*x*y - z", "1"}, {"1", "1/2*z^2 + 2*x*y - z"}});
    for (const BimodulePresentation& P : {two_sided_gb_enveloping(E, mo, 2, gens),
                                          two_sided_gb_closure(E, mo, 2, gens)}) {
        REQUIRE(P.env_provenance.size() == P.basis.size());
        for (size_t l = 0; l < P.basis.size(); ++l) {
            ModuleVector rebuilt = ModuleVector::zero(2);
            for (size_t t = 0; t < gens.size(); ++t)
                rebuilt = add(rebuilt,
                              env_action(E, P.env_provenance[l].component(static_cast<int>(t)),
                                         gens[t]),
                              A.order);
            CHECK(rebuilt == P.basis[l]);
        }
    }
}

TEST_CASE("l_power_generators lays blocks out element-major") {
    AlgebraSpec A = make_usl2();
    ModuleOrder mo = top_order(A);
    EnvAlgebra E = enveloping(A);
    std::vector<ModuleVector> gens =
        vecs(A, {{"1/2*z^2 + 2*x*y - z", "1"}, {"1", "1/2*z^2 + 2*x*y - z"}});
    BimodulePresentation P = bimodule_presentation(E, mo, 2, gens, true);
    std::vector<ModuleVector> blocks = l_power_generators(P, 3);
    REQUIRE(blocks.size() == 6);
    std::vector<ModuleVector> expected = vecs(
        A, {{"2", "z^2 + 4*x*y - 2*z", "0", "0", "0", "0"},
            {"0", "0", "2", "z^2 + 4*x*y - 2*z", "0", "0"},
            {"0", "0", "0", "0", "2", "z^2 + 4*x*y - 2*z"},
            {"z^2 + 4*x*y - 2*z", "2", "0", "0", "0", "0"},
            {"0", "0", "z^2 + 4*x*y - 2*z", "2", "0", "0"},
            {"0", "0", "0", "0", "z^2 + 4*x*y - 2*z", "2"}});
    CHECK(blocks == expected);
}

TEST_CASE("env_action multiplies from both sides") {
    AlgebraSpec A = make_usl2();
    EnvAlgebra E = enveloping(A);
    ModuleVector g = vec(A, {"x", "y"});
    // x (x) ybar acts as x * g * y
    Polynomial q = multiply(E.env, p(E.env, "x"), p(E.env, "y_op"));
    ModuleVector expected = right_mul(A, left_mul(A, p(A, "x"), g), p(A, "y"));
    CHECK(env_action(E, q, g) == expected);
}
