#include <string>

#include "doctest.h"
#include "linfty/fixtures.hpp"
#include "linfty/hodge.hpp"
#include "linfty/linalg.hpp"
#include "linfty/transfer.hpp"
#include "linfty/vector_field.hpp"

using namespace linfty;

TEST_CASE("zero eta or zero differential induce the abelian structure") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[0], 11));
    HomogeneousMap zero_eta(a.space, a.space, -1);
    LInfinityStructure l = induce_l_infinity(a, zero_eta, 5);
    for (int n = 2; n <= 5; ++n) CHECK(l.op(n).is_zero());

    Dgla heis = heis_dgla();  // d = 0
    LInfinityStructure lh = induce_l_infinity(heis, random_degree_map(heis.space, -1, 3), 5);
    for (int n = 2; n <= 5; ++n) CHECK(lh.op(n).is_zero());
}

TEST_CASE("acyclic case recovers the bracket at arity 2") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[0], 13));
    HodgeData h = build_hodge_data(a.space, a.d);
    REQUIRE(h.harmonics.empty());  // acyclic: d eta + eta d = Id
    LInfinityStructure l = induce_l_infinity(a, h.eta, 4);
    CHECK(l.op(2) == a.bracket);
    CHECK_FALSE(a.bracket.is_zero());
}

TEST_CASE("theorem output passes the full check with hodge and random eta") {
    for (std::uint64_t seed = 21; seed <= 23; ++seed) {
        for (Dgla& a : dgla_fixture_family(seed, 4)) {
            HodgeData h = build_hodge_data(a.space, a.d);
            LInfinityStructure l1 = induce_l_infinity(a, h.eta, 5);
            CHECK(check_l_infinity(l1, 5).valid());
            LInfinityStructure l2 = induce_l_infinity(a, random_degree_map(a.space, -1, seed * 7), 5);
            CHECK(check_l_infinity(l2, 5).valid());
        }
    }
}

TEST_CASE("explicit arity-3 formula coincides with the recursion") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[3], 17));
    HomogeneousMap eta = random_degree_map(a.space, -1, 99);
    LInfinityStructure l = induce_l_infinity(a, eta, 3);
    const GradedSpace& s = a.space;
    auto mu2 = [&](const Vec& x, const Vec& y) { return l.op(2).eval({x, y}); };
    auto br = [&](const Vec& x, const Vec& y) { return a.bracket.eval({x, y}); };
    for (const Tuple& t : canonical_tuples(s, 3)) {
        Vec v1 = s.basis_vec(t[0]), v2 = s.basis_vec(t[1]), v3 = s.basis_vec(t[2]);
        int p1 = s.par(t[0]), p2 = s.par(t[1]), p3 = s.par(t[2]);
        Vec expect = vec_scale(Scalar(-1), eta.apply(br(mu2(v1, v2), v3)));
        vec_add_scaled(expect, Scalar(p2 * p3 % 2 ? -1 : 1), eta.apply(br(mu2(v1, v3), v2)));
        vec_add_scaled(expect, Scalar(p1 * (p2 + p3) % 2 ? 1 : -1), eta.apply(br(mu2(v2, v3), v1)));
        CHECK(l.op(3).eval_basis(t) == expect);
    }
}

TEST_CASE("recursion-based defect evaluator agrees with the direct double sum") {
    for (Dgla& a : dgla_fixture_family(29, 3)) {
        HodgeData h = build_hodge_data(a.space, a.d);
        LInfinityStructure l = induce_l_infinity(a, h.eta, 5);
        for (int n = 3; n <= 5; ++n)
            for (const Tuple& t : canonical_tuples(a.space, n)) {
                Vec direct = jacobi_defect(l, n, t);
                Vec fast = fast_jacobi_defect(a, h.eta, l, n, t);
                CHECK(direct == fast);
                CHECK(vec_is_zero(direct));
            }
    }
}

TEST_CASE("kuranishi morphism satisfies the abelian morphism equations") {
    for (Dgla& a : dgla_fixture_family(37, 5)) {
        HodgeData h = build_hodge_data(a.space, a.d);
        LInfinityStructure l = induce_l_infinity(a, h.eta, 5);
        LMorphismToAbelian k = kuranishi_morphism(a, h.eta);
        CHECK(check_morphism_to_abelian(k, l, 5).valid());
    }
}

TEST_CASE("identity morphism between abelian structures passes") {
    GradedSpace s({{"p", 0}, {"q", 1}});
    HomogeneousMap d(s, s, 1);
    d.set(1, 0, Scalar(1));
    LInfinityStructure l = abelian_structure(s, d, 4);
    LMorphismToAbelian f(s, s, d);
    f.set_component(multimap_from_homogeneous(HomogeneousMap::identity(s)));
    CHECK(check_morphism_to_abelian(f, l, 4).valid());
}

TEST_CASE("perturbing K_2 breaks the morphism at arity 2") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[0], 41));
    HodgeData h = build_hodge_data(a.space, a.d);
    LInfinityStructure l = induce_l_infinity(a, h.eta, 3);
    // find an entry whose bump produces an arity-2 defect
    bool found = false;
    for (const Tuple& t : canonical_tuples(a.space, 2)) {
        int want = a.space.degree(t[0]) + a.space.degree(t[1]) - 1;
        for (int j = 0; j < a.space.dim(); ++j) {
            if (a.space.degree(j) != want) continue;
            LMorphismToAbelian k = kuranishi_morphism(a, h.eta);
            MultiMap k2 = k.component(2);
            k2.add_entry(t, j, Scalar(1));
            k.set_component(std::move(k2));
            StructureReport r = check_morphism_to_abelian(k, l, 3);
            if (!r.defects.at(2).empty()) {
                found = true;
                break;
            }
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("complementary recursion: lambda_2 is twice the bracket") {
    Dgla heis = heis_dgla();
    HomogeneousMap zero_eta(heis.space, heis.space, -1);
    MultiMap l2 = complementary_lambda(heis, zero_eta, 2);
    // hand expansion of the two shuffles gives [v1,v2] twice
    MultiMap expect = heis.bracket;
    expect.add_scaled(heis.bracket, Scalar(1));
    CHECK(l2 == expect);

    // with eta = 0 the smoothing term dies: m_2 = lambda_2
    LInfinityStructure m = complementary_structure(heis, zero_eta, 3);
    CHECK(m.op(2) == l2);
    CHECK(m.op(1).is_zero());  // d = 0 here
}

TEST_CASE("complementary structure check is recorded, not assumed") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[1], 43));
    HodgeData h = build_hodge_data(a.space, a.d);
    LInfinityStructure m = complementary_structure(a, h.eta, 4);
    CHECK(m.op(1) == multimap_from_homogeneous(a.d));
    StructureReport r = check_l_infinity(m, 4);
    // experimental output: the recursion is reported as found
    std::string verdict = r.valid() ? "valid" : "defects found";
    MESSAGE("complementary structure check through arity 4: " << verdict);
    CHECK(r.checked_arity == 4);
}

TEST_CASE("a-infinity transfer: eta = 0 kills everything above arity 1") {
    Dga a = end_dga(end_profiles()[0], 47);
    HomogeneousMap zero_eta(a.space, a.space, -1);
    AInfinityStructure m = induce_a_infinity(a, zero_eta, 5);
    for (int n = 2; n <= 5; ++n) CHECK(m.op(n).is_zero());
}

TEST_CASE("a-infinity transfer: acyclic hodge eta recovers the product") {
    Dga a = end_dga(end_profiles()[0], 49);
    HodgeData h = build_hodge_data(a.space, a.d);
    REQUIRE(h.harmonics.empty());
    AInfinityStructure m = induce_a_infinity(a, h.eta, 3);
    CHECK(m.op(2) == a.product);
}

TEST_CASE("displayed m_3 formula holds") {
    Dga a = end_dga(end_profiles()[4], 53);
    HomogeneousMap eta = random_degree_map(a.space, -1, 54);
    AInfinityStructure m = induce_a_infinity(a, eta, 3);
    const GradedSpace& s = a.space;
    const int dim = s.dim();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Vec m2ij = m.op(2).eval_basis({i, j});
                Vec m2jk = m.op(2).eval_basis({j, k});
                // m_3(a1,a2,a3) = eta(-m_2(a1,a2) a3 + a1 m_2(a2,a3))
                Vec inner = vec_sub(a.product.eval_insert({i}, m2jk, {}),
                                    a.product.eval_insert({}, m2ij, {k}));
                CHECK(m.op(3).eval_basis({i, j, k}) == eta.apply(inner));
            }
}

TEST_CASE("a-infinity transfer output passes the check and symmetrizes validly") {
    for (std::uint64_t seed = 61; seed <= 62; ++seed) {
        for (Dga& a : dga_fixture_family(seed, 3)) {
            HodgeData h = build_hodge_data(a.space, a.d);
            AInfinityStructure m = induce_a_infinity(a, h.eta, 5);
            CHECK(check_a_infinity(m, 5).valid());
            LInfinityStructure l = symmetrize(m, 5);
            CHECK(check_l_infinity(l, 5).valid());
        }
    }
}
