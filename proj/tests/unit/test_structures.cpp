#include "doctest.h"
#include "linfty/dga.hpp"
#include "linfty/dgla.hpp"
#include "linfty/fixtures.hpp"
#include "linfty/linalg.hpp"

using namespace linfty;

namespace {

GradedSpace mixed_space() { return GradedSpace({{"a", 0}, {"b", 1}, {"c", 1}, {"e", 2}}); }

Vec bracket2(const MultiMap& b, const Vec& x, const Vec& y) { return b.eval({x, y}); }

}  // namespace

TEST_CASE("abelian input gives an all-empty dgla report") {
    Dgla a = abelian_dgla(mixed_space());
    DglaReport r = check_dgla(a);
    CHECK(r.valid());
}

TEST_CASE("broken d^2 lands in the d_squared bucket") {
    GradedSpace s({{"p", 0}, {"q", 1}, {"r", 2}});
    HomogeneousMap d(s, s, 1);
    d.set(1, 0, Scalar(1));
    d.set(2, 1, Scalar(1));  // d^2 p = r != 0
    Dgla a(s, d, MultiMap(s, s, 2, 0));
    DglaReport r = check_dgla(a);
    CHECK_FALSE(r.valid());
    REQUIRE(r.d_squared.size() == 1);
    CHECK(r.d_squared.front().tuple == Tuple{0});
    CHECK(r.leibniz.empty());
}

TEST_CASE("heis example is a valid dgla") {
    Dgla heis = heis_dgla();
    CHECK(check_dgla(heis).valid());
    // [x,y] = [y,x] = z per the wedge convention on odd generators
    CHECK(heis.bracket.eval_basis({0, 1}) == heis.space.basis_vec(2));
    CHECK(heis.bracket.eval_basis({1, 0}) == heis.space.basis_vec(2));
}

TEST_CASE("jacobi defect n=1 is the squared differential") {
    GradedSpace s({{"p", 0}, {"q", 1}, {"r", 2}});
    HomogeneousMap d(s, s, 1);
    d.set(1, 0, Scalar(3));
    d.set(2, 1, Scalar(2));
    LInfinityStructure l = abelian_structure(s, d, 4);
    Vec defect = jacobi_defect(l, 1, {0});
    CHECK(defect == compose(d, d).apply(s.basis_vec(0)));
    CHECK_FALSE(vec_is_zero(defect));
}

TEST_CASE("jacobi defects match the displayed n=2 and n=3 expansions") {
    // regression for the Eq-style double sum: arbitrary (not necessarily
    // valid) operation families must reproduce the hand expansions verbatim
    GradedSpace s = mixed_space();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        MultiMap mu1 = random_multi_map(s, 1, 1, seed * 11);
        MultiMap mu2 = random_multi_map(s, 2, 0, seed * 13);
        MultiMap mu3 = random_multi_map(s, 3, -1, seed * 17);
        LInfinityStructure l(s, 4);
        l.set_op(mu1);
        l.set_op(mu2);
        l.set_op(mu3);

        auto d1 = [&](const Vec& v) { return mu1.eval({v}); };

        for (const Tuple& t : canonical_tuples(s, 2)) {
            Vec v1 = s.basis_vec(t[0]), v2 = s.basis_vec(t[1]);
            int p1 = s.par(t[0]);
            // d[v1,v2] - [dv1,v2] - (-1)^{v1}[v1,dv2]
            Vec expect = d1(bracket2(mu2, v1, v2));
            expect = vec_sub(expect, bracket2(mu2, d1(v1), v2));
            vec_add_scaled(expect, Scalar(p1 ? 1 : -1), bracket2(mu2, v1, d1(v2)));
            CHECK(jacobi_defect(l, 2, t) == expect);
        }

        for (const Tuple& t : canonical_tuples(s, 3)) {
            Vec v1 = s.basis_vec(t[0]), v2 = s.basis_vec(t[1]), v3 = s.basis_vec(t[2]);
            int p1 = s.par(t[0]), p2 = s.par(t[1]), p3 = s.par(t[2]);
            Vec expect = bracket2(mu2, bracket2(mu2, v1, v2), v3);
            vec_add_scaled(expect, Scalar(((p1 + p2) * p3) % 2 ? -1 : 1),
                           bracket2(mu2, bracket2(mu2, v3, v1), v2));
            vec_add_scaled(expect, Scalar((p1 * (p2 + p3)) % 2 ? -1 : 1),
                           bracket2(mu2, bracket2(mu2, v2, v3), v1));
            vec_add_scaled(expect, Scalar(1), d1(mu3.eval({v1, v2, v3})));
            vec_add_scaled(expect, Scalar(1), mu3.eval({d1(v1), v2, v3}));
            vec_add_scaled(expect, Scalar(p1 ? -1 : 1), mu3.eval({v1, d1(v2), v3}));
            vec_add_scaled(expect, Scalar((p1 + p2) % 2 ? -1 : 1), mu3.eval({v1, v2, d1(v3)}));
            CHECK(jacobi_defect(l, 3, t) == expect);
        }
    }
}

TEST_CASE("valid dgla viewed as L-infinity has zero defects through arity 5") {
    for (std::uint64_t seed = 2; seed <= 4; ++seed) {
        for (Dgla& a : dgla_fixture_family(seed, 8)) {
            REQUIRE(check_dgla(a).valid());
            LInfinityStructure l = as_l_infinity(a, 5);
            CHECK(check_l_infinity(l, 5).valid());
        }
    }
}

TEST_CASE("breaking the bracket shows up at arity 2") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[0], 7));
    // perturb one Leibniz-relevant bracket entry
    MultiMap broken = a.bracket;
    bool bumped = false;
    for (const Tuple& t : canonical_tuples(a.space, 2)) {
        int want = a.space.degree(t[0]) + a.space.degree(t[1]);
        for (int j = 0; j < a.space.dim() && !bumped; ++j)
            if (a.space.degree(j) == want && !vec_is_zero(a.d.apply(a.space.basis_vec(j)))) {
                broken.add_entry(t, j, Scalar(1));
                bumped = true;
            }
        if (bumped) break;
    }
    REQUIRE(bumped);
    LInfinityStructure l(a.space, 3);
    l.set_op(multimap_from_homogeneous(a.d));
    l.set_op(broken);
    StructureReport r = check_l_infinity(l, 2);
    CHECK_FALSE(r.valid());
    CHECK_FALSE(r.defects.at(2).empty());
}

TEST_CASE("endomorphism dga fixtures are valid dgas and their commutators valid dglas") {
    for (Dga& a : dga_fixture_family(42, 12)) {
        CHECK(check_dga(a).valid());
        CHECK_FALSE(a.d.is_zero());
        CHECK(check_dgla(commutator_dgla(a)).valid());
    }
}

TEST_CASE("dga passes the a-infinity check and abelian passes the l-infinity check") {
    Dga a = end_dga(end_profiles()[3], 5);
    AInfinityStructure m = as_a_infinity(a, 6);
    CHECK(check_a_infinity(m, 4).valid());

    GradedSpace s({{"p", 0}, {"q", 1}});
    HomogeneousMap d(s, s, 1);
    d.set(1, 0, Scalar(1));
    LInfinityStructure l = abelian_structure(s, d, 6);
    CHECK(check_l_infinity(l, 6).valid());
}

TEST_CASE("symmetrize of a dga is the graded commutator") {
    // upper-triangular 2x2 matrices in degree 0: symmetrization of the
    // product must be ab - ba computed independently
    Dga a = end_dga({{0, 0}, true, false, "tri2"}, 3);
    AInfinityStructure m = as_a_infinity(a, 3);
    LInfinityStructure l = symmetrize(m, 3);
    Dgla c = commutator_dgla(a);
    for (const Tuple& t : canonical_tuples(a.space, 2)) {
        Vec ab = a.product.eval_basis(t);
        Vec ba = a.product.eval_basis({t[1], t[0]});
        CHECK(l.op(2).eval_basis(t) == vec_sub(ab, ba));
        CHECK(c.bracket.eval_basis(t) == vec_sub(ab, ba));
    }
    CHECK(l.op(3).is_zero());
    CHECK(check_l_infinity(l, 3).valid());
}

TEST_CASE("symmetrize kills nothing when m_n vanish above 1") {
    GradedSpace s({{"p", 0}, {"q", 1}});
    AInfinityStructure m(s, 4);
    TensorMap m1(s, s, 1, 1);
    m1.set({0}, s.basis_vec(1));
    m.set_op(m1);
    LInfinityStructure l = symmetrize(m, 4);
    for (int n = 2; n <= 4; ++n) CHECK(l.op(n).is_zero());
    CHECK_FALSE(l.op(1).is_zero());
}
