#include <set>

#include "doctest.h"
#include "linfty/fixtures.hpp"
#include "linfty/linalg.hpp"
#include "linfty/vector_field.hpp"

using namespace linfty;

namespace {

std::set<int> defect_arities(const StructureReport& r) {
    std::set<int> out;
    for (const auto& [n, list] : r.defects)
        if (!list.empty()) out.insert(n);
    return out;
}

std::set<int> square_bands(const PolyVectorField& s) {
    std::set<int> out;
    for (int a = 0; a < s.coords(); ++a)
        for (const auto& [m, c] : s.component(a).terms()) out.insert(m.total());
    return out;
}

}  // namespace

TEST_CASE("abelian dgla gives the linear field carrying the shifted differential") {
    Dgla a = acyclic_two_term_dgla();  // d u = 2 v
    LInfinityStructure l = as_l_infinity(a, 3);
    PolyVectorField q = to_vector_field(l, 3);
    // mu_hat_1(u[1]) = (-1)^{0 + 1} d(u) = -2 v
    const VarFrame& frame = *q.frame();
    Monomial xu = Monomial::unit(frame.size(), 0);
    CHECK(q.component(1).coeff(xu) == scalar(-2));
    CHECK(q.component(0).is_zero());
    // single monomial overall: the field is linear
    for (int c = 0; c < q.coords(); ++c)
        for (const auto& [m, coeff] : q.component(c).terms()) CHECK(m.total() == 1);
    CHECK(square_vector_field(q).is_zero());
}

TEST_CASE("round trip through the field representation is exact") {
    GradedSpace s({{"a", 0}, {"b", 1}, {"c", 1}, {"e", 2}});
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        LInfinityStructure l(s, 4);
        l.set_op(random_multi_map(s, 1, 1, seed));
        l.set_op(random_multi_map(s, 2, 0, seed + 10));
        l.set_op(random_multi_map(s, 3, -1, seed + 20));
        l.set_op(random_multi_map(s, 4, -2, seed + 30));
        LInfinityStructure back = from_vector_field(to_vector_field(l, 4));
        for (int n = 1; n <= 4; ++n) CHECK(back.op(n) == l.op(n));
    }
}

TEST_CASE("valid structures square to zero, broken ones do not") {
    for (Dgla& a : dgla_fixture_family(31, 6)) {
        LInfinityStructure l = as_l_infinity(a, 5);
        PolyVectorField q = to_vector_field(l, 5);
        CHECK(square_vector_field(q).is_zero());
    }
    // breaking mu_2 must show up in the square
    Dgla a = commutator_dgla(end_dga(end_profiles()[0], 3));
    LInfinityStructure l(a.space, 4);
    l.set_op(multimap_from_homogeneous(a.d));
    l.set_op(random_multi_map(a.space, 2, 0, 77));
    PolyVectorField q = to_vector_field(l, 4);
    StructureReport r = check_l_infinity(l, 4);
    CHECK_FALSE(r.valid());
    CHECK_FALSE(square_vector_field(q).is_zero());
}

TEST_CASE("defective arities coincide with the nonzero square bands") {
    GradedSpace s({{"a", 0}, {"b", 1}, {"c", 1}, {"e", 2}});
    for (std::uint64_t seed = 40; seed <= 46; ++seed) {
        LInfinityStructure l(s, 5);
        l.set_op(random_multi_map(s, 1, 1, seed));
        l.set_op(random_multi_map(s, 2, 0, seed + 1));
        l.set_op(random_multi_map(s, 3, -1, seed + 2));
        PolyVectorField q = to_vector_field(l, 5);
        StructureReport r = check_l_infinity(l, 5);
        CHECK(defect_arities(r) == square_bands(square_vector_field(q)));
    }
}

TEST_CASE("hand-broken quadratic component produces a nonzero square") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[3], 9));
    LInfinityStructure l = as_l_infinity(a, 4);
    PolyVectorField q = to_vector_field(l, 4);
    REQUIRE(square_vector_field(q).is_zero());

    // bump one quadratic Taylor coefficient of a component
    PolyVectorField broken = q;
    bool bumped = false;
    for (int c = 0; c < q.coords() && !bumped; ++c) {
        int want = q.frame()->degree(c) + 1;
        for (const Tuple& t : canonical_tuples(a.space, 2)) {
            Monomial m = Monomial::unit(q.frame()->size(), t[0]).with(t[1], 1);
            if (m.graded_degree(*q.frame()) == want) {
                GradedPoly comp = q.component(c);
                comp.add_term(m, Scalar(1));
                broken.set_component(c, std::move(comp));
                bumped = true;
                break;
            }
        }
    }
    REQUIRE(bumped);
    CHECK_FALSE(square_vector_field(broken).is_zero());
    // the reader and the direct checker agree on the damage
    StructureReport r = check_l_infinity(from_vector_field(broken), 4);
    CHECK(defect_arities(r) == square_bands(square_vector_field(broken)));
}
