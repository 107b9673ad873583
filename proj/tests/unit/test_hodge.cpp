#include "doctest.h"
#include "linfty/fixtures.hpp"
#include "linfty/hodge.hpp"
#include "linfty/linalg.hpp"

using namespace linfty;

TEST_CASE("zero differential gives the identity projection") {
    Dgla heis = heis_dgla();
    HodgeData h = build_hodge_data(heis.space, heis.d);
    CHECK(h.p_h == HomogeneousMap::identity(heis.space));
    CHECK(h.eta.is_zero());
    CHECK(h.harmonics.size() == 3);
    CHECK(h.betti(1) == 2);
    CHECK(h.betti(2) == 1);
    CHECK(hodge_violations(h, heis.d).empty());
}

TEST_CASE("acyclic complex gives zero projection and eta inverting d") {
    Dgla a = acyclic_two_term_dgla();  // d u = 2 v
    HodgeData h = build_hodge_data(a.space, a.d);
    CHECK(h.p_h.is_zero());
    CHECK(h.harmonics.empty());
    CHECK(compose(h.eta, a.d) == HomogeneousMap::identity(a.space) - compose(a.d, h.eta) - h.p_h);
    CHECK(h.eta.at(0, 1) == scalar(1, 2));
    CHECK(hodge_violations(h, a.d).empty());
}

TEST_CASE("three-term complex with one-dimensional cohomology") {
    Dgla a = three_term_complex_dgla();
    HodgeData h = build_hodge_data(a.space, a.d);
    CHECK(h.harmonics.size() == 1);
    CHECK(h.harmonics.front().degree == 1);
    CHECK(hodge_violations(h, a.d).empty());
    // the side identities of this particular construction
    CHECK(compose(h.eta, h.eta).is_zero());
    CHECK(compose(h.eta, h.p_h).is_zero());
    CHECK(compose(h.p_h, h.eta).is_zero());
}

TEST_CASE("hodge data on every endomorphism fixture passes all identities") {
    for (Dgla& a : dgla_fixture_family(8, 10)) {
        HodgeData h = build_hodge_data(a.space, a.d);
        auto bad = hodge_violations(h, a.d);
        if (!bad.empty()) {
            for (const auto& b : bad) MESSAGE(b);
        }
        CHECK(bad.empty());
    }
}

TEST_CASE("build_hodge_data rejects a non-complex") {
    GradedSpace s({{"p", 0}, {"q", 1}, {"r", 2}});
    HomogeneousMap d(s, s, 1);
    d.set(1, 0, Scalar(1));
    d.set(2, 1, Scalar(1));
    CHECK_THROWS_AS(build_hodge_data(s, d), std::invalid_argument);
    HomogeneousMap eta(s, s, -1);
    CHECK_THROWS_AS(build_hodge_data(s, eta), std::invalid_argument);
}

TEST_CASE("obstruction form of heis pairs the degree-1 classes into [z]") {
    Dgla heis = heis_dgla();
    HodgeData h = build_hodge_data(heis.space, heis.d);
    ObstructionForm f = obstruction_map(heis, h);
    CHECK_FALSE(f.is_zero());
    // [x] and [y] are harmonics 0 and 1; their bracket hits the [z] class
    int zi = -1;
    for (std::size_t i = 0; i < f.basis.size(); ++i)
        if (f.basis[i].degree == 2) zi = static_cast<int>(i);
    REQUIRE(zi >= 0);
    CHECK(f.table[0][1][zi] == 1);
    CHECK(f.table[1][0][zi] == 1);
    CHECK(vec_is_zero(f.table[0][0]));
}

TEST_CASE("abelian bracket gives the zero obstruction form") {
    Dgla a = three_term_complex_dgla();
    HodgeData h = build_hodge_data(a.space, a.d);
    CHECK(obstruction_map(a, h).is_zero());
}

TEST_CASE("acyclic fixture has an empty obstruction form") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[0], 5));
    HodgeData h = build_hodge_data(a.space, a.d);
    ObstructionForm f = obstruction_map(a, h);
    CHECK(f.basis.empty());
    CHECK(f.is_zero());
}
