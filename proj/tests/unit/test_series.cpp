#include "doctest.h"
#include "linfty/fixtures.hpp"
#include "linfty/hodge.hpp"
#include "linfty/linalg.hpp"
#include "linfty/series.hpp"

using namespace linfty;

TEST_CASE("versal frame carries one parameter per harmonic with shifted degree") {
    Dgla heis = heis_dgla();
    HodgeData h = build_hodge_data(heis.space, heis.d);
    ParameterFrame full = ParameterFrame::versal(h, 'Z');
    CHECK(full.size() == 3);
    CHECK(full.vars()->degree(0) == 0);   // for the degree-1 classes
    CHECK(full.vars()->degree(2) == -1);  // for the degree-2 class
    ParameterFrame small = ParameterFrame::versal(h, '0');
    CHECK(small.size() == 2);
    CHECK(small.vars()->var(0).name == "t1");
    CHECK(small.vars()->var(1).name == "t2");
}

TEST_CASE("series terms respect homogeneity and truncation") {
    Dgla heis = heis_dgla();
    HodgeData h = build_hodge_data(heis.space, heis.d);
    ParameterFrame frame = ParameterFrame::versal(h, '0');
    FormalSeries s(heis.space, frame.vars(), {2}, 1);
    s.add_term(Monomial::unit(2, 0), heis.space.basis_vec(0));
    CHECK_FALSE(s.is_zero());
    // z has degree 2, so z * t1 breaks homogeneity at degree 1
    CHECK_THROWS_AS(s.add_term(Monomial::unit(2, 0), heis.space.basis_vec(2)), std::invalid_argument);
    // beyond the cap: silently truncated
    Monomial t1cubed = Monomial::unit(2, 0).with(0, 2);
    s.add_term(t1cubed, heis.space.basis_vec(0));
    CHECK(s.coeff(t1cubed) == vec_zero(3));
}

TEST_CASE("evaluation on constant series matches plain evaluation") {
    Dgla a = commutator_dgla(end_dga(end_profiles()[3], 71));
    VarFramePtr vars = make_frame({{"t", 0, -1, 0}});
    std::vector<int> caps{3};
    for (const Tuple& t : canonical_tuples(a.space, 2)) {
        FormalSeries x = FormalSeries::constant(a.space, vars, caps, a.space.basis_vec(t[0]));
        FormalSeries y = FormalSeries::constant(a.space, vars, caps, a.space.basis_vec(t[1]));
        FormalSeries val = eval_multi_on_series(a.bracket, {x, y});
        Vec direct = a.bracket.eval_basis(t);
        CHECK(val.coeff(Monomial(1)) == direct);
    }
}

TEST_CASE("odd parameters anticommute through the bracket evaluation") {
    // two odd parameters against odd-degree vectors: swapping the series
    // arguments must reproduce the graded antisymmetry of the bracket
    Dgla heis = heis_dgla();
    VarFramePtr vars = make_frame({{"u1", 1, -1, 0}, {"u2", 1, -1, 0}});
    std::vector<int> caps{3};
    // x, y have degree 1; u_i x has total degree 2
    FormalSeries sx(heis.space, vars, caps, 2);
    sx.add_term(Monomial::unit(2, 0), heis.space.basis_vec(0));
    FormalSeries sy(heis.space, vars, caps, 2);
    sy.add_term(Monomial::unit(2, 1), heis.space.basis_vec(1));
    FormalSeries xy = eval_multi_on_series(heis.bracket, {sx, sy});
    FormalSeries yx = eval_multi_on_series(heis.bracket, {sy, sx});
    // x u1 and y u2 are even in total, so the extended bracket is plainly
    // antisymmetric on them
    CHECK(xy == -yx);
    // the coefficient itself: [x,y] u1 u2 with one scalar crossing one odd vector
    Monomial u1u2 = Monomial::unit(2, 0).with(1, 1);
    Vec c = xy.coeff(u1u2);
    CHECK(c[2] == scalar(-1));
}

TEST_CASE("reframing embeds a series into a larger frame") {
    VarFramePtr small = make_frame({{"t1", 0, -1, 0}});
    VarFramePtr big = make_frame({{"t1", 0, -1, 0}, {"eps", 0, 1, 0}});
    GradedSpace s({{"v", 1}});
    FormalSeries f(s, small, {3}, 1);
    f.add_term(Monomial::unit(1, 0), s.basis_vec(0));
    FormalSeries g = f.reframed(big, {4}, 0);
    CHECK(g.coeff(Monomial::unit(2, 0)) == s.basis_vec(0));
    CHECK(g.degree() == 1);
}
