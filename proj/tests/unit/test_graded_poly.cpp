#include <random>

#include "doctest.h"
#include "linfty/graded_poly.hpp"

using namespace linfty;

namespace {

VarFramePtr frame_mixed() {
    // two odd coordinates, two even ones
    return make_frame({{"u", 1}, {"v", -1}, {"s", 0}, {"t", 2}});
}

GradedPoly random_homogeneous(const VarFramePtr& f, int cap, int want_degree, std::mt19937_64& rng,
                              int ring_cap) {
    // ring_cap leaves headroom so products in the tests never truncate
    GradedPoly p(f, ring_cap);
    std::uniform_int_distribution<int> coeff(-3, 3);
    // walk all monomials up to the cap by brute force
    std::vector<int> exp(f->size(), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == f->size()) {
            Monomial m(f->size());
            for (int j = 0; j < f->size(); ++j)
                for (int e = 0; e < exp[j]; ++e) m = m.with(j, 1);
            if (m.graded_degree(*f) == want_degree) p.add_term(m, coeff(rng));
            return;
        }
        int hi = f->var(i).max_exponent >= 0 ? std::min(left, f->var(i).max_exponent) : left;
        for (int e = 0; e <= hi; ++e) {
            exp[i] = e;
            self(self, i + 1, left - e);
        }
        exp[i] = 0;
    };
    rec(rec, 0, cap);
    return p;
}

}  // namespace

TEST_CASE("odd variables square to zero, even ones do not") {
    auto f = frame_mixed();
    auto u = GradedPoly::variable(f, 4, 0);
    auto s = GradedPoly::variable(f, 4, 2);
    CHECK((u * u).is_zero());
    CHECK_FALSE((s * s).is_zero());
}

TEST_CASE("graded commutativity and associativity") {
    auto f = frame_mixed();
    std::mt19937_64 rng(11);
    for (int da = -2; da <= 2; ++da) {
        for (int db = -2; db <= 2; ++db) {
            GradedPoly a = random_homogeneous(f, 3, da, rng, 12);
            GradedPoly b = random_homogeneous(f, 3, db, rng, 12);
            GradedPoly ab = a * b;
            GradedPoly ba = b * a;
            if (parity(da) && parity(db)) ba *= Scalar(-1);
            CHECK(ab == ba);
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        GradedPoly a = random_homogeneous(f, 4, 1, rng, 12);
        GradedPoly b = random_homogeneous(f, 4, -1, rng, 12);
        GradedPoly c = random_homogeneous(f, 4, 2, rng, 12);
        CHECK(((a * b) * c) == (a * (b * c)));
    }
}

TEST_CASE("left derivative satisfies the graded Leibniz rule") {
    auto f = frame_mixed();
    std::mt19937_64 rng(13);
    for (int var = 0; var < f->size(); ++var) {
        for (int da = -1; da <= 2; ++da) {
            for (int db = -1; db <= 2; ++db) {
                GradedPoly a = random_homogeneous(f, 3, da, rng, 12);
                GradedPoly b = random_homogeneous(f, 3, db, rng, 12);
                GradedPoly lhs = (a * b).derivative(var);
                GradedPoly rhs = a.derivative(var) * b;
                GradedPoly second = a * b.derivative(var);
                if (f->par(var) && parity(da)) second *= Scalar(-1);
                rhs += second;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("derivative of a plain power") {
    auto f = frame_mixed();
    auto t = GradedPoly::variable(f, 5, 3);
    GradedPoly t3 = t * t * t;
    GradedPoly d = t3.derivative(3);
    GradedPoly expect = Scalar(3) * (t * t);
    CHECK(d == expect);
}

TEST_CASE("substitution translates coordinates") {
    auto f = frame_mixed();
    // p = s*t + u*v
    GradedPoly s = GradedPoly::variable(f, 4, 2), t = GradedPoly::variable(f, 4, 3);
    GradedPoly u = GradedPoly::variable(f, 4, 0), v = GradedPoly::variable(f, 4, 1);
    GradedPoly p = s * t + u * v;
    // shift s -> s + 2
    std::vector<GradedPoly> images{u, v, s + GradedPoly::constant(f, 4, scalar(2)), t};
    GradedPoly q = p.substitute(images);
    CHECK(q == p + Scalar(2) * t);
    // substituting a wrong-degree image throws
    std::vector<GradedPoly> bad{u, v, t, t};
    CHECK_THROWS_AS(p.substitute(bad), std::invalid_argument);
}

TEST_CASE("group caps truncate independently") {
    auto f = make_frame({{"x", 1, -1, 0}, {"t", 0, -1, 1}});
    GradedPoly x = GradedPoly::variable(f, {2, 2}, 0);
    GradedPoly t = GradedPoly::variable(f, {2, 2}, 1);
    GradedPoly p = (GradedPoly::constant(f, {2, 2}, 1) + t) * (GradedPoly::constant(f, {2, 2}, 1) + t) *
                   (GradedPoly::constant(f, {2, 2}, 1) + t);
    // t^3 truncated away, lower terms kept
    CHECK(p.coeff(Monomial(2)) == 1);
    CHECK(p.coeff(Monomial::unit(2, 1)) == 3);
    Monomial t2 = Monomial::unit(2, 1).with(1, 1);
    CHECK(p.coeff(t2) == 3);
    CHECK(p.coeff(t2.with(1, 1)) == 0);
    // x budget is separate from t budget
    GradedPoly q = x * (t * t);
    CHECK_FALSE(q.is_zero());
}

TEST_CASE("max_exponent imposes first-order nilpotency on an even variable") {
    auto f = make_frame({{"eps", 0, 1}});
    GradedPoly e = GradedPoly::variable(f, 5, 0);
    CHECK((e * e).is_zero());
}

TEST_CASE("canonical printing") {
    auto f = make_frame({{"t1", 0}, {"t2", 0}});
    GradedPoly p(f, 4);
    Monomial t1t2 = Monomial::unit(2, 0).with(1, 1);
    p.add_term(t1t2, scalar(2));
    CHECK(p.str() == "2*t1*t2");
    GradedPoly q(f, 4);
    q.add_term(Monomial::unit(2, 0).with(0, 1), scalar(1));
    q.add_term(Monomial::unit(2, 1), scalar(-3, 2));
    CHECK(q.str() == "-3/2*t2 + t1^2");
    CHECK(GradedPoly(f, 4).str() == "0");
}

TEST_CASE("odd coefficients move with signs through products") {
    // (u*v)*(u) must vanish; (u)*(v) = -(v)*(u) for odd u, v of odd degrees
    auto f = frame_mixed();
    auto u = GradedPoly::variable(f, 4, 0);
    auto v = GradedPoly::variable(f, 4, 1);
    CHECK((u * v) == -(v * u));
    CHECK(((u * v) * u).is_zero());
}
