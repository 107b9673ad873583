#include <random>

#include "doctest.h"
#include "linfty/homogeneous_map.hpp"
#include "linfty/multi_map.hpp"

using namespace linfty;

namespace {

GradedSpace mixed_space() {
    // two odd generators, two even ones
    return GradedSpace({{"a", 1}, {"b", 1}, {"p", 0}, {"q", 2}});
}

Vec random_vec(const GradedSpace& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    Vec v(s.dim());
    for (auto& q : v) q = entry(rng);
    return v;
}

}  // namespace

TEST_CASE("normalize_tuple sorts with wedge signs") {
    GradedSpace s = mixed_space();
    auto n1 = normalize_tuple(s, {1, 0});  // two odd generators: swap costs +1
    CHECK(n1.tuple == Tuple{0, 1});
    CHECK(n1.sign == 1);
    auto n2 = normalize_tuple(s, {3, 2});  // two even generators: swap costs -1
    CHECK(n2.tuple == Tuple{2, 3});
    CHECK(n2.sign == -1);
    auto n3 = normalize_tuple(s, {2, 2});  // repeated even generator dies
    CHECK(n3.zero);
    auto n4 = normalize_tuple(s, {0, 0});  // repeated odd generator survives
    CHECK_FALSE(n4.zero);
    CHECK(n4.tuple == Tuple{0, 0});
}

TEST_CASE("canonical tuples enumerate admissible multisets") {
    GradedSpace s = mixed_space();
    auto pairs = canonical_tuples(s, 2);
    // multisets of {a,b,p,q} minus {pp, qq}
    CHECK(pairs.size() == 8);
    for (const auto& t : pairs) {
        auto norm = normalize_tuple(s, t);
        CHECK_FALSE(norm.zero);
        CHECK(norm.tuple == t);
        CHECK(norm.sign == 1);
    }
}

TEST_CASE("multimap storage round-trips through permuted reads") {
    GradedSpace s = mixed_space();
    std::mt19937_64 rng(5);
    MultiMap m(s, s, 3, -1);
    for (const Tuple& t : canonical_tuples(s, 3)) {
        int want = -1;
        for (int i : t) want += s.degree(i);
        Vec v(s.dim());
        bool any = false;
        for (int j = 0; j < s.dim(); ++j)
            if (s.degree(j) == want) {
                v[j] = std::uniform_int_distribution<int>(-2, 2)(rng);
                any = any || !is_zero(v[j]);
            }
        if (any) m.set(t, v);
    }
    // reading any permutation of a canonical tuple reproduces the stored
    // value up to the wedge sign of the reordering
    for (const Tuple& t : canonical_tuples(s, 3)) {
        std::vector<int> degrees(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) degrees[i] = s.degree(t[i]);
        for (const Perm& p : all_permutations(3)) {
            Tuple permuted(3);
            for (int i = 0; i < 3; ++i) permuted[i] = t[p[i]];
            Vec direct = m.eval_basis(permuted);
            Vec expect = vec_scale(Scalar(wedge_sign(p, degrees)), m.eval_basis(t));
            CHECK(direct == expect);
        }
    }
}

TEST_CASE("evaluation is exactly multilinear") {
    GradedSpace s = mixed_space();
    std::mt19937_64 rng(23);
    MultiMap m(s, s, 2, 0);
    m.add_entry({0, 1}, 3, scalar(2));
    m.add_entry({0, 2}, 0, scalar(1, 3));
    m.add_entry({2, 3}, 3, scalar(-1));
    m.add_entry({0, 0}, 3, scalar(5, 2));

    for (int trial = 0; trial < 20; ++trial) {
        Vec x = random_vec(s, rng), y = random_vec(s, rng), z = random_vec(s, rng);
        Scalar c = scalar(std::uniform_int_distribution<int>(-4, 4)(rng), 3);
        Vec lhs = m.eval({vec_add(x, vec_scale(c, y)), z});
        Vec rhs = vec_add(m.eval({x, z}), vec_scale(c, m.eval({y, z})));
        CHECK(lhs == rhs);
        Vec lhs2 = m.eval({z, vec_add(x, vec_scale(c, y))});
        Vec rhs2 = vec_add(m.eval({z, x}), vec_scale(c, m.eval({z, y})));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("repeated even argument evaluates to zero") {
    GradedSpace s = mixed_space();
    MultiMap m(s, s, 2, 0);
    m.add_entry({0, 1}, 3, scalar(1));
    CHECK(vec_is_zero(m.eval_basis({2, 2})));
    Vec p = s.basis_vec(2);
    CHECK(vec_is_zero(m.eval({p, p})));
}

TEST_CASE("canonical tuple evaluates to the stored value verbatim") {
    GradedSpace s = mixed_space();
    MultiMap m(s, s, 2, 0);
    Vec v(s.dim());
    v[3] = scalar(7);
    m.set({0, 1}, v);
    CHECK(m.eval_basis({0, 1}) == v);
    CHECK(m.eval_front(s.basis_vec(0), {1}) == v);
}

TEST_CASE("multimap rejects bad writes") {
    GradedSpace s = mixed_space();
    MultiMap m(s, s, 2, 0);
    Vec v(s.dim());
    v[3] = 1;
    CHECK_THROWS_AS(m.set({1, 0}, v), std::invalid_argument);  // non-canonical
    CHECK_THROWS_AS(m.set({2, 2}, v), std::invalid_argument);  // annihilated slot
    Vec bad(s.dim());
    bad[2] = 1;  // wrong degree for tuple (0,1)
    CHECK_THROWS_AS(m.set({0, 1}, bad), std::invalid_argument);
    CHECK_THROWS_AS(m.eval({s.basis_vec(0)}), std::invalid_argument);  // arity
}

TEST_CASE("homogeneous map composition adds degrees and respects blocks") {
    GradedSpace s({{"u", 0}, {"v", 1}});
    HomogeneousMap d(s, s, 1);
    d.set(1, 0, scalar(3));  // d u = 3 v
    HomogeneousMap eta(s, s, -1);
    eta.set(0, 1, scalar(1, 3));  // eta v = u/3

    auto dd = compose(d, d);
    CHECK(dd.degree() == 2);
    CHECK(dd.is_zero());

    auto ed = compose(eta, d);
    CHECK(ed.degree() == 0);
    CHECK(ed.at(0, 0) == 1);

    auto id = HomogeneousMap::identity(s);
    CHECK(compose(d, id) == d);
    CHECK(compose(id, d) == d);

    CHECK_THROWS_AS(d.set(0, 0, scalar(1)), std::invalid_argument);  // off-block
    GradedSpace other({{"w", 0}});
    HomogeneousMap f(other, other, 0);
    CHECK_THROWS_AS(compose(d, f), std::invalid_argument);
}

TEST_CASE("shifted space is a degree-offset view") {
    GradedSpace s({{"u", 0}, {"v", 1}});
    GradedSpace s1 = s.shifted(1);
    CHECK(s1.degree(0) == -1);
    CHECK(s1.degree(1) == 0);
    CHECK(s1.label(0) == "u");
    CHECK(s1.shifted(-1) == s);
    CHECK(s1 != s);
}
