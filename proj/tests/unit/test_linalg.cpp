#include <random>

#include "doctest.h"
#include "linfty/linalg.hpp"

using namespace linfty;

namespace {

QMat random_mat(int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    QMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("rref picks leftmost pivots and fully reduces") {
    QMat m(3, 4);
    // rows: (0 2 1 0), (0 4 2 0), (1 1 1 1)
    m.at(0, 1) = 2;
    m.at(0, 2) = 1;
    m.at(1, 1) = 4;
    m.at(1, 2) = 2;
    m.at(2, 0) = 1;
    m.at(2, 1) = 1;
    m.at(2, 2) = 1;
    m.at(2, 3) = 1;
    auto pivots = rref(m);
    CHECK(pivots == std::vector<int>{0, 1});
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(1, 2) == scalar(1, 2));
    CHECK(m.at(0, 1) == 0);
    for (int c = 0; c < 4; ++c) CHECK(m.at(2, c) == 0);
}

TEST_CASE("kernel basis spans the null space exactly") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        QMat m = random_mat(4, 6, rng);
        auto ker = kernel_basis(m);
        CHECK(static_cast<int>(ker.size()) == 6 - rank(m));
        for (const Vec& v : ker) CHECK(vec_is_zero(m.apply(v)));
        // unit entries at free columns make the basis independent by construction
    }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        QMat m = random_mat(4, 4, rng);
        Vec x0(4);
        std::uniform_int_distribution<int> entry(-5, 5);
        for (auto& q : x0) q = entry(rng);
        Vec b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
    QMat z(2, 2);
    Vec b{scalar(1), scalar(0)};
    CHECK_FALSE(solve(z, b).has_value());
}

TEST_CASE("coordinates_in_span") {
    std::vector<Vec> span{{scalar(1), scalar(0), scalar(1)}, {scalar(0), scalar(1), scalar(1)}};
    auto c = coordinates_in_span(span, {scalar(2), scalar(3), scalar(5)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 3);
    CHECK_FALSE(coordinates_in_span(span, {scalar(0), scalar(0), scalar(1)}).has_value());
    CHECK(coordinates_in_span({}, {scalar(0)}).has_value());
    CHECK_FALSE(coordinates_in_span({}, {scalar(1)}).has_value());
}
