#include "linfty/fixtures.hpp"

#include <random>
#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

namespace {

struct EndBasis {
    std::vector<std::pair<int, int>> pairs;  // (row, col): e_col -> e_row
    int index_of(int r, int c) const {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k].first == r && pairs[k].second == c) return static_cast<int>(k);
        return -1;
    }
};

}  // namespace

Dga end_dga(const EndProfile& profile, std::uint64_t seed) {
    const auto& w = profile.w_degrees;
    const int m = static_cast<int>(w.size());
    if (m < 1) throw std::invalid_argument("end_dga: empty W");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 3);

    EndBasis eb;
    std::vector<std::pair<std::string, int>> basis;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (profile.triangular && i < j) continue;
            eb.pairs.emplace_back(i, j);
            basis.emplace_back("E" + std::to_string(i + 1) + std::to_string(j + 1), w[i] - w[j]);
        }
    GradedSpace space(basis);
    const int dim = space.dim();

    TensorMap product(space, space, 2, 0);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            auto [i, j] = eb.pairs[a];
            auto [k, l] = eb.pairs[b];
            if (j != k) continue;
            int target = eb.index_of(i, l);
            if (target < 0) throw std::logic_error("end_dga: basis not closed under composition");
            product.add_entry({a, b}, target, Scalar(1));
        }

    // delta = c * matrix unit of degree +1; a single unit squares to zero
    // since its row and column indices differ
    HomogeneousMap d(space, space, 1);
    if (profile.with_delta) {
        std::vector<int> candidates;
        for (int k = 0; k < dim; ++k) {
            auto [i, j] = eb.pairs[k];
            if (i != j && w[i] - w[j] == 1) candidates.push_back(k);
        }
        if (candidates.empty()) throw std::invalid_argument("end_dga: profile admits no degree +1 delta");
        int delta_idx = candidates[rng() % candidates.size()];
        Scalar c(coeff(rng));
        // d(f) = delta f - (-1)^{deg f} f delta
        for (int a = 0; a < dim; ++a) {
            Vec left = product.eval_basis({delta_idx, a});
            Vec right = product.eval_basis({a, delta_idx});
            Vec image = parity(space.degree(a)) ? vec_add(left, right) : vec_sub(left, right);
            for (int t = 0; t < dim; ++t)
                if (!is_zero(image[t])) d.set(t, a, c * image[t]);
        }
    }

    return Dga(space, d, product);
}

std::vector<EndProfile> end_profiles() {
    return {
        {{0, 1}, false, true, "end2_01"},
        {{1, 2}, false, true, "end2_12"},
        {{-1, 0}, false, true, "end2_m10"},
        {{0, 1, 2}, true, true, "tri3_012"},
        {{0, 0, 1}, true, true, "tri3_001"},
        {{0, 1, 1}, true, true, "tri3_011"},
        {{-1, 0, 0}, true, true, "tri3_m100"},
        {{1, 2, 2}, true, true, "tri3_122"},
    };
}

std::vector<Dga> dga_fixture_family(std::uint64_t seed, int count) {
    std::vector<Dga> out;
    auto profiles = end_profiles();
    std::uint64_t s = seed;
    while (static_cast<int>(out.size()) < count) {
        for (const auto& p : profiles) {
            if (static_cast<int>(out.size()) >= count) break;
            out.push_back(end_dga(p, s++));
        }
    }
    return out;
}

std::vector<Dgla> dgla_fixture_family(std::uint64_t seed, int count) {
    std::vector<Dgla> out;
    for (const Dga& a : dga_fixture_family(seed, count)) out.push_back(commutator_dgla(a));
    return out;
}

Dgla heis_dgla() {
    GradedSpace space({{"x", 1}, {"y", 1}, {"z", 2}});
    HomogeneousMap d(space, space, 1);
    MultiMap bracket(space, space, 2, 0);
    bracket.add_entry({0, 1}, 2, Scalar(1));  // [x, y] = z
    return Dgla(space, d, bracket);
}

Dgla abelian_dgla(const GradedSpace& space) {
    return Dgla(space, HomogeneousMap(space, space, 1), MultiMap(space, space, 2, 0));
}

Dgla acyclic_two_term_dgla() {
    GradedSpace space({{"u", 0}, {"v", 1}});
    HomogeneousMap d(space, space, 1);
    d.set(1, 0, Scalar(2));  // d u = 2 v
    return Dgla(space, d, MultiMap(space, space, 2, 0));
}

Dgla three_term_complex_dgla() {
    // 0 -> <a0> -> <a1, b1, h1> -> <c2> -> 0 with d a0 = a1, d b1 = c2,
    // d h1 = 0: cohomology is one-dimensional, concentrated in degree 1
    GradedSpace space({{"a0", 0}, {"a1", 1}, {"b1", 1}, {"h1", 1}, {"c2", 2}});
    HomogeneousMap d(space, space, 1);
    d.set(1, 0, Scalar(1));
    d.set(4, 2, Scalar(1));
    return Dgla(space, d, MultiMap(space, space, 2, 0));
}

HomogeneousMap random_degree_map(const GradedSpace& space, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    HomogeneousMap f(space, space, degree);
    for (int c = 0; c < space.dim(); ++c)
        for (int r = 0; r < space.dim(); ++r)
            if (space.degree(r) == space.degree(c) + degree) f.set(r, c, Scalar(entry(rng)));
    return f;
}

MultiMap random_multi_map(const GradedSpace& space, int arity, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    MultiMap m(space, space, arity, degree);
    for (const Tuple& t : canonical_tuples(space, arity)) {
        int want = degree;
        for (int i : t) want += space.degree(i);
        Vec v = vec_zero(space.dim());
        bool any = false;
        for (int j = 0; j < space.dim(); ++j)
            if (space.degree(j) == want) {
                v[j] = entry(rng);
                any = any || !is_zero(v[j]);
            }
        if (any) m.set(t, std::move(v));
    }
    return m;
}

}  // namespace linfty
