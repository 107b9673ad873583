#include "linfty/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "linfty/graded_space.hpp"

namespace linfty {

int perm_parity(const Perm& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions & 1;
}

bool is_permutation(const Perm& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

int koszul_sign(const Perm& perm, const std::vector<int>& degrees) {
    if (perm.size() != degrees.size()) throw std::invalid_argument("koszul_sign: length mismatch");
    // e(sigma) collects (-1)^{deg a * deg b} for every inversion, i.e. every
    // pair of generators that trade places in the reordering.
    int s = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) s += parity(degrees[perm[i]]) * parity(degrees[perm[j]]);
    return (s & 1) ? -1 : 1;
}

int wedge_sign(const Perm& perm, const std::vector<int>& degrees) {
    return (perm_parity(perm) ? -1 : 1) * koszul_sign(perm, degrees);
}

std::vector<Shuffle> shuffles(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("shuffles: k out of range");
    std::vector<Shuffle> out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Shuffle s;
        s.split = k;
        s.perm.reserve(n);
        std::vector<bool> used(n, false);
        for (int v : pick) {
            s.perm.push_back(v);
            used[v] = true;
        }
        for (int v = 0; v < n; ++v)
            if (!used[v]) s.perm.push_back(v);
        out.push_back(std::move(s));

        // next k-subset in lexicographic order
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<Perm> all_permutations(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm compose(const Perm& outer, const Perm& inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("compose: length mismatch");
    Perm r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

}  // namespace linfty
