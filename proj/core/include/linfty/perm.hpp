#pragma once

#include <vector>

#include "linfty/rational.hpp"

namespace linfty {

/// Permutation of {0, .., n-1}, stored as the image array: perm[i] = sigma(i).
using Perm = std::vector<int>;

/// Parity of the permutation: 0 even, 1 odd.
int perm_parity(const Perm& perm);

bool is_permutation(const Perm& perm);

/// Koszul sign e(sigma) of the reordering
///   v_{sigma(0)} ^ ... ^ v_{sigma(n-1)} = (-1)^parity(sigma) e(sigma) v_0 ^ ... ^ v_{n-1}
/// in the free graded-antisymmetric algebra on homogeneous generators of the
/// given degrees. Only degree parities enter. Throws on length mismatch.
int koszul_sign(const Perm& perm, const std::vector<int>& degrees);

/// Full sign (-1)^parity(sigma) * e(sigma) picked up by a wedge reordering.
int wedge_sign(const Perm& perm, const std::vector<int>& degrees);

/// A (k, n-k)-shuffle: increasing on the first k and the last n-k positions.
struct Shuffle {
    Perm perm;
    int split = 0;  // k
};

/// All (k, n-k)-shuffles, enumerated lexicographically by the first block.
/// Throws unless 1 <= k <= n.
std::vector<Shuffle> shuffles(int k, int n);

/// All permutations of {0, .., n-1} in lexicographic order.
std::vector<Perm> all_permutations(int n);

Perm compose(const Perm& outer, const Perm& inner);  // (outer*inner)(i) = outer[inner[i]]

}  // namespace linfty
