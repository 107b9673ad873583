#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linfty/dga.hpp"
#include "linfty/dgla.hpp"

namespace linfty {

/// Shape of one endomorphism fixture: the grading of W, whether to restrict
/// to the lower-triangular subalgebra (closed under composition, and under
/// [delta, .] for triangular delta), and whether delta is nonzero.
struct EndProfile {
    std::vector<int> w_degrees;
    bool triangular = false;
    bool with_delta = true;
    std::string name;
};

/// (Triangular) endomorphism algebra of a graded W with differential
/// [delta, .], delta^2 = 0 by construction. The associative product is
/// composition, so the d-squared, Leibniz and Jacobi identities of the
/// derived structures hold automatically; this gives an unlimited family of
/// honest fixtures with varied cohomology.
Dga end_dga(const EndProfile& profile, std::uint64_t seed);

/// Deterministic family of endomorphism fixtures covering the built-in
/// profile list; every member has a nonzero differential.
std::vector<EndProfile> end_profiles();
std::vector<Dga> dga_fixture_family(std::uint64_t seed, int count);
std::vector<Dgla> dgla_fixture_family(std::uint64_t seed, int count);

/// Degree-3 Heisenberg-type example: g^1 = <x, y>, g^2 = <z>, d = 0,
/// [x, y] = z. The smooth two-parameter moduli germ with the singular
/// classical locus t1 t2 = 0 inside it.
Dgla heis_dgla();

/// Everything-zero structure on the given space.
Dgla abelian_dgla(const GradedSpace& space);

/// Two-term complex with d an isomorphism (acyclic) and zero bracket.
Dgla acyclic_two_term_dgla();

/// Three-term complex 0 -> g^0 -> g^1 -> g^2 -> 0 with one-dimensional
/// cohomology in the middle and zero bracket.
Dgla three_term_complex_dgla();

/// Random degree map with small integer entries on every legal block.
HomogeneousMap random_degree_map(const GradedSpace& space, int degree, std::uint64_t seed);

/// Random graded-antisymmetric map with small integer entries on every
/// canonical tuple, useful for regression tests and mutations.
MultiMap random_multi_map(const GradedSpace& space, int arity, int degree, std::uint64_t seed);

}  // namespace linfty
