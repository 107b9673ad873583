#pragma once

#include "linfty/a_infinity.hpp"
#include "linfty/dga.hpp"
#include "linfty/dgla.hpp"
#include "linfty/morphism.hpp"

namespace linfty {

/// The induced structure of a differential graded Lie algebra and an
/// arbitrary degree -1 map eta (not necessarily coming from Hodge data):
///   mu_1 = d
///   mu_2 = (d eta + eta d)[.,.]
///   mu_n = (-1)^n sum over (n-1,1)-shuffles of
///          (-1)^sigma e(sigma) eta[mu_{n-1}(..), v_sigma(n)]
/// Operations above 2 are generated lazily and memoized. The input must be
/// a valid algebra; eta must have degree -1.
LInfinityStructure induce_l_infinity(const Dgla& a, const HomogeneousMap& eta, int max_arity);

/// Direct evaluator for the recursion the proof attaches to the induced
/// structure: the arity-n defect is a shuffle sum of eta-brackets of the
/// arity n-1 defects, with the n=2 defect evaluated directly. Only valid
/// for structures produced by induce_l_infinity over the same (a, eta);
/// the authoritative check remains the direct double-sum evaluation.
Vec fast_jacobi_defect(const Dgla& a, const HomogeneousMap& eta, const LInfinityStructure& l, int n,
                       const Tuple& tuple);

/// Complementary recursion built on rho_1 = -Id, rho_n = eta lambda_n:
///   lambda_n = sum_{k+l=n} sum over (k,n-k)-shuffles of
///              (-1)^{sigma + k+1+(l-1)(deg block1)} e(sigma)
///              [rho_k(block1), rho_l(block2)]
///   m_1 = d,  m_n = (1 - d eta - eta d) lambda_n
/// Validity of the output is reported by the checkers, never assumed.
LInfinityStructure complementary_structure(const Dgla& a, const HomogeneousMap& eta, int max_arity);

/// The lambda_n family of the complementary recursion, n >= 2.
MultiMap complementary_lambda(const Dgla& a, const HomogeneousMap& eta, int n);

/// Associative analogue of the induced structure:
///   m_2 = (d eta + eta d)(a_1 a_2)
///   m_n = eta((-1)^n m_{n-1}(a_1..a_{n-1}) a_n + (-1)^{(n-1) deg a_1} a_1 m_{n-1}(a_2..a_n))
AInfinityStructure induce_a_infinity(const Dga& a, const HomogeneousMap& eta, int max_arity);

/// The Kuranishi map as a morphism into the Abelian structure (g, d, 0):
/// K_1 = id, K_2 = eta [.,.], K_n = 0 above.
LMorphismToAbelian kuranishi_morphism(const Dgla& a, const HomogeneousMap& eta);

}  // namespace linfty
