#pragma once

#include "linfty/l_infinity.hpp"

namespace linfty {

/// Differential graded Lie algebra: degree +1 differential and a
/// graded-antisymmetric bracket of degree 0.
struct Dgla {
    GradedSpace space;
    HomogeneousMap d;   // degree +1
    MultiMap bracket;   // arity 2, degree 0

    Dgla() = default;
    Dgla(GradedSpace space_, HomogeneousMap d_, MultiMap bracket_);
};

struct DglaReport {
    DefectList d_squared;  // d^2 on basis vectors
    DefectList leibniz;    // d[v1,v2] - [dv1,v2] - (-1)^{v1}[v1,dv2]
    DefectList jacobi;     // graded Jacobi over basis triples
    bool valid() const { return d_squared.empty() && leibniz.empty() && jacobi.empty(); }
};

/// Evaluates the three defining identities exactly on every canonical basis
/// tuple. A report, not an exception: invalid inputs come back listed.
DglaReport check_dgla(const Dgla& a);

/// The structure with mu_1 = d, mu_2 = bracket and nothing above.
LInfinityStructure as_l_infinity(const Dgla& a, int arity_cap);

/// Graded commutator bracket on an endomorphism space is built in dga.hpp;
/// this helper applies d to a coefficient vector.
Vec dgla_d(const Dgla& a, const Vec& v);

}  // namespace linfty
