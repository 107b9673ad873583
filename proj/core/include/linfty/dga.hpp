#pragma once

#include "linfty/a_infinity.hpp"
#include "linfty/dgla.hpp"

namespace linfty {

/// Differential graded associative algebra.
struct Dga {
    GradedSpace space;
    HomogeneousMap d;   // degree +1
    TensorMap product;  // arity 2, degree 0

    Dga() = default;
    Dga(GradedSpace space_, HomogeneousMap d_, TensorMap product_);
};

struct DgaReport {
    DefectList d_squared;
    DefectList leibniz;
    DefectList associativity;
    bool valid() const { return d_squared.empty() && leibniz.empty() && associativity.empty(); }
};

DgaReport check_dga(const Dga& a);

/// m_1 = d, m_2 = product, nothing above.
AInfinityStructure as_a_infinity(const Dga& a, int arity_cap);

/// Commutator structure of an associative algebra: the bracket
/// [x, y] = xy - (-1)^{xy} yx together with the same differential.
Dgla commutator_dgla(const Dga& a);

}  // namespace linfty
