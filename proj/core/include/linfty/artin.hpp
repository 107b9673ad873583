#pragma once

#include "linfty/dgla.hpp"
#include "linfty/l_infinity.hpp"

namespace linfty {

/// Maximal ideal of a graded Artin local algebra: a basis with degrees, an
/// associative graded-commutative multiplication table, and the nilpotency
/// index nu with m^nu = 0.
struct ArtinAlgebra {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<std::vector<Vec>> table;  // table[i][j]: coordinates of b_i b_j
    int nil_index = 2;

    int dim() const { return static_cast<int>(labels.size()); }
    Vec basis_vec(int i) const;
    Vec mul(const Vec& a, const Vec& b) const;

    /// Violations of associativity, graded commutativity, degree
    /// homogeneity, or the stated nilpotency index.
    std::vector<std::string> violations() const;

    static ArtinAlgebra dual_numbers();              // k[e]/(e^2), even
    static ArtinAlgebra truncated_polynomial(int k); // k[t]/(t^k), even, k >= 2
    static ArtinAlgebra odd_line(int degree = 1);    // k[theta]/(theta^2), odd
};

GradedSpace tensor_space(const GradedSpace& g, const ArtinAlgebra& b);

/// Operations extended coefficient-multilinearly with Koszul signs:
/// mu_k(v_1 b_1, .., v_k b_k) = (interleave sign) mu_k(v_1..v_k) b_1..b_k.
/// Operations of arity >= nil_index vanish identically.
LInfinityStructure tensor_with_artin(const LInfinityStructure& l, const ArtinAlgebra& b);

Dgla tensor_dgla(const Dgla& a, const ArtinAlgebra& b);
HomogeneousMap tensor_endomorphism(const HomogeneousMap& f, const GradedSpace& g, const ArtinAlgebra& b);

}  // namespace linfty
