#pragma once

#include <functional>
#include <map>
#include <mutex>

#include "linfty/l_infinity.hpp"

namespace linfty {

/// Arity-indexed family of operations m_n of degree 2-n with no symmetry:
/// the operations live on tensor powers and values are stored on all basis
/// tuples. Same lazy-generator contract as LInfinityStructure.
class AInfinityStructure {
  public:
    using Generator = std::function<TensorMap(const AInfinityStructure&, int)>;

    AInfinityStructure() = default;
    AInfinityStructure(GradedSpace space, int arity_cap);
    AInfinityStructure(const AInfinityStructure& other);
    AInfinityStructure& operator=(const AInfinityStructure& other);

    const GradedSpace& space() const { return space_; }
    int arity_cap() const { return cap_; }

    void set_op(TensorMap op);
    void set_generator(Generator gen) { gen_ = std::move(gen); }

    const TensorMap& op(int arity) const;
    std::vector<int> stored_arities() const;

  private:
    GradedSpace space_;
    int cap_ = 0;
    Generator gen_;
    mutable std::mutex mu_;
    mutable std::map<int, TensorMap> ops_;
};

/// Left side of the arity-n higher associativity condition on a basis tuple:
/// sum over k+l = n+1 and insertion positions j = 0..k-1 with the sign
/// (-1)^{l(a_1+..+a_j) + j(l-1) + (k-1)l}.
Vec associativity_defect(const AInfinityStructure& a, int n, const Tuple& tuple);

/// Exhaustive defect listing over all basis tuples for arities 1..max_arity.
StructureReport check_a_infinity(const AInfinityStructure& a, int max_arity);

/// Symmetrization functor: Phi(m_n)(v_1,..,v_n) =
/// sum over all permutations of (-1)^sigma e(sigma) m_n(v_sigma(1),..).
/// A differential graded algebra turns into its commutator structure.
LInfinityStructure symmetrize(const AInfinityStructure& a, int max_arity);

}  // namespace linfty
