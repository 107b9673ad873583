#pragma once

#include <map>

#include "linfty/l_infinity.hpp"

namespace linfty {

/// Morphism from an arbitrary structure into a differential Abelian one,
/// given by components F_n of degree 1-n. Absent components are zero.
class LMorphismToAbelian {
  public:
    LMorphismToAbelian() = default;
    LMorphismToAbelian(GradedSpace source, GradedSpace target, HomogeneousMap target_d);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    const HomogeneousMap& target_d() const { return target_d_; }

    void set_component(MultiMap f);
    MultiMap component(int arity) const;  // zero map when absent
    const std::map<int, MultiMap>& components() const { return components_; }

  private:
    GradedSpace source_, target_;
    HomogeneousMap target_d_;
    std::map<int, MultiMap> components_;
};

/// Per-arity defects of the morphism equations into the Abelian target:
/// d' F_n(v_1..v_n) minus the shuffle double sum with sign
/// (-1)^{parity(sigma) + k(l-1)} e(sigma) F_l(mu_k(..), ..).
StructureReport check_morphism_to_abelian(const LMorphismToAbelian& f, const LInfinityStructure& source,
                                          int max_arity);

}  // namespace linfty
