#pragma once

#include "linfty/graded_poly.hpp"
#include "linfty/l_infinity.hpp"

namespace linfty {

/// Polynomial vector field on the shifted formal supermanifold carried by
/// g[1]: one coordinate per basis vector of g, of degree 1 - deg(e_a), and
/// one polynomial component per coordinate. Components may involve extra
/// frame variables (formal parameters) beyond the coordinates; derivations
/// only ever differentiate along coordinates.
class PolyVectorField {
  public:
    PolyVectorField() = default;
    PolyVectorField(GradedSpace space, VarFramePtr frame, std::vector<int> caps, int degree);

    const GradedSpace& space() const { return space_; }
    const VarFramePtr& frame() const { return frame_; }
    const std::vector<int>& caps() const { return caps_; }
    int degree() const { return degree_; }
    int coords() const { return space_.dim(); }

    const GradedPoly& component(int a) const { return components_[a]; }
    /// Components must be homogeneous of degree deg(x_a) + field degree.
    void set_component(int a, GradedPoly p);

    bool is_zero() const;

    /// The field as a derivation: Q(f) = sum_a Q^a d/dx_a f.
    GradedPoly apply(const GradedPoly& f) const;

    /// Component-wise substitution (coordinate translation, or evaluation at
    /// a series point).
    PolyVectorField substituted(const std::vector<GradedPoly>& images) const;

    /// Value at the origin: the coordinate-free part of each component.
    std::vector<GradedPoly> value_at_origin() const;

  private:
    GradedSpace space_;
    VarFramePtr frame_;
    std::vector<int> caps_;
    int degree_ = 1;
    std::vector<GradedPoly> components_;
};

/// Coordinate frame of M_{g[1]}: x_a dual to e_a[1], degree 1 - deg(e_a).
/// Extra parameter variables land behind the coordinates in group 1; the
/// parameter group exists (with its own truncation budget) whenever
/// with_param_group is set, even without parameters.
VarFramePtr coordinate_frame(const GradedSpace& space, const std::vector<Variable>& params = {},
                             bool with_param_group = false);

/// Sign of the identification mu_hat(v_1[1],..,v_n[1]) =
/// (-1)^{sum (n-i) deg(v_i) + n} mu_n(v_1,..,v_n)[n] on a basis tuple.
int hat_sign(const GradedSpace& space, const Tuple& tuple);

/// The codifferential encoding of the structure, truncated at polynomial
/// degree cap: the Taylor coefficient of Q^a on the canonical monomial of a
/// basis tuple carries the hat sign and the 1/multiplicities! normalization.
PolyVectorField to_vector_field(const LInfinityStructure& l, int cap);
PolyVectorField to_vector_field(const LInfinityStructure& l, VarFramePtr frame, std::vector<int> caps);

/// Inverse reader: exact round trip with to_vector_field through the cap.
/// The field must be pure (no parameter variables).
LInfinityStructure from_vector_field(const PolyVectorField& q);

/// Half the self-bracket: components Q(Q^a), a degree +2 field which is zero
/// through the truncation iff the encoded structure satisfies every higher
/// Jacobi identity through the matching arity.
PolyVectorField square_vector_field(const PolyVectorField& q);

}  // namespace linfty
