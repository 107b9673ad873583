#pragma once

#include "linfty/series.hpp"
#include "linfty/vector_field.hpp"

namespace linfty {

/// Structure obtained by translating the homological field by -Gamma[1] and
/// reading the Taylor coefficients back: operations become series-valued.
/// When Gamma satisfies the Maurer-Cartan equation through the truncation,
/// the constant term vanishes and the series operations satisfy the higher
/// Jacobi identities through the truncation.
class DeformedStructure {
  public:
    GradedSpace space;
    VarFramePtr combined;          // coordinates (group 0) + parameters (group 1)
    std::vector<int> caps;         // {arity cap, series order}
    PolyVectorField field;         // the translated field
    VarFramePtr params;            // parameter frame of Gamma
    std::vector<int> param_caps;   // {series order}
    FormalSeries constant_term;    // field value at the origin, degree 2

    /// op(n) values on canonical tuples; absent tuple = zero series.
    const std::map<Tuple, FormalSeries>& op(int arity) const;
    FormalSeries op_value(int arity, const Tuple& canonical) const;
    int arity_cap() const { return caps.at(0); }
    int order() const { return caps.at(1); }

    std::map<int, std::map<Tuple, FormalSeries>> ops;
};

/// Coordinate translation of the field by -Gamma[1], read back through the
/// inverse Taylor transport. Gamma must be a degree-1 series with no
/// constant term (nilpotent coefficients).
DeformedStructure deform_structure(const LInfinityStructure& l, const FormalSeries& gamma, int arity_cap,
                                   int order);

/// The arity-1 line of the deformed structure, directly from the series
/// expansion: d_Gamma v = sum_k sign(k)/(k-1)! mu_k(Gamma,..,Gamma, v) with
/// the Maurer-Cartan sign pattern.
FormalSeries deformed_differential(const LInfinityStructure& l, const FormalSeries& gamma, const Vec& v,
                                   int order);

/// Higher Jacobi defects of the series-valued operations, evaluated exactly
/// over the parameter ring. The constant term is reported separately.
StructureReport check_deformed(const DeformedStructure& d, int max_arity);

}  // namespace linfty
