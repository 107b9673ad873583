#pragma once

#include "linfty/graded_poly.hpp"
#include "linfty/hodge.hpp"
#include "linfty/multi_map.hpp"

namespace linfty {

/// Formal coordinates for deformation parameters. A versal frame carries one
/// parameter per harmonic representative, of degree 1 - deg(gamma), so that
/// the tautological element sum gamma_a t^a has total degree 1. Mode '0'
/// restricts to degree-1 cohomology; mode 'Z' takes all of it.
class ParameterFrame {
  public:
    ParameterFrame() = default;

    static ParameterFrame versal(const HodgeData& hodge, char mode);
    static ParameterFrame generic(std::vector<Variable> vars);

    const VarFramePtr& vars() const { return vars_; }
    int size() const { return vars_ ? vars_->size() : 0; }
    char mode() const { return mode_; }

    /// Harmonic attached to each parameter; empty for generic frames.
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  private:
    VarFramePtr vars_;
    std::vector<Harmonic> harmonics_;
    char mode_ = 'g';
};

/// Element of g tensored with the truncated parameter ring: a vector
/// coefficient per parameter monomial, homogeneous of a fixed total degree
/// (g-degree of each coefficient plus the monomial degree is constant).
class FormalSeries {
  public:
    FormalSeries() = default;
    FormalSeries(GradedSpace space, VarFramePtr vars, std::vector<int> caps, int degree);

    static FormalSeries constant(const GradedSpace& space, VarFramePtr vars, std::vector<int> caps,
                                 const Vec& v);

    const GradedSpace& space() const { return space_; }
    const VarFramePtr& vars() const { return vars_; }
    const std::vector<int>& caps() const { return caps_; }
    int degree() const { return degree_; }
    const std::map<Monomial, Vec>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Vec& v);
    Vec coeff(const Monomial& m) const;

    bool is_zero() const { return terms_.empty(); }
    int min_order() const;  // smallest monomial total degree, 0 for empty

    FormalSeries operator-() const;
    FormalSeries& operator+=(const FormalSeries& other);
    FormalSeries& operator-=(const FormalSeries& other);
    FormalSeries& operator*=(const Scalar& c);

    /// Apply a homogeneous linear map to every coefficient.
    FormalSeries mapped(const HomogeneousMap& f) const;

    /// Band of terms with the given total monomial degree.
    FormalSeries band(int order) const;

    /// Per-coordinate coefficient polynomial.
    GradedPoly coordinate_poly(int index) const;

    /// Same series over a larger frame whose leading variables coincide.
    FormalSeries reframed(VarFramePtr vars, std::vector<int> caps, int var_offset) const;

    std::string str() const;
    bool operator==(const FormalSeries& other) const;

  private:
    GradedSpace space_;
    VarFramePtr vars_;
    std::vector<int> caps_;
    int degree_ = 0;
    std::map<Monomial, Vec> terms_;
};

FormalSeries operator+(FormalSeries a, const FormalSeries& b);
FormalSeries operator-(FormalSeries a, const FormalSeries& b);
FormalSeries operator*(const Scalar& c, FormalSeries s);

/// Multilinear evaluation over series arguments with the Koszul extension:
/// scalars move out to the right past the vector slots they trail, so
/// mu(v1 r1, v2 r2) = (-1)^{deg r1 deg v2} mu(v1, v2) r1 r2.
FormalSeries eval_multi_on_series(const MultiMap& m, const std::vector<FormalSeries>& args);

}  // namespace linfty
