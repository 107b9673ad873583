#pragma once

#include "linfty/graded_space.hpp"
#include "linfty/linalg.hpp"

namespace linfty {

/// Degree-homogeneous linear map between graded spaces: g^i -> target^{i+degree}.
/// Entries outside the matching blocks are structurally zero.
class HomogeneousMap {
  public:
    HomogeneousMap() = default;
    HomogeneousMap(GradedSpace source, GradedSpace target, int degree);

    static HomogeneousMap identity(const GradedSpace& space);
    static HomogeneousMap zero(const GradedSpace& source, const GradedSpace& target, int degree);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int degree() const { return degree_; }
    const QMat& matrix() const { return m_; }

    /// entry (to, from): coefficient of e_to in the image of e_from.
    void set(int to, int from, const Scalar& c);
    const Scalar& at(int to, int from) const { return m_.at(to, from); }

    Vec apply(const Vec& v) const { return m_.apply(v); }
    bool is_zero() const { return m_.is_zero(); }

    HomogeneousMap scaled(const Scalar& c) const;
    bool operator==(const HomogeneousMap& other) const = default;

  private:
    GradedSpace source_, target_;
    int degree_ = 0;
    QMat m_;
};

/// Composition f after g. Degrees add. Throws on space mismatch.
HomogeneousMap compose(const HomogeneousMap& f, const HomogeneousMap& g);

HomogeneousMap operator+(const HomogeneousMap& a, const HomogeneousMap& b);
HomogeneousMap operator-(const HomogeneousMap& a, const HomogeneousMap& b);

}  // namespace linfty
