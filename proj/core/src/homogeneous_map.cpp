#include "linfty/homogeneous_map.hpp"

#include <stdexcept>

namespace linfty {

HomogeneousMap::HomogeneousMap(GradedSpace source, GradedSpace target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), m_(target_.dim(), source_.dim()) {}

HomogeneousMap HomogeneousMap::identity(const GradedSpace& space) {
    HomogeneousMap f(space, space, 0);
    f.m_ = QMat::identity(space.dim());
    return f;
}

HomogeneousMap HomogeneousMap::zero(const GradedSpace& source, const GradedSpace& target, int degree) {
    return HomogeneousMap(source, target, degree);
}

void HomogeneousMap::set(int to, int from, const Scalar& c) {
    if (to < 0 || to >= target_.dim() || from < 0 || from >= source_.dim())
        throw std::invalid_argument("HomogeneousMap::set: index out of range");
    if (!linfty::is_zero(c) && target_.degree(to) != source_.degree(from) + degree_)
        throw std::invalid_argument("HomogeneousMap::set: entry outside the degree block");
    m_.at(to, from) = c;
}

HomogeneousMap HomogeneousMap::scaled(const Scalar& c) const {
    HomogeneousMap f = *this;
    for (int r = 0; r < f.m_.rows(); ++r)
        for (int s = 0; s < f.m_.cols(); ++s) f.m_.at(r, s) *= c;
    return f;
}

HomogeneousMap compose(const HomogeneousMap& f, const HomogeneousMap& g) {
    if (g.target() != f.source()) throw std::invalid_argument("compose: space mismatch");
    HomogeneousMap h(g.source(), f.target(), f.degree() + g.degree());
    QMat prod = f.matrix() * g.matrix();
    for (int r = 0; r < prod.rows(); ++r)
        for (int c = 0; c < prod.cols(); ++c)
            if (!linfty::is_zero(prod.at(r, c))) h.set(r, c, prod.at(r, c));
    return h;
}

HomogeneousMap operator+(const HomogeneousMap& a, const HomogeneousMap& b) {
    if (a.source() != b.source() || a.target() != b.target() || a.degree() != b.degree())
        throw std::invalid_argument("HomogeneousMap sum: shape mismatch");
    HomogeneousMap h(a.source(), a.target(), a.degree());
    QMat sum = a.matrix() + b.matrix();
    for (int r = 0; r < sum.rows(); ++r)
        for (int c = 0; c < sum.cols(); ++c)
            if (!linfty::is_zero(sum.at(r, c))) h.set(r, c, sum.at(r, c));
    return h;
}

HomogeneousMap operator-(const HomogeneousMap& a, const HomogeneousMap& b) {
    return a + b.scaled(Scalar(-1));
}

}  // namespace linfty
