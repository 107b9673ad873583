#pragma once

#include <optional>
#include <vector>

#include "linfty/rational.hpp"

namespace linfty {

/// Dense rational matrix, row major.
class QMat {
  public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec col(int c) const;
    Vec row(int r) const;
    Vec apply(const Vec& x) const;  // matrix * column vector

    bool is_zero() const;
    bool operator==(const QMat& other) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

QMat operator*(const QMat& a, const QMat& b);
QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);

/// In-place reduced row echelon form with leftmost-pivot selection:
/// for each column in order, the first unused row with a nonzero entry
/// becomes the pivot row. Returns the pivot columns in increasing order.
/// The deterministic pivot choice is part of the library contract; every
/// complement and homotopy built on top of it is reproducible.
std::vector<int> rref(QMat& m);

/// Basis of the null space. One vector per free column, in increasing
/// column order, with a unit entry at the free column.
std::vector<Vec> kernel_basis(const QMat& m);

int rank(const QMat& m);

/// One solution of A x = b, if any.
std::optional<Vec> solve(const QMat& a, const Vec& b);

// Vec helpers.
Vec vec_zero(int n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
void vec_add_scaled(Vec& acc, const Scalar& c, const Vec& v);

/// Span membership, and coordinates in the given spanning set if a
/// representation exists (columns = spanning vectors).
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v);

}  // namespace linfty
