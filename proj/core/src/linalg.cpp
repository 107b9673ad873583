#include "linfty/linalg.hpp"

#include <stdexcept>

namespace linfty {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec QMat::col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vec QMat::row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec QMat::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("QMat::apply: size mismatch");
    Vec y(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!linfty::is_zero(at(r, c)) && !linfty::is_zero(x[c])) y[r] += at(r, c) * x[c];
    return y;
}

bool QMat::is_zero() const {
    for (const auto& q : a_)
        if (!linfty::is_zero(q)) return false;
    return true;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("QMat product: shape mismatch");
    QMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (linfty::is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!linfty::is_zero(b.at(k, j))) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

QMat operator+(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("QMat sum: shape mismatch");
    QMat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

QMat operator-(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("QMat diff: shape mismatch");
    QMat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!linfty::is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Scalar inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m.at(r, col))) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<Vec> kernel_basis(const QMat& m) {
    QMat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = vec_zero(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const QMat& m) {
    QMat r = m;
    return static_cast<int>(rref(r).size());
}

std::optional<Vec> solve(const QMat& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
    QMat aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    Vec x = vec_zero(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), a.cols());
    return x;
}

Vec vec_zero(int n) { return Vec(static_cast<std::size_t>(n)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& q : v)
        if (!linfty::is_zero(q)) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
    return w;
}

void vec_add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
    if (acc.size() != v.size()) throw std::invalid_argument("vec_add_scaled: size mismatch");
    if (linfty::is_zero(c)) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!linfty::is_zero(v[i])) acc[i] += c * v[i];
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v) {
    if (span.empty()) {
        if (vec_is_zero(v)) return Vec{};
        return std::nullopt;
    }
    QMat a(static_cast<int>(span.front().size()), static_cast<int>(span.size()));
    for (int c = 0; c < a.cols(); ++c) {
        if (span[c].size() != v.size()) throw std::invalid_argument("coordinates_in_span: size mismatch");
        for (int r = 0; r < a.rows(); ++r) a.at(r, c) = span[c][r];
    }
    return solve(a, v);
}

}  // namespace linfty
