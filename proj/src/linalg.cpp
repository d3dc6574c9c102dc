#include "curvemoduli/linalg.hpp"

#include "curvemoduli/errors.hpp"

namespace curvemoduli {

QMat::QMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * cols, Scalar());
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    QMat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = Scalar(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const QMat& m) {
    QMat w = m;
    return static_cast<int>(rref(w).size());
}

std::optional<std::vector<Scalar>> solve(const QMat& m, const std::vector<Scalar>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw DomainError("rhs length mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols(), Scalar());
    for (size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug.at(static_cast<int>(k), m.cols());
    return x;
}

std::vector<std::vector<Scalar>> nullspace(const QMat& m) {
    QMat w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar());
        v[free] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -w.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMat> inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    int n = m.rows();
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Scalar determinant(const QMat& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    QMat w = m;
    int n = w.rows();
    Scalar det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!w.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) return Scalar();
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
            det = -det;
        }
        det *= w.at(c, c);
        Scalar inv = Scalar(1) / w.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (w.at(i, c).is_zero()) continue;
            Scalar f = w.at(i, c) * inv;
            for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return det;
}

} // namespace curvemoduli
