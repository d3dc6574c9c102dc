#ifndef CURVEMODULI_LINALG_HPP
#define CURVEMODULI_LINALG_HPP

#include <optional>
#include <vector>

#include "curvemoduli/scalar.hpp"

namespace curvemoduli {

/// Dense rational matrix, row-major.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols);
    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    friend QMat operator*(const QMat& a, const QMat& b);
    friend bool operator==(const QMat& a, const QMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const QMat& a, const QMat& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(QMat& m);

int rank(const QMat& m);

/// One solution of m x = rhs, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const QMat& m, const std::vector<Scalar>& rhs);

/// Basis of the right nullspace (each vector has m.cols() entries).
std::vector<std::vector<Scalar>> nullspace(const QMat& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<QMat> inverse(const QMat& m);

Scalar determinant(const QMat& m);

} // namespace curvemoduli

#endif
