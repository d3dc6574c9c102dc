#ifndef CURVEMODULI_SINGULAR_HPP
#define CURVEMODULI_SINGULAR_HPP

#include <utility>
#include <vector>

#include "curvemoduli/fibration.hpp"
#include "curvemoduli/linalg.hpp"

namespace curvemoduli {

/// Values of the two membership equations at a matrix: q1 and q2 evaluated
/// at the minor vector of (z1, z2). Both vanish exactly on the singular
/// locus.
struct SingularEquations {
    Scalar f1;
    Scalar f2;
};

SingularEquations singular_equations(const MatrixA& a);

/// Whether the sheaf presented by the matrix is singular, i.e. all four
/// entries vanish at the common zero of z1, z2.
bool is_singular_sheaf(const MatrixA& a);

/// First-order perturbation of a matrix: same shape, no invertibility or
/// determinant constraints.
class TangentVector {
public:
    TangentVector(const Form& bz1, const Form& bz2, const Form& bq1, const Form& bq2);
    static TangentVector zero(int d);

    int d() const { return bq1_.degree() + 1; }
    const Form& bz1() const { return bz1_; }
    const Form& bz2() const { return bz2_; }
    const Form& bq1() const { return bq1_; }
    const Form& bq2() const { return bq2_; }

    TangentVector operator-() const;
    friend TangentVector operator+(const TangentVector& a, const TangentVector& b);
    friend TangentVector operator-(const TangentVector& a, const TangentVector& b);
    friend TangentVector operator*(const Scalar& c, const TangentVector& b);

    friend bool operator==(const TangentVector& a, const TangentVector& b) {
        return a.bz1_ == b.bz1_ && a.bz2_ == b.bz2_ && a.bq1_ == b.bq1_ &&
               a.bq2_ == b.bq2_;
    }
    friend bool operator!=(const TangentVector& a, const TangentVector& b) {
        return !(a == b);
    }

private:
    Form bz1_, bz2_, bq1_, bq2_;
};

/// Differentials of the two membership equations with respect to all
/// d^2+d+6 matrix coordinates, ordered (a0,a1,a2, b0,b1,b2, coefficients
/// of q1 in descending graded-lex monomial order, then those of q2).
QMat jacobian(const MatrixA& a);

/// Flattening of a tangent vector in the jacobian's column order.
std::vector<Scalar> tangent_coordinates(const TangentVector& b);
TangentVector tangent_from_coordinates(int d, const std::vector<Scalar>& v);

/// Whether jacobian(a) annihilates b.
bool tangent_contains(const MatrixA& a, const TangentVector& b);

/// Defects of the two tangent equations at a matrix in standard form:
/// (xi00 - A10 xi0 - A01 eta0, eta00 - B10 xi0 - B01 eta0). The vector is
/// tangent iff both vanish.
std::pair<Scalar, Scalar> residue(const MatrixA& a, const TangentVector& b);

/// z1 = x1 and z2 = x2 exactly.
bool is_standard_form(const MatrixA& a);

/// Change of coordinates x -> t^{-1} x applied to a form: the result is
/// the form read in the new coordinates x' = t x.
Form change_coordinates(const Form& f, const QMat& t);

/// Decomposition of a normalization move: result equals the group element
/// applied to the input, rewritten in the coordinates x' = coord_change x.
struct Normalization {
    QMat coord_change;
    GroupElement group_part;
    MatrixA result;
};

/// Moves the matrix to standard form (z1 = x1, z2 = x2), preferring a pure
/// group action when the z-span is already <x1, x2> and changing plane
/// coordinates otherwise. The distinguished point lands at (1:0:0).
Normalization normalize(const MatrixA& a);

} // namespace curvemoduli

#endif
