#ifndef CURVEMODULI_BLOWUP_HPP
#define CURVEMODULI_BLOWUP_HPP

#include <optional>

#include "curvemoduli/dring.hpp"
#include "curvemoduli/singular.hpp"

namespace curvemoduli {

/// Presentation matrix of the sheaf on D(p) attached to a matrix in
/// standard form and a perturbation direction. Entry bidegrees are
/// [[(0,1),(d-2,1)],[(0,1),(d-2,1)]]; the first column is
/// (u1 + xi0 u0, u2 + eta0 u0).
struct PhiMatrix {
    std::array<std::array<DElement, 2>, 2> entries;
    MatrixA provenance_matrix;
    TangentVector provenance_vector;
};

PhiMatrix phi(const MatrixA& a, const TangentVector& b);

/// Substitutes u = (0, x1, x2) into every entry; always returns the four
/// entries of the matrix that produced phi.
std::array<std::array<Form, 2>, 2> restrict_to_D0(const PhiMatrix& m);

/// Whether the sheaf presented by phi(a, b) is locally free on its
/// support: the four entry restrictions to x = (1,0,0) have no common
/// zero, i.e. their 4x3 coefficient matrix has rank 3. Holds exactly when
/// b violates the tangent equations.
bool is_r_bundle(const MatrixA& a, const TangentVector& b);

/// Determinant of the presentation matrix, bidegree (d-2, 2), reduced.
DElement support_curve(const PhiMatrix& m);

/// Projectivized residue pair, canonicalized so the first nonzero entry
/// is 1.
class NormalDirection {
public:
    NormalDirection(const Scalar& r1, const Scalar& r2);

    const Scalar& r1() const { return r1_; }
    const Scalar& r2() const { return r2_; }

    friend bool operator==(const NormalDirection& a, const NormalDirection& b) {
        return a.r1_ == b.r1_ && a.r2_ == b.r2_;
    }
    friend bool operator!=(const NormalDirection& a, const NormalDirection& b) {
        return !(a == b);
    }

private:
    Scalar r1_, r2_;
};

NormalDirection normal_direction(const MatrixA& a, const TangentVector& b);

/// Automorphism of D(p) acting identically away from the exceptional
/// line: u0 -> alpha u0, u1 -> u1 + beta u0, u2 -> u2 + gamma u0.
struct Automorphism {
    Scalar alpha;
    Scalar beta;
    Scalar gamma;
};

/// An automorphism pulling phi(a, b1) back to phi(a, b2) when the two
/// residues are proportional; nothing otherwise. The returned value is
/// verified entry-by-entry before being handed out.
std::optional<Automorphism> r_bundle_equivalent(const MatrixA& a,
                                                const TangentVector& b1,
                                                const TangentVector& b2);

std::array<std::array<DElement, 2>, 2> apply_automorphism(const Automorphism& aut,
                                                          const PhiMatrix& m);

} // namespace curvemoduli

#endif
