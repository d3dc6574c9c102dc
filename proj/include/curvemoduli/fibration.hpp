#ifndef CURVEMODULI_FIBRATION_HPP
#define CURVEMODULI_FIBRATION_HPP

#include <array>
#include <optional>

#include "curvemoduli/plane.hpp"

namespace curvemoduli {

/// A 2x2 matrix [[z1, q1],[z2, q2]] with independent linear forms z1, z2,
/// forms q1, q2 of degree d-1, and nonzero determinant. Parameterizes a
/// curve of degree d together with the common zero of z1, z2 on it.
class MatrixA {
public:
    MatrixA(const Form& z1, const Form& z2, const Form& q1, const Form& q2);

    int d() const { return q1_.degree() + 1; }
    const Form& z1() const { return z1_; }
    const Form& z2() const { return z2_; }
    const Form& q1() const { return q1_; }
    const Form& q2() const { return q2_; }

    friend bool operator==(const MatrixA& a, const MatrixA& b) {
        return a.z1_ == b.z1_ && a.z2_ == b.z2_ && a.q1_ == b.q1_ && a.q2_ == b.q2_;
    }
    friend bool operator!=(const MatrixA& a, const MatrixA& b) { return !(a == b); }

private:
    Form z1_, z2_, q1_, q2_;
};

/// Element (g, h) of GL2 x Aut acting on matrices by A -> g A h, where
/// h = [[lambda, q],[0, mu]] with q of degree d-2.
class GroupElement {
public:
    GroupElement(const std::array<std::array<Scalar, 2>, 2>& g,
                 const Scalar& h_lambda, const Scalar& h_mu, const Form& h_q);
    static GroupElement identity(int d);

    const std::array<std::array<Scalar, 2>, 2>& g() const { return g_; }
    const Scalar& h_lambda() const { return h_lambda_; }
    const Scalar& h_mu() const { return h_mu_; }
    const Form& h_q() const { return h_q_; }
    int d() const { return h_q_.degree() + 2; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.g_ == b.g_ && a.h_lambda_ == b.h_lambda_ && a.h_mu_ == b.h_mu_ &&
               a.h_q_ == b.h_q_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) {
        return !(a == b);
    }

private:
    std::array<std::array<Scalar, 2>, 2> g_;
    Scalar h_lambda_, h_mu_;
    Form h_q_;
};

/// z1*q2 - z2*q1, homogeneous of degree d.
Form det_of(const MatrixA& a);

/// The curve cut out by the determinant together with the common zero of
/// z1 and z2; the point always lies on the curve.
CurvePointPair nu(const MatrixA& a);

/// A matrix with nu(result) = pair and det equal to the curve's form.
/// Works in the chart around the point's first nonzero coordinate.
MatrixA local_section(const CurvePointPair& pair);

/// Two-sided multiplication g A h. Preserves nu.
MatrixA act(const GroupElement& e, const MatrixA& a);

/// A witness e with act(e, a1) = a2 when both matrices map to the same
/// curve-point pair; nothing otherwise.
std::optional<GroupElement> same_fiber(const MatrixA& a1, const MatrixA& a2);

/// Linear polynomial a*m + b.
struct HilbertPoly {
    long a;
    long b;
    friend bool operator==(const HilbertPoly& x, const HilbertPoly& y) {
        return x.a == y.a && x.b == y.b;
    }
};

/// Euler characteristic of the twisted resolution 0 -> O(-d+2) + O(-2d+2)
/// -> ... assembled termwise: chi(m-d+2) + chi(m) - 2 chi(m-d+1).
HilbertPoly hilbert_from_resolution(int d);

struct DimensionReport {
    int d;
    long dim_X;
    long N;
    long dim_M;
    long codim_simpson;
    long codim_Xprime;
    long codim_Mprime;
};

DimensionReport dimension_report(int d);

/// Exact comparison 1 < s*d/2 + d*h0Q/(d-s).
bool stability_inequality(int d, int s, int h0Q);

} // namespace curvemoduli

#endif
