#ifndef CURVEMODULI_PLANE_HPP
#define CURVEMODULI_PLANE_HPP

#include <array>
#include <string>

#include "curvemoduli/form.hpp"

namespace curvemoduli {

/// Point of the projective plane. Stored canonically: the first nonzero
/// coordinate is scaled to 1.
class Point {
public:
    Point(const Scalar& c0, const Scalar& c1, const Scalar& c2);
    explicit Point(const std::array<Scalar, 3>& c) : Point(c[0], c[1], c[2]) {}

    const std::array<Scalar, 3>& coords() const { return coords_; }
    const Scalar& operator[](int i) const { return coords_[i]; }

    friend bool operator==(const Point& a, const Point& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    std::string str() const;

private:
    std::array<Scalar, 3> coords_;
};

/// Plane curve of degree >= 3, stored as the defining form scaled so the
/// leading coefficient is 1.
class Curve {
public:
    explicit Curve(const Form& f);

    const Form& form() const { return form_; }
    int degree() const { return form_.degree(); }

    friend bool operator==(const Curve& a, const Curve& b) { return a.form_ == b.form_; }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

private:
    Form form_;
};

/// A curve together with a point lying on it.
class CurvePointPair {
public:
    CurvePointPair(const Curve& curve, const Point& point);

    const Curve& curve() const { return curve_; }
    const Point& point() const { return point_; }

private:
    Curve curve_;
    Point point_;
};

/// The common zero of two independent linear forms, via the cross product
/// of their coefficient vectors.
Point common_zero(const Form& z1, const Form& z2);

/// Whether all three partials of the curve vanish at the point.
bool is_singular_point(const Curve& c, const Point& p);

CurvePointPair make_pair(const Curve& c, const Point& p);

} // namespace curvemoduli

#endif
