#include "curvemoduli/plane.hpp"

#include <sstream>

#include "curvemoduli/errors.hpp"

namespace curvemoduli {

Point::Point(const Scalar& c0, const Scalar& c1, const Scalar& c2)
    : coords_{c0, c1, c2} {
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (!coords_[i].is_zero()) { lead = i; break; }
    if (lead < 0) throw DomainError("all point coordinates are zero");
    Scalar inv = Scalar(1) / coords_[lead];
    for (int i = lead; i < 3; ++i) coords_[i] *= inv;
}

std::string Point::str() const {
    std::ostringstream os;
    os << "(" << coords_[0].str() << " : " << coords_[1].str() << " : "
       << coords_[2].str() << ")";
    return os.str();
}

Curve::Curve(const Form& f) : form_(f.degree()) {
    if (f.degree() < 3) throw DegreeTooSmall(f.degree());
    if (f.is_zero()) throw DomainError("zero form does not define a curve");
    form_ = (Scalar(1) / f.leading().second) * f;
}

CurvePointPair::CurvePointPair(const Curve& curve, const Point& point)
    : curve_(curve), point_(point) {
    if (!curve_.form().eval(point_.coords()).is_zero()) throw PointNotOnCurve();
}

Point common_zero(const Form& z1, const Form& z2) {
    if (z1.degree() != 1 || z2.degree() != 1)
        throw DegreeMismatch("common zero needs linear forms");
    Scalar a0 = z1.coeff({1, 0, 0}), a1 = z1.coeff({0, 1, 0}), a2 = z1.coeff({0, 0, 1});
    Scalar b0 = z2.coeff({1, 0, 0}), b1 = z2.coeff({0, 1, 0}), b2 = z2.coeff({0, 0, 1});
    Scalar d0 = a1 * b2 - a2 * b1;
    Scalar d1 = a2 * b0 - a0 * b2;
    Scalar d2 = a0 * b1 - a1 * b0;
    if (d0.is_zero() && d1.is_zero() && d2.is_zero()) throw DependentLinearForms();
    return Point(d0, d1, d2);
}

bool is_singular_point(const Curve& c, const Point& p) {
    for (int i = 0; i < 3; ++i)
        if (!c.form().partial(i).eval(p.coords()).is_zero()) return false;
    return true;
}

CurvePointPair make_pair(const Curve& c, const Point& p) { return CurvePointPair(c, p); }

} // namespace curvemoduli
