#include "doctest.h"

#include "curvemoduli/errors.hpp"
#include "curvemoduli/fibration.hpp"

#include "support.hpp"

using namespace curvemoduli;
using testsupport::form_of;

namespace {

const Form kX0 = Form::variable(0);
const Form kX1 = Form::variable(1);
const Form kX2 = Form::variable(2);

MatrixA worked_matrix() {
    return MatrixA(kX1, kX2, form_of(2, {{{1, 1, 0}, 1}}), form_of(2, {{{0, 0, 2}, 1}}));
}

MatrixA triangle_matrix() {
    return MatrixA(kX1, kX2, Form(2), form_of(2, {{{1, 0, 1}, 1}}));
}

} // namespace

TEST_CASE("matrix validation") {
    CHECK(worked_matrix().d() == 3);
    CHECK_THROWS_AS(MatrixA(kX1, Scalar(3) * kX1, Form(2), form_of(2, {{{1, 0, 1}, 1}})),
                    DependentLinearForms);
    CHECK_THROWS_AS(MatrixA(kX1, kX2, form_of(2, {{{0, 1, 1}, 1}}),
                            form_of(2, {{{0, 0, 2}, 1}})),
                    ZeroDeterminant);
    CHECK_THROWS_AS(MatrixA(kX1 * kX1, form_of(2, {{{0, 0, 2}, 1}}), Form(3), Form(3)),
                    DegreeMismatch);
    CHECK_THROWS_AS(MatrixA(kX1, kX2, Form(2), form_of(3, {{{1, 1, 1}, 1}})),
                    DegreeMismatch);
    CHECK_THROWS_AS(MatrixA(kX1, kX2, Form(1), kX0), DegreeTooSmall);
}

TEST_CASE("determinant of the worked matrices") {
    CHECK(det_of(worked_matrix()) == form_of(3, {{{0, 1, 2}, 1}, {{1, 1, 1}, -1}}));
    CHECK(det_of(triangle_matrix()) == form_of(3, {{{1, 1, 1}, 1}}));
}

TEST_CASE("nu pairs the canonical curve with the common zero") {
    CurvePointPair p1 = nu(worked_matrix());
    CHECK(p1.curve().form() == form_of(3, {{{1, 1, 1}, 1}, {{0, 1, 2}, -1}}));
    CHECK(p1.point() == Point(Scalar(1), Scalar(0), Scalar(0)));

    CurvePointPair p2 = nu(triangle_matrix());
    CHECK(p2.curve().form() == form_of(3, {{{1, 1, 1}, 1}}));
    CHECK(p2.point() == Point(Scalar(1), Scalar(0), Scalar(0)));
}

TEST_CASE("local section lands in the right fiber") {
    Curve triangle(form_of(3, {{{1, 1, 1}, 1}}));
    MatrixA a = local_section(make_pair(triangle, Point(Scalar(1), Scalar(0), Scalar(0))));
    CHECK(a == triangle_matrix());

    Curve quartic(form_of(4, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, -2}}));
    Point p(Scalar(1), Scalar(1), Scalar(1));
    MatrixA b = local_section(make_pair(quartic, p));
    CHECK(det_of(b) == quartic.form());
    CurvePointPair back = nu(b);
    CHECK(back.curve() == quartic);
    CHECK(back.point() == p);
}

TEST_CASE("group action matches the worked example") {
    GroupElement e({{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}}}, Scalar(1),
                   Scalar(1), Form(1));
    MatrixA moved = act(e, triangle_matrix());
    CHECK(moved.z1() == kX1 + kX2);
    CHECK(moved.z2() == kX2);
    CHECK(moved.q1() == form_of(2, {{{1, 0, 1}, 1}}));
    CHECK(moved.q2() == form_of(2, {{{1, 0, 1}, 1}}));

    CHECK(act(GroupElement::identity(3), triangle_matrix()) == triangle_matrix());
    CHECK(nu(moved).curve() == nu(triangle_matrix()).curve());
    CHECK(nu(moved).point() == nu(triangle_matrix()).point());
}

TEST_CASE("scalar pairs stabilize every matrix") {
    Scalar lam(5);
    GroupElement e({{{lam, Scalar(0)}, {Scalar(0), lam}}}, Scalar(1, 5), Scalar(1, 5),
                   Form(1));
    CHECK(act(e, worked_matrix()) == worked_matrix());
}

TEST_CASE("group element validation") {
    CHECK_THROWS_AS(GroupElement({{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}}},
                                 Scalar(1), Scalar(1), Form(1)),
                    DomainError);
    CHECK_THROWS_AS(GroupElement({{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}},
                                 Scalar(0), Scalar(1), Form(1)),
                    DomainError);
    CHECK_THROWS_AS(GroupElement::identity(2), DegreeTooSmall);
}

TEST_CASE("fiber equivalence recovers a witness") {
    MatrixA a = worked_matrix();
    GroupElement e({{{Scalar(2), Scalar(1)}, {Scalar(-1), Scalar(1)}}}, Scalar(3),
                   Scalar(1, 2), form_of(1, {{{0, 1, 0}, 4}}));
    MatrixA b = act(e, a);
    auto w = same_fiber(a, b);
    REQUIRE(w.has_value());
    CHECK(act(*w, a) == b);

    auto self = same_fiber(a, a);
    REQUIRE(self.has_value());
    CHECK(act(*self, a) == a);

    CHECK_FALSE(same_fiber(a, triangle_matrix()).has_value());
    CHECK_THROWS_AS(same_fiber(a, MatrixA(kX1, kX2, Form(3), form_of(3, {{{1, 0, 2}, 1}}))),
                    DegreeMismatch);
}

TEST_CASE("hilbert polynomial from the resolution") {
    CHECK(hilbert_from_resolution(3) == HilbertPoly{3, 1});
    CHECK(hilbert_from_resolution(4) == HilbertPoly{4, -1});
    CHECK(hilbert_from_resolution(5) == HilbertPoly{5, -4});
    for (int d = 3; d <= 12; ++d) {
        HilbertPoly p = hilbert_from_resolution(d);
        CHECK(p.a == d);
        CHECK(p.b == d * (3 - d) / 2 + 1);
    }
    CHECK_THROWS_AS(hilbert_from_resolution(2), DegreeTooSmall);
}

TEST_CASE("dimension table") {
    DimensionReport r3 = dimension_report(3);
    CHECK(r3.dim_X == 18);
    CHECK(r3.N == 9);
    CHECK(r3.dim_M == 10);
    CHECK(r3.codim_simpson == 0);
    CHECK(r3.codim_Xprime == 2);
    CHECK(r3.codim_Mprime == 2);

    DimensionReport r4 = dimension_report(4);
    CHECK(r4.dim_X == 26);
    CHECK(r4.N == 14);
    CHECK(r4.dim_M == 15);
    CHECK(r4.codim_simpson == 2);

    DimensionReport r5 = dimension_report(5);
    CHECK(r5.dim_X == 36);
    CHECK(r5.N == 20);
    CHECK(r5.dim_M == 21);
    CHECK(r5.codim_simpson == 5);

    CHECK_THROWS_AS(dimension_report(1), DegreeTooSmall);
}

TEST_CASE("stability inequality") {
    CHECK(stability_inequality(3, 1, 0));
    CHECK(stability_inequality(12, 11, 20));
    CHECK_THROWS_AS(stability_inequality(3, 0, 0), DomainError);
    CHECK_THROWS_AS(stability_inequality(3, 3, 0), DomainError);
    CHECK_THROWS_AS(stability_inequality(3, 1, -1), DomainError);
    CHECK_THROWS_AS(stability_inequality(2, 1, 0), DegreeTooSmall);
}
