#include "doctest.h"

#include "curvemoduli/blowup.hpp"
#include "curvemoduli/errors.hpp"

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

TangentVector dir_xi0() { return TangentVector(kX0, Form(1), Form(2), Form(2)); }

TangentVector dir_xi00() {
    return TangentVector(Form(1), Form(1), form_of(2, {{{2, 0, 0}, 1}}), Form(2));
}

TangentVector dir_eta00() {
    return TangentVector(Form(1), Form(1), Form(2), form_of(2, {{{2, 0, 0}, 1}}));
}

DElement del(int xdeg, int udeg, std::initializer_list<std::pair<Exp6, long>> terms) {
    BiForm b(xdeg, udeg);
    for (const auto& [e, c] : terms) b.add_term(e, Scalar(c));
    return DElement(b);
}

} // namespace

TEST_CASE("presentation matrix of the worked directions") {
    MatrixA a = worked_matrix();

    PhiMatrix m1 = phi(a, dir_xi0());
    CHECK(m1.entries[0][0] ==
          del(0, 1, {{{0, 0, 0, 0, 1, 0}, 1}, {{0, 0, 0, 1, 0, 0}, 1}}));
    CHECK(m1.entries[0][1] == del(1, 1, {{{1, 0, 0, 0, 1, 0}, 1}}));
    CHECK(m1.entries[1][0] == del(0, 1, {{{0, 0, 0, 0, 0, 1}, 1}}));
    CHECK(m1.entries[1][1] == del(1, 1, {{{0, 0, 1, 0, 0, 1}, 1}}));

    PhiMatrix m2 = phi(a, dir_xi00());
    CHECK(m2.entries[0][0] == del(0, 1, {{{0, 0, 0, 0, 1, 0}, 1}}));
    CHECK(m2.entries[0][1] ==
          del(1, 1, {{{1, 0, 0, 0, 1, 0}, 1}, {{1, 0, 0, 1, 0, 0}, 1}}));
    CHECK(m2.entries[1][0] == del(0, 1, {{{0, 0, 0, 0, 0, 1}, 1}}));
    CHECK(m2.entries[1][1] == del(1, 1, {{{0, 0, 1, 0, 0, 1}, 1}}));

    PhiMatrix m0 = phi(a, TangentVector::zero(3));
    CHECK(m0.entries[0][0] == del(0, 1, {{{0, 0, 0, 0, 1, 0}, 1}}));
    CHECK(m0.entries[0][1] == del(1, 1, {{{1, 0, 0, 0, 1, 0}, 1}}));

    for (const auto& m : {m1, m2, m0})
        for (int r = 0; r < 2; ++r) {
            CHECK(m.entries[r][0].bidegree() == std::pair<int, int>{0, 1});
            CHECK(m.entries[r][1].bidegree() == std::pair<int, int>{1, 1});
        }
}

TEST_CASE("restriction to D0 recovers the source matrix") {
    MatrixA a = worked_matrix();
    for (const auto& b : {dir_xi0(), dir_xi00(), dir_eta00(), TangentVector::zero(3)}) {
        auto entries = restrict_to_D0(phi(a, b));
        CHECK(entries[0][0] == a.z1());
        CHECK(entries[0][1] == a.q1());
        CHECK(entries[1][0] == a.z2());
        CHECK(entries[1][1] == a.q2());
    }
}

TEST_CASE("support curve is the determinant pulled to D(p)") {
    MatrixA a = worked_matrix();
    DElement s = support_curve(phi(a, TangentVector::zero(3)));
    CHECK(s == del(1, 2, {{{0, 0, 1, 0, 1, 1}, 1}, {{1, 0, 0, 0, 1, 1}, -1}}));
    CHECK(s.bidegree() == std::pair<int, int>{1, 2});
    CHECK(s.value().restrict_d0() == det_of(a));

    DElement s1 = support_curve(phi(a, dir_xi0()));
    CHECK(s1 == s);
}

TEST_CASE("local freeness detects exactly the non-tangent directions") {
    MatrixA a = worked_matrix();
    CHECK(is_r_bundle(a, dir_xi0()));
    CHECK(is_r_bundle(a, dir_xi00()));
    CHECK(is_r_bundle(a, dir_eta00()));
    CHECK_FALSE(is_r_bundle(a, dir_xi0() + dir_xi00()));
    CHECK_FALSE(is_r_bundle(a, TangentVector::zero(3)));

    CHECK(is_r_bundle(a, dir_xi0()) == !tangent_contains(a, dir_xi0()));
    TangentVector t = dir_xi0() + dir_xi00();
    CHECK(is_r_bundle(a, t) == !tangent_contains(a, t));
}

TEST_CASE("normal directions of the coordinate perturbations") {
    MatrixA a = worked_matrix();
    CHECK(normal_direction(a, dir_xi0()) == NormalDirection(Scalar(1), Scalar(0)));
    CHECK(normal_direction(a, dir_xi00()) == NormalDirection(Scalar(1), Scalar(0)));
    CHECK(normal_direction(a, dir_eta00()) == NormalDirection(Scalar(0), Scalar(1)));
    CHECK(normal_direction(a, dir_xi0()) == normal_direction(a, dir_xi00()));

    NormalDirection n(Scalar(-2), Scalar(4));
    CHECK(n.r1() == Scalar(1));
    CHECK(n.r2() == Scalar(-2));
    CHECK_THROWS_AS(NormalDirection(Scalar(0), Scalar(0)), TangentVectorNotNormal);
    CHECK_THROWS_AS(normal_direction(a, TangentVector::zero(3)), TangentVectorNotNormal);
}

TEST_CASE("equivalence of presentations along proportional residues") {
    MatrixA a = worked_matrix();

    auto scaled = r_bundle_equivalent(a, dir_xi0(), Scalar(2) * dir_xi0());
    REQUIRE(scaled.has_value());
    CHECK(scaled->alpha == Scalar(2));
    CHECK(scaled->beta == Scalar(0));
    CHECK(scaled->gamma == Scalar(0));

    auto crossed = r_bundle_equivalent(a, dir_xi0(), dir_xi00());
    REQUIRE(crossed.has_value());
    CHECK(crossed->alpha == Scalar(-1));
    CHECK(crossed->beta == Scalar(1));
    CHECK(crossed->gamma == Scalar(0));

    auto self = r_bundle_equivalent(a, dir_eta00(), dir_eta00());
    REQUIRE(self.has_value());
    CHECK(self->alpha == Scalar(1));
    CHECK(self->beta == Scalar(0));
    CHECK(self->gamma == Scalar(0));

    CHECK_FALSE(r_bundle_equivalent(a, dir_xi0(), dir_eta00()).has_value());
    CHECK_THROWS_AS(r_bundle_equivalent(a, TangentVector::zero(3), dir_xi0()),
                    TangentVectorNotNormal);
}

TEST_CASE("the witness automorphism pulls one presentation to the other") {
    MatrixA a = worked_matrix();
    Automorphism aut{Scalar(-1), Scalar(1), Scalar(0)};
    auto pulled = apply_automorphism(aut, phi(a, dir_xi0()));
    PhiMatrix target = phi(a, dir_xi00());
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(pulled[r][c] == target.entries[r][c]);

    CHECK_THROWS_AS(apply_automorphism(Automorphism{Scalar(0), Scalar(1), Scalar(1)},
                                       phi(a, dir_xi0())),
                    DomainError);
}

TEST_CASE("presentation preconditions") {
    MatrixA skew(kX0 - kX1, kX2, form_of(2, {{{1, 0, 1}, 1}, {{0, 1, 1}, -1}}),
                 form_of(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}}));
    CHECK_THROWS_AS(phi(skew, TangentVector::zero(3)), NotNormalized);

    MatrixA smooth(kX1, kX2, form_of(2, {{{2, 0, 0}, 1}}), form_of(2, {{{0, 0, 2}, 1}}));
    CHECK_THROWS_AS(phi(smooth, TangentVector::zero(3)), NotInSingularLocus);

    CHECK_THROWS_AS(phi(worked_matrix(), TangentVector::zero(4)), DegreeMismatch);
}

TEST_CASE("a quartic example stays exact") {
    MatrixA a(kX1, kX2, form_of(3, {{{2, 1, 0}, 1}}), form_of(3, {{{0, 0, 3}, 1}}));
    CHECK(is_r_bundle(a, TangentVector(kX0, Form(1), Form(3), Form(3))));
    CHECK_FALSE(is_r_bundle(a, TangentVector::zero(4)));

    PhiMatrix m = phi(a, TangentVector::zero(4));
    CHECK(m.entries[0][1] == del(2, 1, {{{2, 0, 0, 0, 1, 0}, 1}}));
    CHECK(support_curve(m).value().restrict_d0() == det_of(a));
    for (int r = 0; r < 2; ++r) {
        CHECK(m.entries[r][0].bidegree() == std::pair<int, int>{0, 1});
        CHECK(m.entries[r][1].bidegree() == std::pair<int, int>{2, 1});
    }
}
