#include "doctest.h"

#include "curvemoduli/errors.hpp"
#include "curvemoduli/singular.hpp"

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

MatrixA smooth_matrix() {
    return MatrixA(kX1, kX2, form_of(2, {{{2, 0, 0}, 1}}), form_of(2, {{{0, 0, 2}, 1}}));
}

TangentVector dir_xi0() { return TangentVector(kX0, Form(1), Form(2), Form(2)); }

TangentVector dir_xi00() {
    return TangentVector(Form(1), Form(1), form_of(2, {{{2, 0, 0}, 1}}), Form(2));
}

TangentVector dir_eta00() {
    return TangentVector(Form(1), Form(1), Form(2), form_of(2, {{{2, 0, 0}, 1}}));
}

/// Directional derivative of the membership equations along b, computed
/// from scratch: the t-linear coefficient of f_k evaluated on the minor
/// vector of (z1 + t bz1, z2 + t bz2).
std::array<Scalar, 2> derivative_oracle(const MatrixA& a, const TangentVector& b) {
    using testsupport::UniPoly;
    std::array<UniPoly, 3> za, zb;
    for (int j = 0; j < 3; ++j) {
        Exp3 e{j == 0, j == 1, j == 2};
        za[j] = UniPoly(a.z1().coeff(e), b.bz1().coeff(e));
        zb[j] = UniPoly(a.z2().coeff(e), b.bz2().coeff(e));
    }
    std::array<UniPoly, 3> d{za[1] * zb[2] - za[2] * zb[1],
                             za[2] * zb[0] - za[0] * zb[2],
                             za[0] * zb[1] - za[1] * zb[0]};
    return {testsupport::eval_perturbed(a.q1(), b.bq1(), d).coeff(1),
            testsupport::eval_perturbed(a.q2(), b.bq2(), d).coeff(1)};
}

std::array<Scalar, 2> jacobian_times(const QMat& j, const std::vector<Scalar>& v) {
    std::array<Scalar, 2> out{Scalar(0), Scalar(0)};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < j.cols(); ++c) out[r] += j.at(r, c) * v[c];
    return out;
}

MatrixA apply_normalization_parts(const MatrixA& a, const Normalization& n) {
    MatrixA moved = act(n.group_part, a);
    return MatrixA(change_coordinates(moved.z1(), n.coord_change),
                   change_coordinates(moved.z2(), n.coord_change),
                   change_coordinates(moved.q1(), n.coord_change),
                   change_coordinates(moved.q2(), n.coord_change));
}

} // namespace

TEST_CASE("membership equations vanish exactly on the singular locus") {
    SingularEquations eq = singular_equations(worked_matrix());
    CHECK(eq.f1.is_zero());
    CHECK(eq.f2.is_zero());
    CHECK(is_singular_sheaf(worked_matrix()));

    SingularEquations bad = singular_equations(smooth_matrix());
    CHECK(bad.f1 == Scalar(1));
    CHECK(bad.f2.is_zero());
    CHECK_FALSE(is_singular_sheaf(smooth_matrix()));
}

TEST_CASE("tangent vectors flatten and rebuild") {
    TangentVector b(kX0 + Scalar(2) * kX1, Scalar(-1) * kX2,
                    form_of(2, {{{1, 1, 0}, 5}, {{0, 0, 2}, -3}}),
                    form_of(2, {{{2, 0, 0}, 7}}));
    auto v = tangent_coordinates(b);
    CHECK(static_cast<int>(v.size()) == 18);
    CHECK(tangent_from_coordinates(3, v) == b);
    CHECK(v[0] == Scalar(1));
    CHECK(v[1] == Scalar(2));
    CHECK(v[5] == Scalar(-1));

    CHECK(TangentVector::zero(4).d() == 4);
    CHECK_THROWS_AS(TangentVector(kX0 * kX0, Form(1), Form(2), Form(2)), DegreeMismatch);
}

TEST_CASE("jacobian matches the perturbation oracle column by column") {
    MatrixA a = worked_matrix();
    QMat j = jacobian(a);
    CHECK(j.rows() == 2);
    CHECK(j.cols() == 18);
    CHECK(rank(j) == 2);

    for (int c = 0; c < 18; ++c) {
        std::vector<Scalar> v(18, Scalar(0));
        v[static_cast<size_t>(c)] = Scalar(1);
        auto fast = jacobian_times(j, v);
        auto slow = derivative_oracle(a, tangent_from_coordinates(3, v));
        CHECK(fast[0] == slow[0]);
        CHECK(fast[1] == slow[1]);
    }

    TangentVector dense(kX0 - kX2, Scalar(3) * kX1, form_of(2, {{{1, 0, 1}, 2}, {{0, 2, 0}, 1}}),
                        form_of(2, {{{1, 1, 0}, -4}, {{0, 0, 2}, 6}}));
    auto fast = jacobian_times(j, tangent_coordinates(dense));
    auto slow = derivative_oracle(a, dense);
    CHECK(fast[0] == slow[0]);
    CHECK(fast[1] == slow[1]);

    CHECK_THROWS_AS(jacobian(smooth_matrix()), NotInSingularLocus);
}

TEST_CASE("kernel of the jacobian is the tangent space") {
    MatrixA a = worked_matrix();
    QMat j = jacobian(a);
    auto basis = nullspace(j);
    CHECK(static_cast<int>(basis.size()) == 16);
    for (const auto& v : basis) {
        TangentVector b = tangent_from_coordinates(3, v);
        CHECK(tangent_contains(a, b));
        auto r = residue(a, b);
        CHECK(r.first.is_zero());
        CHECK(r.second.is_zero());
    }
}

TEST_CASE("residues of the coordinate directions") {
    MatrixA a = worked_matrix();

    auto r1 = residue(a, dir_xi0());
    CHECK(r1.first == Scalar(-1));
    CHECK(r1.second == Scalar(0));

    auto r2 = residue(a, dir_xi00());
    CHECK(r2.first == Scalar(1));
    CHECK(r2.second == Scalar(0));

    auto r3 = residue(a, dir_eta00());
    CHECK(r3.first == Scalar(0));
    CHECK(r3.second == Scalar(1));

    auto mixed = residue(a, dir_xi0() + dir_xi00());
    CHECK(mixed.first.is_zero());
    CHECK(mixed.second.is_zero());

    CHECK(tangent_contains(a, dir_xi0() + dir_xi00()));
    CHECK(tangent_contains(a, TangentVector::zero(3)));
    CHECK_FALSE(tangent_contains(a, dir_xi0()));
}

TEST_CASE("residue preconditions") {
    MatrixA a = worked_matrix();
    MatrixA skew(kX0 - kX1, kX2, form_of(2, {{{1, 0, 1}, 1}, {{0, 1, 1}, -1}}),
                 form_of(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}}));
    CHECK_THROWS_AS(residue(skew, TangentVector::zero(3)), NotNormalized);
    CHECK_THROWS_AS(residue(smooth_matrix(), TangentVector::zero(3)), NotInSingularLocus);
    CHECK_THROWS_AS(residue(a, TangentVector::zero(4)), DegreeMismatch);
}

TEST_CASE("coordinate changes act on forms contravariantly") {
    Form f = form_of(3, {{{1, 1, 1}, 1}, {{0, 1, 2}, -1}});
    CHECK(change_coordinates(f, QMat::identity(3)) == f);

    QMat t(3, 3);
    t.at(0, 0) = Scalar(1);
    t.at(1, 0) = Scalar(1);
    t.at(1, 1) = Scalar(-1);
    t.at(2, 0) = Scalar(1);
    t.at(2, 2) = Scalar(-1);
    Form g = change_coordinates(f, t);
    std::array<Scalar, 3> p{Scalar(2), Scalar(5), Scalar(-7)};
    std::array<Scalar, 3> tp;
    for (int r = 0; r < 3; ++r) {
        tp[r] = Scalar(0);
        for (int c = 0; c < 3; ++c) tp[r] += t.at(r, c) * p[c];
    }
    CHECK(g.eval(tp) == f.eval(p));
}

TEST_CASE("normalize keeps standard matrices fixed") {
    MatrixA a = worked_matrix();
    CHECK(is_standard_form(a));
    Normalization n = normalize(a);
    CHECK(n.coord_change == QMat::identity(3));
    CHECK(n.result == a);
    CHECK(apply_normalization_parts(a, n) == n.result);
}

TEST_CASE("normalize swaps z entries by a pure group move") {
    MatrixA a(kX2, kX1, form_of(2, {{{2, 0, 0}, 1}}), form_of(2, {{{0, 0, 2}, 1}}));
    CHECK_FALSE(is_standard_form(a));
    Normalization n = normalize(a);
    CHECK(n.coord_change == QMat::identity(3));
    CHECK(n.group_part.g()[0][0] == Scalar(0));
    CHECK(n.group_part.g()[0][1] == Scalar(1));
    CHECK(is_standard_form(n.result));
    CHECK(n.result.q1() == form_of(2, {{{0, 0, 2}, 1}}));
    CHECK(n.result.q2() == form_of(2, {{{2, 0, 0}, 1}}));
    CHECK(apply_normalization_parts(a, n) == n.result);
}

TEST_CASE("normalize moves a general matrix to standard form") {
    MatrixA a(kX0 - kX1, kX0 - kX2, form_of(2, {{{0, 0, 2}, 1}}),
              form_of(2, {{{2, 0, 0}, 1}}));
    Normalization n = normalize(a);
    CHECK(is_standard_form(n.result));
    CHECK(nu(n.result).point() == Point(Scalar(1), Scalar(0), Scalar(0)));
    CHECK(apply_normalization_parts(a, n) == n.result);

    CHECK(n.coord_change.at(0, 0) == Scalar(1));
    CHECK(n.coord_change.at(1, 0) == Scalar(1));
    CHECK(n.coord_change.at(1, 1) == Scalar(-1));
    CHECK(n.coord_change.at(2, 0) == Scalar(1));
    CHECK(n.coord_change.at(2, 2) == Scalar(-1));
}
