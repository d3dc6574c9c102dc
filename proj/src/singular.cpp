#include "curvemoduli/singular.hpp"

#include "curvemoduli/errors.hpp"

namespace curvemoduli {

namespace {

std::array<Scalar, 3> linear_coeffs(const Form& z) {
    return {z.coeff({1, 0, 0}), z.coeff({0, 1, 0}), z.coeff({0, 0, 1})};
}

std::array<Scalar, 3> minor_vector(const MatrixA& a) {
    auto av = linear_coeffs(a.z1());
    auto bv = linear_coeffs(a.z2());
    return {av[1] * bv[2] - av[2] * bv[1], av[2] * bv[0] - av[0] * bv[2],
            av[0] * bv[1] - av[1] * bv[0]};
}

} // namespace

SingularEquations singular_equations(const MatrixA& a) {
    auto dv = minor_vector(a);
    return SingularEquations{a.q1().eval(dv), a.q2().eval(dv)};
}

bool is_singular_sheaf(const MatrixA& a) {
    SingularEquations eq = singular_equations(a);
    return eq.f1.is_zero() && eq.f2.is_zero();
}

TangentVector::TangentVector(const Form& bz1, const Form& bz2, const Form& bq1,
                             const Form& bq2)
    : bz1_(bz1), bz2_(bz2), bq1_(bq1), bq2_(bq2) {
    if (bz1_.degree() != 1 || bz2_.degree() != 1)
        throw DegreeMismatch("z perturbations must be linear");
    if (bq1_.degree() != bq2_.degree())
        throw DegreeMismatch("q perturbations must have equal degree");
    if (bq1_.degree() + 1 < 3) throw DegreeTooSmall(bq1_.degree() + 1);
}

TangentVector TangentVector::zero(int d) {
    if (d < 3) throw DegreeTooSmall(d);
    return TangentVector(Form(1), Form(1), Form(d - 1), Form(d - 1));
}

TangentVector TangentVector::operator-() const {
    return TangentVector(-bz1_, -bz2_, -bq1_, -bq2_);
}

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
    return TangentVector(a.bz1_ + b.bz1_, a.bz2_ + b.bz2_, a.bq1_ + b.bq1_,
                         a.bq2_ + b.bq2_);
}

TangentVector operator-(const TangentVector& a, const TangentVector& b) {
    return TangentVector(a.bz1_ - b.bz1_, a.bz2_ - b.bz2_, a.bq1_ - b.bq1_,
                         a.bq2_ - b.bq2_);
}

TangentVector operator*(const Scalar& c, const TangentVector& b) {
    return TangentVector(c * b.bz1_, c * b.bz2_, c * b.bq1_, c * b.bq2_);
}

QMat jacobian(const MatrixA& a) {
    if (!is_singular_sheaf(a)) throw NotInSingularLocus();
    int d = a.d();
    auto mons = monomials_of_degree(d - 1);
    int mc = static_cast<int>(mons.size());
    QMat j(2, 6 + 2 * mc);

    auto av = linear_coeffs(a.z1());
    auto bv = linear_coeffs(a.z2());
    auto dv = minor_vector(a);

    // Differentials of the minor vector with respect to (a0,a1,a2,b0,b1,b2).
    Scalar o;
    std::array<std::array<Scalar, 3>, 6> dmin = {{{o, -bv[2], bv[1]},
                                                  {bv[2], o, -bv[0]},
                                                  {-bv[1], bv[0], o},
                                                  {o, av[2], -av[1]},
                                                  {-av[2], o, av[0]},
                                                  {av[1], -av[0], o}}};
    const Form* qs[2] = {&a.q1(), &a.q2()};
    for (int k = 0; k < 2; ++k) {
        std::array<Scalar, 3> grad = {qs[k]->partial(0).eval(dv),
                                      qs[k]->partial(1).eval(dv),
                                      qs[k]->partial(2).eval(dv)};
        for (int t = 0; t < 6; ++t)
            for (int i = 0; i < 3; ++i) j.at(k, t) += grad[i] * dmin[t][i];
        for (int m = 0; m < mc; ++m)
            j.at(k, 6 + k * mc + m) = Form::monomial(mons[m], Scalar(1)).eval(dv);
    }
    return j;
}

std::vector<Scalar> tangent_coordinates(const TangentVector& b) {
    int d = b.d();
    auto mons = monomials_of_degree(d - 1);
    std::vector<Scalar> v;
    v.reserve(6 + 2 * mons.size());
    for (const auto& c : {b.bz1(), b.bz2()})
        for (int i = 0; i < 3; ++i)
            v.push_back(c.coeff({i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0}));
    for (const auto& q : {b.bq1(), b.bq2()})
        for (const auto& e : mons) v.push_back(q.coeff(e));
    return v;
}

TangentVector tangent_from_coordinates(int d, const std::vector<Scalar>& v) {
    if (d < 3) throw DegreeTooSmall(d);
    auto mons = monomials_of_degree(d - 1);
    if (v.size() != 6 + 2 * mons.size())
        throw DomainError("coordinate vector length mismatch");
    Form bz1(1), bz2(1), bq1(d - 1), bq2(d - 1);
    const Exp3 lin[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i) {
        bz1.add_term(lin[i], v[static_cast<size_t>(i)]);
        bz2.add_term(lin[i], v[static_cast<size_t>(3 + i)]);
    }
    for (size_t m = 0; m < mons.size(); ++m) {
        bq1.add_term(mons[m], v[6 + m]);
        bq2.add_term(mons[m], v[6 + mons.size() + m]);
    }
    return TangentVector(bz1, bz2, bq1, bq2);
}

bool tangent_contains(const MatrixA& a, const TangentVector& b) {
    if (a.d() != b.d()) throw DegreeMismatch("tangent vector degree mismatch");
    QMat j = jacobian(a);
    std::vector<Scalar> v = tangent_coordinates(b);
    for (int k = 0; k < 2; ++k) {
        Scalar dot;
        for (int c = 0; c < j.cols(); ++c) dot += j.at(k, c) * v[static_cast<size_t>(c)];
        if (!dot.is_zero()) return false;
    }
    return true;
}

std::pair<Scalar, Scalar> residue(const MatrixA& a, const TangentVector& b) {
    if (!is_standard_form(a)) throw NotNormalized();
    if (!is_singular_sheaf(a)) throw NotInSingularLocus();
    if (a.d() != b.d()) throw DegreeMismatch("tangent vector degree mismatch");
    int d = a.d();
    Scalar a10 = a.q1().coeff({d - 2, 1, 0});
    Scalar a01 = a.q1().coeff({d - 2, 0, 1});
    Scalar b10 = a.q2().coeff({d - 2, 1, 0});
    Scalar b01 = a.q2().coeff({d - 2, 0, 1});
    Scalar xi0 = b.bz1().coeff({1, 0, 0});
    Scalar eta0 = b.bz2().coeff({1, 0, 0});
    Scalar xi00 = b.bq1().coeff({d - 1, 0, 0});
    Scalar eta00 = b.bq2().coeff({d - 1, 0, 0});
    return {xi00 - a10 * xi0 - a01 * eta0, eta00 - b10 * xi0 - b01 * eta0};
}

bool is_standard_form(const MatrixA& a) {
    return a.z1() == Form::variable(1) && a.z2() == Form::variable(2);
}

Form change_coordinates(const Form& f, const QMat& t) {
    if (t.rows() != 3 || t.cols() != 3) throw DomainError("coordinate change must be 3x3");
    auto r = inverse(t);
    if (!r) throw DomainError("coordinate change must be invertible");
    std::array<Form, 3> repl = {Form(1), Form(1), Form(1)};
    const Exp3 lin[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int k = 0; k < 3; ++k)
        for (int jx = 0; jx < 3; ++jx) repl[k].add_term(lin[jx], r->at(k, jx));
    return f.substitute(repl);
}

Normalization normalize(const MatrixA& a) {
    int d = a.d();
    if (is_standard_form(a))
        return Normalization{QMat::identity(3), GroupElement::identity(d), a};

    auto av = linear_coeffs(a.z1());
    auto bv = linear_coeffs(a.z2());
    if (av[0].is_zero() && bv[0].is_zero()) {
        // The z-span is already <x1, x2>: a pure group move suffices.
        QMat z(2, 2);
        z.at(0, 0) = av[1];
        z.at(0, 1) = av[2];
        z.at(1, 0) = bv[1];
        z.at(1, 1) = bv[2];
        QMat gi = *inverse(z);
        GroupElement e({{{gi.at(0, 0), gi.at(0, 1)}, {gi.at(1, 0), gi.at(1, 1)}}},
                       Scalar(1), Scalar(1), Form(d - 2));
        return Normalization{QMat::identity(3), e, act(e, a)};
    }

    // New coordinates x1' = z1, x2' = z2, x0' = the first coordinate
    // functional not vanishing at the distinguished point.
    Point p = common_zero(a.z1(), a.z2());
    int c = 0;
    while (p[c].is_zero()) ++c;
    QMat t(3, 3);
    t.at(0, c) = Scalar(1);
    for (int jx = 0; jx < 3; ++jx) {
        t.at(1, jx) = av[jx];
        t.at(2, jx) = bv[jx];
    }
    MatrixA result(change_coordinates(a.z1(), t), change_coordinates(a.z2(), t),
                   change_coordinates(a.q1(), t), change_coordinates(a.q2(), t));
    return Normalization{t, GroupElement::identity(d), result};
}

} // namespace curvemoduli
