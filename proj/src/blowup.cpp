#include "curvemoduli/blowup.hpp"

#include "curvemoduli/errors.hpp"
#include "curvemoduli/linalg.hpp"

namespace curvemoduli {

namespace {

// q = x1 * s1 + x2 * s2 for a form with no pure-x0 term; terms divisible
// by x1 feed s1, the rest feed s2.
std::pair<Form, Form> split_x1_x2(const Form& q) {
    int d = q.degree();
    Form s1(d - 1), s2(d - 1);
    for (const auto& [e, c] : q.terms()) {
        if (e[1] > 0) {
            s1.add_term({e[0], e[1] - 1, e[2]}, c);
        } else if (e[2] > 0) {
            s2.add_term({e[0], e[1], e[2] - 1}, c);
        } else {
            throw NotInSingularLocus();
        }
    }
    return {s1, s2};
}

BiForm u_var(int j) {
    Exp6 e{0, 0, 0, 0, 0, 0};
    e[3 + j] = 1;
    return BiForm::monomial(e, Scalar(1));
}

} // namespace

PhiMatrix phi(const MatrixA& a, const TangentVector& b) {
    if (!is_standard_form(a)) throw NotNormalized();
    if (!is_singular_sheaf(a)) throw NotInSingularLocus();
    if (a.d() != b.d()) throw DegreeMismatch("tangent vector degree mismatch");
    int d = a.d();

    Scalar xi0 = b.bz1().coeff({1, 0, 0});
    Scalar eta0 = b.bz2().coeff({1, 0, 0});
    Scalar xi00 = b.bq1().coeff({d - 1, 0, 0});
    Scalar eta00 = b.bq2().coeff({d - 1, 0, 0});

    auto [s11, s12] = split_x1_x2(a.q1());
    auto [s21, s22] = split_x1_x2(a.q2());

    BiForm x0top = BiForm::x_embed(Form::monomial({d - 2, 0, 0}, Scalar(1)));

    BiForm c10 = u_var(1) + xi0 * u_var(0);
    BiForm c20 = u_var(2) + eta0 * u_var(0);
    BiForm c11 = u_var(1) * BiForm::x_embed(s11) + u_var(2) * BiForm::x_embed(s12) +
                 xi00 * (x0top * u_var(0));
    BiForm c21 = u_var(1) * BiForm::x_embed(s21) + u_var(2) * BiForm::x_embed(s22) +
                 eta00 * (x0top * u_var(0));

    return PhiMatrix{{{{DElement(c10), DElement(c11)}, {DElement(c20), DElement(c21)}}},
                     a,
                     b};
}

std::array<std::array<Form, 2>, 2> restrict_to_D0(const PhiMatrix& m) {
    return {{{m.entries[0][0].value().restrict_d0(), m.entries[0][1].value().restrict_d0()},
             {m.entries[1][0].value().restrict_d0(), m.entries[1][1].value().restrict_d0()}}};
}

bool is_r_bundle(const MatrixA& a, const TangentVector& b) {
    PhiMatrix m = phi(a, b);
    QMat coeffs(4, 3);
    int row = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Form r = m.entries[i][j].value().restrict_d1();
            coeffs.at(row, 0) = r.coeff({1, 0, 0});
            coeffs.at(row, 1) = r.coeff({0, 1, 0});
            coeffs.at(row, 2) = r.coeff({0, 0, 1});
            ++row;
        }
    return rank(coeffs) == 3;
}

DElement support_curve(const PhiMatrix& m) {
    return DElement(m.entries[0][0].value() * m.entries[1][1].value() -
                    m.entries[1][0].value() * m.entries[0][1].value());
}

NormalDirection::NormalDirection(const Scalar& r1, const Scalar& r2) : r1_(r1), r2_(r2) {
    if (r1_.is_zero() && r2_.is_zero()) throw TangentVectorNotNormal();
    Scalar inv = Scalar(1) / (r1_.is_zero() ? r2_ : r1_);
    r1_ *= inv;
    r2_ *= inv;
}

NormalDirection normal_direction(const MatrixA& a, const TangentVector& b) {
    auto [r1, r2] = residue(a, b);
    return NormalDirection(r1, r2);
}

std::optional<Automorphism> r_bundle_equivalent(const MatrixA& a,
                                                const TangentVector& b1,
                                                const TangentVector& b2) {
    auto [s1, s2] = residue(a, b1);
    auto [t1, t2] = residue(a, b2);
    if (s1.is_zero() && s2.is_zero()) throw TangentVectorNotNormal();
    if (t1.is_zero() && t2.is_zero()) throw TangentVectorNotNormal();
    if (s1 * t2 != s2 * t1) return std::nullopt;

    Scalar alpha = s1.is_zero() ? t2 / s2 : t1 / s1;
    Scalar mu0 = b2.bz1().coeff({1, 0, 0});
    Scalar nu0 = b2.bz2().coeff({1, 0, 0});
    Scalar xi0 = b1.bz1().coeff({1, 0, 0});
    Scalar eta0 = b1.bz2().coeff({1, 0, 0});
    Automorphism aut{alpha, mu0 - xi0 * alpha, nu0 - eta0 * alpha};

    auto pulled = apply_automorphism(aut, phi(a, b1));
    auto target = phi(a, b2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (pulled[i][j] != target.entries[i][j]) return std::nullopt;
    return aut;
}

std::array<std::array<DElement, 2>, 2> apply_automorphism(const Automorphism& aut,
                                                          const PhiMatrix& m) {
    if (aut.alpha.is_zero()) throw DomainError("automorphism scale must be nonzero");
    Form r0(1), r1(1), r2(1);
    r0.add_term({1, 0, 0}, aut.alpha);
    r1.add_term({1, 0, 0}, aut.beta);
    r1.add_term({0, 1, 0}, Scalar(1));
    r2.add_term({1, 0, 0}, aut.gamma);
    r2.add_term({0, 0, 1}, Scalar(1));
    std::array<Form, 3> repl = {r0, r1, r2};
    auto sub = [&](const DElement& e) {
        return DElement(e.value().substitute_u(repl));
    };
    return {{{sub(m.entries[0][0]), sub(m.entries[0][1])},
             {sub(m.entries[1][0]), sub(m.entries[1][1])}}};
}

} // namespace curvemoduli
