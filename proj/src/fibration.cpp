#include "curvemoduli/fibration.hpp"

#include "curvemoduli/errors.hpp"
#include "curvemoduli/linalg.hpp"

namespace curvemoduli {

namespace {

std::array<Scalar, 3> linear_coeffs(const Form& z) {
    return {z.coeff({1, 0, 0}), z.coeff({0, 1, 0}), z.coeff({0, 0, 1})};
}

bool independent(const Form& z1, const Form& z2) {
    auto a = linear_coeffs(z1);
    auto b = linear_coeffs(z2);
    return !(a[1] * b[2] - a[2] * b[1]).is_zero() ||
           !(a[2] * b[0] - a[0] * b[2]).is_zero() ||
           !(a[0] * b[1] - a[1] * b[0]).is_zero();
}

} // namespace

MatrixA::MatrixA(const Form& z1, const Form& z2, const Form& q1, const Form& q2)
    : z1_(z1), z2_(z2), q1_(q1), q2_(q2) {
    if (z1_.degree() != 1 || z2_.degree() != 1)
        throw DegreeMismatch("z entries must be linear");
    if (q1_.degree() != q2_.degree())
        throw DegreeMismatch("q entries must have equal degree");
    if (q1_.degree() + 1 < 3) throw DegreeTooSmall(q1_.degree() + 1);
    if (!independent(z1_, z2_)) throw DependentLinearForms();
    if ((z1_ * q2_ - z2_ * q1_).is_zero()) throw ZeroDeterminant();
}

GroupElement::GroupElement(const std::array<std::array<Scalar, 2>, 2>& g,
                           const Scalar& h_lambda, const Scalar& h_mu, const Form& h_q)
    : g_(g), h_lambda_(h_lambda), h_mu_(h_mu), h_q_(h_q) {
    if ((g_[0][0] * g_[1][1] - g_[0][1] * g_[1][0]).is_zero())
        throw DomainError("singular group matrix");
    if (h_lambda_.is_zero() || h_mu_.is_zero())
        throw DomainError("group scalars must be nonzero");
    if (h_q_.degree() + 2 < 3) throw DegreeTooSmall(h_q_.degree() + 2);
}

GroupElement GroupElement::identity(int d) {
    if (d < 3) throw DegreeTooSmall(d);
    return GroupElement({{{Scalar(1), Scalar()}, {Scalar(), Scalar(1)}}},
                        Scalar(1), Scalar(1), Form(d - 2));
}

Form det_of(const MatrixA& a) { return a.z1() * a.q2() - a.z2() * a.q1(); }

CurvePointPair nu(const MatrixA& a) {
    return CurvePointPair(Curve(det_of(a)), common_zero(a.z1(), a.z2()));
}

MatrixA local_section(const CurvePointPair& pair) {
    const Form& f = pair.curve().form();
    const Point& p = pair.point();
    int c = 0;
    while (p[c].is_zero()) ++c;
    int ia = (c == 0) ? 1 : 0;
    int ib = (c == 2) ? 1 : 2;
    Scalar xi = p[ia], eta = p[ib];

    // Shifted coordinates put the point at the c-th vertex: the pure
    // y_c^d term dies because f vanishes there.
    std::array<Form, 3> shift = {
        Form::variable(0), Form::variable(1), Form::variable(2)};
    shift[ia] = Form::variable(ia) + xi * Form::variable(c);
    shift[ib] = Form::variable(ib) + eta * Form::variable(c);
    Form ftil = f.substitute(shift);

    int d = f.degree();
    Form gt(d - 1), ht(d - 1);
    for (const auto& [e, coeff] : ftil.terms()) {
        Exp3 m = e;
        if (m[ia] > 0) {
            --m[ia];
            gt.add_term(m, coeff);
        } else if (m[ib] > 0) {
            --m[ib];
            ht.add_term(m, coeff);
        } else {
            throw PointNotOnCurve();
        }
    }

    std::array<Form, 3> back = {
        Form::variable(0), Form::variable(1), Form::variable(2)};
    back[ia] = Form::variable(ia) - xi * Form::variable(c);
    back[ib] = Form::variable(ib) - eta * Form::variable(c);
    Form g = gt.substitute(back);
    Form h = ht.substitute(back);

    Form zz1 = Form::variable(ia) - xi * Form::variable(c);
    Form zz2 = Form::variable(ib) - eta * Form::variable(c);
    return MatrixA(zz1, zz2, -h, g);
}

MatrixA act(const GroupElement& e, const MatrixA& a) {
    if (e.d() != a.d()) throw DegreeMismatch("group element degree mismatch");
    const auto& g = e.g();
    Form za = g[0][0] * a.z1() + g[0][1] * a.z2();
    Form zb = g[1][0] * a.z1() + g[1][1] * a.z2();
    Form qa = g[0][0] * a.q1() + g[0][1] * a.q2();
    Form qb = g[1][0] * a.q1() + g[1][1] * a.q2();
    return MatrixA(e.h_lambda() * za, e.h_lambda() * zb,
                   za * e.h_q() + e.h_mu() * qa, zb * e.h_q() + e.h_mu() * qb);
}

std::optional<GroupElement> same_fiber(const MatrixA& a1, const MatrixA& a2) {
    if (a1.d() != a2.d()) throw DegreeMismatch("matrices must share a degree");
    CurvePointPair p1 = nu(a1), p2 = nu(a2);
    if (p1.curve() != p2.curve() || p1.point() != p2.point()) return std::nullopt;

    // g sends the z-column of a1 to that of a2; pin it down on two
    // independent coordinates of (z1, z2) and confirm on the third.
    std::array<std::array<Scalar, 3>, 2> zc1 = {linear_coeffs(a1.z1()),
                                                linear_coeffs(a1.z2())};
    std::array<std::array<Scalar, 3>, 2> zc2 = {linear_coeffs(a2.z1()),
                                                linear_coeffs(a2.z2())};
    int cj = -1, ck = -1;
    for (int j = 0; j < 3 && cj < 0; ++j)
        for (int k = j + 1; k < 3; ++k)
            if (!(zc1[0][j] * zc1[1][k] - zc1[0][k] * zc1[1][j]).is_zero()) {
                cj = j;
                ck = k;
                break;
            }
    QMat s1(2, 2), s2(2, 2);
    for (int i = 0; i < 2; ++i) {
        s1.at(i, 0) = zc1[i][cj];
        s1.at(i, 1) = zc1[i][ck];
        s2.at(i, 0) = zc2[i][cj];
        s2.at(i, 1) = zc2[i][ck];
    }
    QMat g = s2 * *inverse(s1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            if (g.at(i, 0) * zc1[0][j] + g.at(i, 1) * zc1[1][j] != zc2[i][j])
                return std::nullopt;

    Form qt1 = g.at(0, 0) * a1.q1() + g.at(0, 1) * a1.q2();
    Form qt2 = g.at(1, 0) * a1.q1() + g.at(1, 1) * a1.q2();
    Form dett = (g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0)) * det_of(a1);
    Form det2 = det_of(a2);
    Scalar xi = det2.leading().second / dett.leading().second;
    if (det2 != xi * dett) return std::nullopt;

    // h_q solves z'_i * q = q'_i - xi * qt_i as an exact linear system on
    // the coefficients of q.
    int d = a1.d();
    auto rows = monomials_of_degree(d - 1);
    auto cols = monomials_of_degree(d - 2);
    QMat m(2 * static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    std::vector<Scalar> rhs(2 * rows.size());
    std::map<Exp3, int, std::greater<Exp3>> row_of;
    for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = static_cast<int>(r);
    const Form* zp[2] = {&a2.z1(), &a2.z2()};
    const Form* qtp[2] = {&qt1, &qt2};
    const Form* qp[2] = {&a2.q1(), &a2.q2()};
    for (int i = 0; i < 2; ++i) {
        int base = i * static_cast<int>(rows.size());
        for (size_t cidx = 0; cidx < cols.size(); ++cidx)
            for (const auto& [ze, zcoef] : zp[i]->terms()) {
                Exp3 e = cols[cidx];
                for (int t = 0; t < 3; ++t) e[t] += ze[t];
                m.at(base + row_of[e], static_cast<int>(cidx)) += zcoef;
            }
        Form target = *qp[i] - xi * *qtp[i];
        for (const auto& [e, coeff] : target.terms())
            rhs[static_cast<size_t>(base + row_of[e])] = coeff;
    }
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    Form hq(d - 2);
    for (size_t cidx = 0; cidx < cols.size(); ++cidx)
        hq.add_term(cols[cidx], (*sol)[cidx]);

    GroupElement witness({{{g.at(0, 0), g.at(0, 1)}, {g.at(1, 0), g.at(1, 1)}}},
                         Scalar(1), xi, hq);
    if (act(witness, a1) != a2) return std::nullopt;
    return witness;
}

HilbertPoly hilbert_from_resolution(int d) {
    if (d < 3) throw DegreeTooSmall(d);
    // chi(O(a))(m) = (m+a+2)(m+a+1)/2; assemble twice the coefficients so
    // the arithmetic stays integral.
    long terms[3][2] = {{-d + 2, 1}, {0, 1}, {-d + 1, -2}};
    long twice_m2 = 0, twice_m1 = 0, twice_m0 = 0;
    for (auto [a, s] : terms) {
        twice_m2 += s;
        twice_m1 += s * (2 * a + 3);
        twice_m0 += s * (a + 2) * (a + 1);
    }
    if (twice_m2 != 0 || twice_m1 % 2 != 0 || twice_m0 % 2 != 0)
        throw DomainError("resolution does not yield a linear polynomial");
    return HilbertPoly{twice_m1 / 2, twice_m0 / 2};
}

DimensionReport dimension_report(int d) {
    if (d < 3) throw DegreeTooSmall(d);
    long dl = d;
    long n = (dl + 2) * (dl + 1) / 2 - 1;
    return DimensionReport{d, dl * dl + dl + 6, n, n + 1, dl * (dl - 3) / 2, 2, 2};
}

bool stability_inequality(int d, int s, int h0Q) {
    if (d < 3) throw DegreeTooSmall(d);
    if (s < 1 || s >= d || h0Q < 0)
        throw DomainError("stability parameters out of range");
    Scalar rhs = Scalar(static_cast<long>(s) * d, 2) +
                 Scalar(static_cast<long>(d) * h0Q, d - s);
    return Scalar(1) < rhs;
}

} // namespace curvemoduli
