#include "curvemoduli/sampling.hpp"

#include "curvemoduli/errors.hpp"

namespace curvemoduli {

long Rng::below(long n) {
    // Rejection sampling keeps the mapping unbiased and reproducible.
    uint64_t bound = static_cast<uint64_t>(n);
    uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    uint64_t draw;
    do {
        draw = eng_();
    } while (draw >= limit);
    return static_cast<long>(draw % bound);
}

long Rng::int_in(long lo, long hi) { return lo + below(hi - lo + 1); }

Scalar Rng::nonzero_coeff() {
    long v;
    do {
        v = int_in(-9, 9);
    } while (v == 0);
    return Scalar(v);
}

uint64_t trial_seed(uint64_t seed, uint64_t index) {
    // splitmix64 finalizer over the combined state.
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Form random_form(Rng& rng, int degree) {
    Form f(degree);
    for (const auto& e : monomials_of_degree(degree)) f.add_term(e, rng.coeff());
    return f;
}

Form random_linear(Rng& rng) { return random_form(rng, 1); }

namespace {

bool independent_linear(const Form& z1, const Form& z2) {
    Scalar a0 = z1.coeff({1, 0, 0}), a1 = z1.coeff({0, 1, 0}), a2 = z1.coeff({0, 0, 1});
    Scalar b0 = z2.coeff({1, 0, 0}), b1 = z2.coeff({0, 1, 0}), b2 = z2.coeff({0, 0, 1});
    return !(a1 * b2 - a2 * b1).is_zero() || !(a2 * b0 - a0 * b2).is_zero() ||
           !(a0 * b1 - a1 * b0).is_zero();
}

std::pair<Form, Form> random_independent_pair(Rng& rng) {
    for (;;) {
        Form z1 = random_linear(rng);
        Form z2 = random_linear(rng);
        if (independent_linear(z1, z2)) return {z1, z2};
    }
}

// Subtracts the right multiple of the pivot-coordinate power so the form
// vanishes at the (canonical) point.
Form vanish_at(const Form& f, const Point& p) {
    int w = 0;
    while (p[w].is_zero()) ++w;
    Scalar val = f.eval(p.coords());
    if (val.is_zero()) return f;
    Exp3 e{0, 0, 0};
    e[w] = f.degree();
    return f - Form::monomial(e, val);
}

} // namespace

MatrixA random_matrix(Rng& rng, int d) {
    if (d < 3) throw DegreeTooSmall(d);
    for (;;) {
        auto [z1, z2] = random_independent_pair(rng);
        Form q1 = random_form(rng, d - 1);
        Form q2 = random_form(rng, d - 1);
        if ((z1 * q2 - z2 * q1).is_zero()) continue;
        return MatrixA(z1, z2, q1, q2);
    }
}

MatrixA random_singular_matrix(Rng& rng, int d) {
    if (d < 3) throw DegreeTooSmall(d);
    for (;;) {
        auto [z1, z2] = random_independent_pair(rng);
        Point p = common_zero(z1, z2);
        Form q1 = vanish_at(random_form(rng, d - 1), p);
        Form q2 = vanish_at(random_form(rng, d - 1), p);
        if ((z1 * q2 - z2 * q1).is_zero()) continue;
        return MatrixA(z1, z2, q1, q2);
    }
}

MatrixA random_normalized_singular(Rng& rng, int d) {
    if (d < 3) throw DegreeTooSmall(d);
    Point p(Scalar(1), Scalar(), Scalar());
    for (;;) {
        Form q1 = vanish_at(random_form(rng, d - 1), p);
        Form q2 = vanish_at(random_form(rng, d - 1), p);
        Form z1 = Form::variable(1);
        Form z2 = Form::variable(2);
        if ((z1 * q2 - z2 * q1).is_zero()) continue;
        return MatrixA(z1, z2, q1, q2);
    }
}

TangentVector random_tangent_vector(Rng& rng, int d) {
    if (d < 3) throw DegreeTooSmall(d);
    return TangentVector(random_linear(rng), random_linear(rng),
                         random_form(rng, d - 1), random_form(rng, d - 1));
}

TangentVector random_tangent_at(Rng& rng, const MatrixA& a) {
    if (!is_standard_form(a)) throw NotNormalized();
    if (!is_singular_sheaf(a)) throw NotInSingularLocus();
    int d = a.d();
    TangentVector b = random_tangent_vector(rng, d);
    Scalar a10 = a.q1().coeff({d - 2, 1, 0});
    Scalar a01 = a.q1().coeff({d - 2, 0, 1});
    Scalar b10 = a.q2().coeff({d - 2, 1, 0});
    Scalar b01 = a.q2().coeff({d - 2, 0, 1});
    Scalar xi0 = b.bz1().coeff({1, 0, 0});
    Scalar eta0 = b.bz2().coeff({1, 0, 0});
    Exp3 top{d - 1, 0, 0};
    Form bq1 = b.bq1();
    bq1.add_term(top, a10 * xi0 + a01 * eta0 - bq1.coeff(top));
    Form bq2 = b.bq2();
    bq2.add_term(top, b10 * xi0 + b01 * eta0 - bq2.coeff(top));
    return TangentVector(b.bz1(), b.bz2(), bq1, bq2);
}

TangentVector random_normal_at(Rng& rng, const MatrixA& a) {
    if (!is_standard_form(a)) throw NotNormalized();
    if (!is_singular_sheaf(a)) throw NotInSingularLocus();
    for (;;) {
        TangentVector b = random_tangent_vector(rng, a.d());
        auto [r1, r2] = residue(a, b);
        if (!r1.is_zero() || !r2.is_zero()) return b;
    }
}

GroupElement random_group_element(Rng& rng, int d) {
    if (d < 3) throw DegreeTooSmall(d);
    for (;;) {
        std::array<std::array<Scalar, 2>, 2> g = {
            {{rng.coeff(), rng.coeff()}, {rng.coeff(), rng.coeff()}}};
        if ((g[0][0] * g[1][1] - g[0][1] * g[1][0]).is_zero()) continue;
        return GroupElement(g, rng.nonzero_coeff(), rng.nonzero_coeff(),
                            random_form(rng, d - 2));
    }
}

CurvePointPair random_curve_point_pair(Rng& rng, int d) {
    if (d < 3) throw DegreeTooSmall(d);
    for (;;) {
        Scalar c0 = rng.coeff(), c1 = rng.coeff(), c2 = rng.coeff();
        if (c0.is_zero() && c1.is_zero() && c2.is_zero()) continue;
        Point p(c0, c1, c2);
        Form f = vanish_at(random_form(rng, d), p);
        if (f.is_zero()) continue;
        return CurvePointPair(Curve(f), p);
    }
}

Json random_instances(InstanceKind kind, int d, uint64_t seed, int n) {
    if (d < 3) throw DegreeTooSmall(d);
    if (n < 0) throw DomainError("negative instance count");
    Json out = Json::array();
    for (int i = 0; i < n; ++i) {
        Rng rng(trial_seed(seed, static_cast<uint64_t>(i)));
        switch (kind) {
        case InstanceKind::X:
            out.push_back(matrix_to_json(random_matrix(rng, d)));
            break;
        case InstanceKind::Xprime:
            out.push_back(matrix_to_json(random_singular_matrix(rng, d)));
            break;
        case InstanceKind::Tangent: {
            MatrixA a = random_normalized_singular(rng, d);
            out.push_back(Json{{"matrix", matrix_to_json(a)},
                               {"vector", tangent_to_json(random_tangent_at(rng, a))}});
            break;
        }
        case InstanceKind::Normal: {
            MatrixA a = random_normalized_singular(rng, d);
            out.push_back(Json{{"matrix", matrix_to_json(a)},
                               {"vector", tangent_to_json(random_normal_at(rng, a))}});
            break;
        }
        }
    }
    return out;
}

} // namespace curvemoduli
