#include "curvemoduli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "curvemoduli/errors.hpp"

namespace curvemoduli {

namespace {

struct TrialContext {
    int trial;
    std::vector<std::string>* failures;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        std::ostringstream os;
        os << "trial " << trial << ": " << what;
        failures->push_back(os.str());
    }
};

void run_trials(std::vector<std::string>& failures, uint64_t seed, int trials,
                const std::function<void(Rng&, TrialContext&)>& body) {
    for (int i = 0; i < trials; ++i) {
        Rng rng(trial_seed(seed, static_cast<uint64_t>(i)));
        TrialContext ctx{i, &failures};
        try {
            body(rng, ctx);
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << "trial " << i << ": unexpected error: " << e.what();
            failures.push_back(os.str());
        }
    }
}

std::string dump(const MatrixA& a) { return matrix_to_json(a).dump(); }

bool pairs_equal(const CurvePointPair& a, const CurvePointPair& b) {
    return a.curve() == b.curve() && a.point() == b.point();
}

// ---- exactalg ----

std::vector<Exp6> bimonomials(int xd, int ud) {
    std::vector<Exp6> out;
    for (const auto& xe : monomials_of_degree(xd))
        for (const auto& ue : monomials_of_degree(ud))
            out.push_back({xe[0], xe[1], xe[2], ue[0], ue[1], ue[2]});
    return out;
}

BiForm random_biform(Rng& rng, int xd, int ud) {
    BiForm b(xd, ud);
    for (const auto& e : bimonomials(xd, ud)) b.add_term(e, rng.coeff());
    return b;
}

// One rewrite step at a random reducible term; identity if none is left.
BiForm rewrite_single_step(Rng& rng, const BiForm& b) {
    struct Step {
        Exp6 e;
        Scalar c;
        bool kill;
    };
    std::vector<Step> candidates;
    for (const auto& [e, c] : b.terms()) {
        if (e[3] > 0 && (e[1] > 0 || e[2] > 0)) candidates.push_back({e, c, true});
        if (e[1] > 0 && e[5] > 0) candidates.push_back({e, c, false});
    }
    if (candidates.empty()) return b;
    const Step& s = candidates[static_cast<size_t>(
        rng.below(static_cast<long>(candidates.size())))];
    BiForm out = b;
    out.add_term(s.e, -s.c);
    if (!s.kill) {
        Exp6 swapped = s.e;
        --swapped[1];
        ++swapped[2];
        ++swapped[4];
        --swapped[5];
        out.add_term(swapped, s.c);
    }
    return out;
}

void suite_exactalg(Rng& rng, TrialContext& t) {
    int da = static_cast<int>(rng.int_in(1, 5));
    int db = static_cast<int>(rng.int_in(1, 5));
    Form f = random_form(rng, da);
    Form g = random_form(rng, da);
    Form h = random_form(rng, db);
    t.check((f + g) * h == f * h + g * h, "distributivity failed");
    t.check(f * g == g * f, "commutativity failed");

    int de = static_cast<int>(rng.int_in(1, 6));
    Form u = random_form(rng, de);
    Form euler(de);
    for (int i = 0; i < 3; ++i) euler += Form::variable(i) * u.partial(i);
    t.check(euler == Scalar(de) * u, "Euler identity failed");

    std::array<Scalar, 3> pt = {rng.coeff(), rng.coeff(), rng.coeff()};
    t.check((f * h).eval(pt) == f.eval(pt) * h.eval(pt),
            "evaluation is not multiplicative");

    BiForm b = random_biform(rng, static_cast<int>(rng.int_in(0, 3)),
                             static_cast<int>(rng.int_in(0, 3)));
    BiForm stepped = b;
    int steps = static_cast<int>(rng.int_in(0, 5));
    for (int s = 0; s < steps; ++s) stepped = rewrite_single_step(rng, stepped);
    t.check(dring_reduce(stepped) == dring_reduce(b),
            "reduction depends on rewrite order");
}

// ---- plane ----

void suite_plane(int d, Rng& rng, TrialContext& t) {
    CurvePointPair pair = random_curve_point_pair(rng, d);
    Scalar lam = rng.nonzero_coeff();
    Form scaled = lam * pair.curve().form();
    CurvePointPair rescaled = make_pair(Curve(scaled), pair.point());
    t.check(pairs_equal(pair, rescaled), "pair is not scalar invariant");
    t.check(is_singular_point(Curve(scaled), pair.point()) ==
                is_singular_point(pair.curve(), pair.point()),
            "singularity is not scalar invariant");

    Form z1(1), z2(1);
    for (;;) {
        z1 = random_linear(rng);
        z2 = random_linear(rng);
        try {
            Point p = common_zero(z1, z2);
            t.check(z1.eval(p.coords()).is_zero() && z2.eval(p.coords()).is_zero(),
                    "common zero does not annihilate the forms");
            break;
        } catch (const DependentLinearForms&) {
        }
    }
}

// ---- section-quotient ----

// Fixed points of the action at a fixed matrix: the z-part forces the
// rescaled 2x2 factor to the identity, the q-part then forces the
// triangular factor to a scalar. Together the stabilizer is exactly the
// one-parameter scalar family.
bool stabilizer_is_scalar_line(const MatrixA& a, std::string& why) {
    const Exp3 lin[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    QMat zsys(6, 4);
    std::vector<Scalar> zrhs(6);
    const Form* zs[2] = {&a.z1(), &a.z2()};
    for (int i = 0; i < 2; ++i)
        for (int c = 0; c < 3; ++c) {
            zsys.at(3 * i + c, 2 * i) = a.z1().coeff(lin[c]);
            zsys.at(3 * i + c, 2 * i + 1) = a.z2().coeff(lin[c]);
            zrhs[static_cast<size_t>(3 * i + c)] = zs[i]->coeff(lin[c]);
        }
    if (rank(zsys) != 4) {
        why = "z-part solution is not unique";
        return false;
    }
    auto gsol = solve(zsys, zrhs);
    if (!gsol || (*gsol)[0] != Scalar(1) || !(*gsol)[1].is_zero() ||
        !(*gsol)[2].is_zero() || (*gsol)[3] != Scalar(1)) {
        why = "z-part does not force the identity";
        return false;
    }

    int d = a.d();
    auto rows = monomials_of_degree(d - 1);
    auto cols = monomials_of_degree(d - 2);
    int nc = static_cast<int>(cols.size());
    QMat qsys(2 * static_cast<int>(rows.size()), nc + 1);
    std::vector<Scalar> qrhs(2 * rows.size());
    std::map<Exp3, int, std::greater<Exp3>> row_of;
    for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = static_cast<int>(r);
    const Form* qs[2] = {&a.q1(), &a.q2()};
    for (int i = 0; i < 2; ++i) {
        int base = i * static_cast<int>(rows.size());
        for (int c = 0; c < nc; ++c)
            for (const auto& [ze, zc] : zs[i]->terms()) {
                Exp3 e = cols[static_cast<size_t>(c)];
                for (int k = 0; k < 3; ++k) e[k] += ze[k];
                qsys.at(base + row_of[e], c) += zc;
            }
        for (const auto& [e, c] : qs[i]->terms()) {
            qsys.at(base + row_of[e], nc) = c;
            qrhs[static_cast<size_t>(base + row_of[e])] = c;
        }
    }
    if (rank(qsys) != nc + 1) {
        why = "q-part solution is not unique";
        return false;
    }
    auto qsol = solve(qsys, qrhs);
    if (!qsol) {
        why = "q-part inconsistent";
        return false;
    }
    for (int c = 0; c < nc; ++c)
        if (!(*qsol)[static_cast<size_t>(c)].is_zero()) {
            why = "q-part forces a nonzero form";
            return false;
        }
    if ((*qsol)[static_cast<size_t>(nc)] != Scalar(1)) {
        why = "q-part scale is not one";
        return false;
    }
    return true;
}

void suite_section_quotient(int d, Rng& rng, TrialContext& t, int trial, int trials) {
    CurvePointPair pair = random_curve_point_pair(rng, d);
    MatrixA s = local_section(pair);
    t.check(pairs_equal(nu(s), pair), "section does not invert the quotient map");
    t.check(det_of(s) == pair.curve().form(),
            "section determinant is not the canonical form");

    MatrixA a = random_matrix(rng, d);
    GroupElement e = random_group_element(rng, d);
    MatrixA moved = act(e, a);
    t.check(pairs_equal(nu(moved), nu(a)), "action does not preserve the fiber");

    auto witness = same_fiber(a, moved);
    if (!witness) {
        t.check(false, "no witness along an orbit: " + dump(a));
    } else {
        t.check(act(*witness, a) == moved, "witness does not map the matrix over");
    }

    MatrixA other = random_matrix(rng, d);
    auto cross = same_fiber(a, other);
    if (cross) {
        t.check(act(*cross, a) == other, "cross witness fails to act");
    } else {
        t.check(!pairs_equal(nu(a), nu(other)),
                "witness missing although fibers agree");
    }

    if (trial < std::min(trials, 200)) {
        std::string why;
        if (!stabilizer_is_scalar_line(a, why))
            t.check(false, "stabilizer is not the scalar line (" + why + "): " + dump(a));
    }
}

// ---- singular-locus ----

void suite_singular_locus(int d, Rng& rng, TrialContext& t, int trial, int trials) {
    MatrixA a = random_matrix(rng, d);
    MatrixA s = random_singular_matrix(rng, d);
    for (const MatrixA* m : {&a, &s}) {
        CurvePointPair p = nu(*m);
        t.check(is_singular_sheaf(*m) == is_singular_point(p.curve(), p.point()),
                "sheaf/point singularity disagreement: " + dump(*m));
    }
    t.check(is_singular_sheaf(s), "constructed member misses the locus");
    t.check(rank(jacobian(s)) == 2, "jacobian rank is not 2: " + dump(s));

    if (trial < std::min(trials, 100)) {
        MatrixA n = random_normalized_singular(rng, d);
        QMat j = jacobian(n);
        auto basis = nullspace(j);
        t.check(static_cast<int>(basis.size()) == j.cols() - 2,
                "kernel dimension is not codimension 2");
        for (const auto& v : basis) {
            TangentVector b = tangent_from_coordinates(d, v);
            auto [r1, r2] = residue(n, b);
            t.check(r1.is_zero() && r2.is_zero(),
                    "kernel vector violates the tangent equations");
        }
        TangentVector bt = random_tangent_at(rng, n);
        t.check(tangent_contains(n, bt), "tangent-equation solution is not in the kernel");
        TangentVector bn = random_normal_at(rng, n);
        t.check(!tangent_contains(n, bn), "normal vector lies in the kernel");
    }

    if (trial < std::min(trials, 200)) {
        GroupElement e = random_group_element(rng, d);
        t.check(is_singular_sheaf(act(e, a)) == is_singular_sheaf(a),
                "locus membership is not orbit invariant");
        t.check(is_singular_sheaf(act(e, s)) == is_singular_sheaf(s),
                "locus membership is not orbit invariant on the locus");
    }

    Normalization norm = normalize(s);
    t.check(is_standard_form(norm.result), "normalize missed standard form");
    t.check(normalize(norm.result).coord_change == QMat::identity(3),
            "normalize is not idempotent");
    t.check(is_singular_sheaf(norm.result),
            "normalize left the singular locus: " + dump(s));
    MatrixA g = act(norm.group_part, s);
    t.check(change_coordinates(g.z1(), norm.coord_change) == norm.result.z1() &&
                change_coordinates(g.z2(), norm.coord_change) == norm.result.z2() &&
                change_coordinates(g.q1(), norm.coord_change) == norm.result.q1() &&
                change_coordinates(g.q2(), norm.coord_change) == norm.result.q2(),
            "normalization parts do not reproduce the result");
}

// ---- blowup ----

void suite_blowup(int d, Rng& rng, TrialContext& t, int trial) {
    MatrixA a = random_normalized_singular(rng, d);
    TangentVector b = (trial % 2 == 0) ? random_tangent_at(rng, a)
                                       : random_tangent_vector(rng, d);
    PhiMatrix m = phi(a, b);

    auto d0 = restrict_to_D0(m);
    t.check(d0[0][0] == a.z1() && d0[1][0] == a.z2() && d0[0][1] == a.q1() &&
                d0[1][1] == a.q2(),
            "restriction away from the exceptional line loses the matrix");

    t.check(is_r_bundle(a, b) == !tangent_contains(a, b),
            "local freeness does not match the tangent criterion: " + dump(a));

    for (int i = 0; i < 2; ++i) {
        t.check(m.entries[i][0].bidegree() == std::make_pair(0, 1),
                "first-column bidegree is off");
        t.check(m.entries[i][1].bidegree() == std::make_pair(d - 2, 1),
                "second-column bidegree is off");
    }

    DElement sc = support_curve(m);
    t.check(sc.bidegree() == std::make_pair(d - 2, 2), "support bidegree is off");
    t.check(sc.value().restrict_d0() == det_of(a),
            "support curve does not restrict to the determinant");
}

// ---- rbundle-equiv ----

void suite_rbundle_equiv(int d, Rng& rng, TrialContext& t) {
    MatrixA a = random_normalized_singular(rng, d);
    TangentVector b1 = random_normal_at(rng, a);
    Scalar alpha = rng.nonzero_coeff();
    TangentVector b2 = alpha * b1 + random_tangent_at(rng, a);

    auto aut = r_bundle_equivalent(a, b1, b2);
    if (!aut) {
        t.check(false, "proportional residues yield no automorphism: " + dump(a));
        return;
    }
    t.check(aut->alpha == alpha, "automorphism scale disagrees with the construction");
    auto pulled = apply_automorphism(*aut, phi(a, b1));
    PhiMatrix target = phi(a, b2);
    bool same = true;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) same = same && pulled[i][k] == target.entries[i][k];
    t.check(same, "pullback does not reproduce the second presentation");

    auto refl = r_bundle_equivalent(a, b1, b1);
    t.check(refl && refl->alpha == Scalar(1) && refl->beta.is_zero() &&
                refl->gamma.is_zero(),
            "reflexivity fails");
    auto back = r_bundle_equivalent(a, b2, b1);
    t.check(back && back->alpha == Scalar(1) / alpha, "symmetry fails to invert");

    Scalar alpha2 = rng.nonzero_coeff();
    TangentVector b3 = alpha2 * b2 + random_tangent_at(rng, a);
    auto chain = r_bundle_equivalent(a, b1, b3);
    t.check(chain && chain->alpha == alpha * alpha2, "chained scales do not multiply");

    TangentVector off = random_normal_at(rng, a);
    int guard = 0;
    while (normal_direction(a, off) == normal_direction(a, b1) && guard++ < 64)
        off = random_normal_at(rng, a);
    if (normal_direction(a, off) != normal_direction(a, b1))
        t.check(!r_bundle_equivalent(a, b1, off),
                "non-proportional residues still equivalent");
}

// ---- closed-form sweeps ----

void sweep_stability(std::vector<std::string>& failures) {
    for (int d = 3; d <= 12; ++d)
        for (int s = 1; s < d; ++s)
            for (int h = 0; h <= 20; ++h)
                if (!stability_inequality(d, s, h)) {
                    std::ostringstream os;
                    os << "inequality fails at d=" << d << " s=" << s << " h0Q=" << h;
                    failures.push_back(os.str());
                }
}

void sweep_hilbert(std::vector<std::string>& failures) {
    for (int d = 3; d <= 12; ++d) {
        HilbertPoly p = hilbert_from_resolution(d);
        long dl = d;
        if (p.a != dl || p.b != dl * (3 - dl) / 2 + 1) {
            std::ostringstream os;
            os << "resolution route disagrees with the closed form at d=" << d << ": "
               << p.a << "m+" << p.b;
            failures.push_back(os.str());
        }
    }
    if (!(hilbert_from_resolution(3) == HilbertPoly{3, 1}))
        failures.push_back("d=3 is not 3m+1");
}

void sweep_dims(std::vector<std::string>& failures) {
    for (int d = 3; d <= 12; ++d) {
        DimensionReport r = dimension_report(d);
        long dl = d;
        bool ok = r.dim_X == dl * dl + dl + 6 && r.N == (dl + 2) * (dl + 1) / 2 - 1 &&
                  r.dim_M == r.N + 1 && r.codim_simpson == dl * (dl - 3) / 2 &&
                  r.codim_Xprime == 2 && r.codim_Mprime == 2;
        if (!ok) {
            std::ostringstream os;
            os << "dimension formulas fail at d=" << d;
            failures.push_back(os.str());
        }
    }
    if (dimension_report(3).codim_simpson != 0)
        failures.push_back("d=3 embedding should have codimension 0");
    if (dimension_report(4).codim_simpson != 2)
        failures.push_back("d=4 embedding should have codimension 2");
}

} // namespace

std::vector<std::string> suite_names() {
    return {"exactalg",  "plane",     "section-quotient", "singular-locus",
            "blowup",    "rbundle-equiv", "stability",    "hilbert",
            "dims"};
}

SuiteReport run_suite(const std::string& name, int degree, uint64_t seed, int trials) {
    if (degree < 3) throw DegreeTooSmall(degree);
    if (trials < 0) throw DomainError("negative trial count");
    SuiteReport report{name, degree, seed, trials, {}, 0};
    auto start = std::chrono::steady_clock::now();

    if (name == "exactalg") {
        run_trials(report.failures, seed, trials,
                   [](Rng& rng, TrialContext& t) { suite_exactalg(rng, t); });
    } else if (name == "plane") {
        run_trials(report.failures, seed, trials,
                   [degree](Rng& rng, TrialContext& t) { suite_plane(degree, rng, t); });
    } else if (name == "section-quotient") {
        run_trials(report.failures, seed, trials,
                   [degree, trials](Rng& rng, TrialContext& t) {
                       suite_section_quotient(degree, rng, t, t.trial, trials);
                   });
    } else if (name == "singular-locus") {
        run_trials(report.failures, seed, trials,
                   [degree, trials](Rng& rng, TrialContext& t) {
                       suite_singular_locus(degree, rng, t, t.trial, trials);
                   });
    } else if (name == "blowup") {
        run_trials(report.failures, seed, trials, [degree](Rng& rng, TrialContext& t) {
            suite_blowup(degree, rng, t, t.trial);
        });
    } else if (name == "rbundle-equiv") {
        run_trials(report.failures, seed, trials, [degree](Rng& rng, TrialContext& t) {
            suite_rbundle_equiv(degree, rng, t);
        });
    } else if (name == "stability") {
        sweep_stability(report.failures);
    } else if (name == "hilbert") {
        sweep_hilbert(report.failures);
    } else if (name == "dims") {
        sweep_dims(report.failures);
    } else {
        throw ParseError("unknown suite: " + name);
    }

    auto end = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return report;
}

Json suite_report_to_json(const SuiteReport& r) {
    return Json{{"suite", r.suite},     {"degree", r.degree}, {"seed", r.seed},
                {"trials", r.trials},   {"failures", r.failures},
                {"elapsed_ms", r.elapsed_ms}};
}

} // namespace curvemoduli
