#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "curvemoduli/errors.hpp"
#include "curvemoduli/json_io.hpp"
#include "curvemoduli/suites.hpp"

namespace {

using curvemoduli::Json;

curvemoduli::Point parse_point_arg(const std::string& arg) {
    std::vector<curvemoduli::Scalar> coords;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(curvemoduli::Scalar::from_string(tok));
    if (coords.size() != 3)
        throw curvemoduli::ParseError("point must have three comma-separated coordinates");
    try {
        return curvemoduli::Point(coords[0], coords[1], coords[2]);
    } catch (const curvemoduli::DomainError&) {
        throw curvemoduli::ParseError("point coordinates must not all vanish");
    }
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

uint64_t effective_seed(uint64_t cli_seed) {
    const char* env = std::getenv("CURVEMODULI_SEED");
    if (!env) return cli_seed;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw curvemoduli::ParseError("CURVEMODULI_SEED must be an unsigned integer");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinantal parameterization of the universal plane curve: "
                 "exact matrix models, singular-locus tests, and the blow-up "
                 "replacement of singular sheaves"};
    app.require_subcommand(1);

    int degree = 3;
    std::string matrix_file, vector_file, v1_file, v2_file, m1_file, m2_file;
    std::string curve_file, point_arg;
    std::string suite_name;
    uint64_t seed = 0;
    int trials = 100;

    CLI::App* c_hilbert = app.add_subcommand("hilbert", "Hilbert polynomial a*m+b");
    c_hilbert->add_option("--degree", degree, "curve degree")->required();

    CLI::App* c_dims = app.add_subcommand("dims", "dimension and codimension table");
    c_dims->add_option("--degree", degree, "curve degree")->required();

    CLI::App* c_det = app.add_subcommand("det", "determinant of a matrix");
    c_det->add_option("--matrix", matrix_file, "matrix JSON file")->required();

    CLI::App* c_nu = app.add_subcommand("nu", "curve-point pair of a matrix");
    c_nu->add_option("--matrix", matrix_file, "matrix JSON file")->required();

    CLI::App* c_sing = app.add_subcommand("singular", "singular-sheaf membership");
    c_sing->add_option("--matrix", matrix_file, "matrix JSON file")->required();

    CLI::App* c_sec = app.add_subcommand("section", "matrix over a curve-point pair");
    c_sec->add_option("--curve", curve_file, "curve JSON file")->required();
    c_sec->add_option("--point", point_arg, "comma-separated coordinates")->required();

    CLI::App* c_fiber = app.add_subcommand("fiber-eq", "fiber equivalence witness");
    c_fiber->add_option("--m1", m1_file, "first matrix JSON file")->required();
    c_fiber->add_option("--m2", m2_file, "second matrix JSON file")->required();

    CLI::App* c_norm = app.add_subcommand("normalize", "move a matrix to standard form");
    c_norm->add_option("--matrix", matrix_file, "matrix JSON file")->required();

    CLI::App* c_tan = app.add_subcommand("tangent", "tangency of a perturbation");
    c_tan->add_option("--matrix", matrix_file, "matrix JSON file")->required();
    c_tan->add_option("--vector", vector_file, "perturbation JSON file")->required();

    CLI::App* c_phi = app.add_subcommand("phi", "presentation matrix on D(p)");
    c_phi->add_option("--matrix", matrix_file, "matrix JSON file")->required();
    c_phi->add_option("--vector", vector_file, "perturbation JSON file")->required();

    CLI::App* c_rb = app.add_subcommand("rbundle", "local freeness on the support");
    c_rb->add_option("--matrix", matrix_file, "matrix JSON file")->required();
    c_rb->add_option("--vector", vector_file, "perturbation JSON file")->required();

    CLI::App* c_rbeq = app.add_subcommand("rbundle-eq", "equivalence of presentations");
    c_rbeq->add_option("--matrix", matrix_file, "matrix JSON file")->required();
    c_rbeq->add_option("--v1", v1_file, "first perturbation JSON file")->required();
    c_rbeq->add_option("--v2", v2_file, "second perturbation JSON file")->required();

    CLI::App* c_check = app.add_subcommand("check", "run a property suite");
    c_check->add_option("--suite", suite_name, "suite name or 'all'")->required();
    c_check->add_option("--degree", degree, "curve degree");
    c_check->add_option("--seed", seed, "random seed");
    c_check->add_option("--trials", trials, "trial count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    using namespace curvemoduli;
    try {
        if (*c_hilbert) {
            HilbertPoly p = hilbert_from_resolution(degree);
            emit(Json{{"a", p.a}, {"b", p.b}});
        } else if (*c_dims) {
            DimensionReport r = dimension_report(degree);
            emit(Json{{"dim_X", r.dim_X},
                      {"N", r.N},
                      {"dim_M", r.dim_M},
                      {"codim_simpson", r.codim_simpson},
                      {"codim_Xprime", r.codim_Xprime},
                      {"codim_Mprime", r.codim_Mprime}});
        } else if (*c_det) {
            emit(form_to_json(det_of(matrix_from_json(load_json_file(matrix_file)))));
        } else if (*c_nu) {
            emit(pair_to_json(nu(matrix_from_json(load_json_file(matrix_file)))));
        } else if (*c_sing) {
            MatrixA a = matrix_from_json(load_json_file(matrix_file));
            SingularEquations eq = singular_equations(a);
            emit(Json{{"singular", is_singular_sheaf(a)},
                      {"f1", eq.f1.str()},
                      {"f2", eq.f2.str()}});
        } else if (*c_sec) {
            Curve c = curve_from_json(load_json_file(curve_file));
            CurvePointPair pair = make_pair(c, parse_point_arg(point_arg));
            emit(matrix_to_json(local_section(pair)));
        } else if (*c_fiber) {
            MatrixA a1 = matrix_from_json(load_json_file(m1_file));
            MatrixA a2 = matrix_from_json(load_json_file(m2_file));
            auto w = same_fiber(a1, a2);
            emit(Json{{"same_fiber", w.has_value()},
                      {"witness", w ? group_to_json(*w) : Json(nullptr)}});
        } else if (*c_norm) {
            emit(normalization_to_json(
                normalize(matrix_from_json(load_json_file(matrix_file)))));
        } else if (*c_tan) {
            MatrixA a = matrix_from_json(load_json_file(matrix_file));
            TangentVector b = tangent_from_json(load_json_file(vector_file));
            emit(Json{{"tangent", tangent_contains(a, b)}});
        } else if (*c_phi) {
            MatrixA a = matrix_from_json(load_json_file(matrix_file));
            TangentVector b = tangent_from_json(load_json_file(vector_file));
            emit(phi_to_json(phi(a, b)));
        } else if (*c_rb) {
            MatrixA a = matrix_from_json(load_json_file(matrix_file));
            TangentVector b = tangent_from_json(load_json_file(vector_file));
            emit(Json{{"r_bundle", is_r_bundle(a, b)}});
        } else if (*c_rbeq) {
            MatrixA a = matrix_from_json(load_json_file(matrix_file));
            TangentVector b1 = tangent_from_json(load_json_file(v1_file));
            TangentVector b2 = tangent_from_json(load_json_file(v2_file));
            auto aut = r_bundle_equivalent(a, b1, b2);
            emit(Json{{"equivalent", aut.has_value()},
                      {"automorphism", aut ? automorphism_to_json(*aut) : Json(nullptr)}});
        } else if (*c_check) {
            uint64_t s = effective_seed(seed);
            if (suite_name == "all") {
                Json reports = Json::array();
                for (const auto& name : suite_names())
                    reports.push_back(
                        suite_report_to_json(run_suite(name, degree, s, trials)));
                emit(reports);
            } else {
                emit(suite_report_to_json(run_suite(suite_name, degree, s, trials)));
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
