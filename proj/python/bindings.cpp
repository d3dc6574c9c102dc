#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvemoduli/json_io.hpp"
#include "curvemoduli/suites.hpp"

namespace py = pybind11;
using namespace curvemoduli;

namespace {

Json parse(const std::string& s) {
    Json j = Json::parse(s, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

std::string dims_json(int d) {
    DimensionReport r = dimension_report(d);
    return Json{{"dim_X", r.dim_X},
                {"N", r.N},
                {"dim_M", r.dim_M},
                {"codim_simpson", r.codim_simpson},
                {"codim_Xprime", r.codim_Xprime},
                {"codim_Mprime", r.codim_Mprime}}
        .dump();
}

InstanceKind kind_from_name(const std::string& name) {
    if (name == "X") return InstanceKind::X;
    if (name == "Xprime") return InstanceKind::Xprime;
    if (name == "tangent") return InstanceKind::Tangent;
    if (name == "normal") return InstanceKind::Normal;
    throw ParseError("unknown instance kind: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact operations on determinantal models of plane curves; "
              "all structured values cross the boundary as JSON strings";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("hilbert", [](int d) {
        HilbertPoly p = hilbert_from_resolution(d);
        return Json{{"a", p.a}, {"b", p.b}}.dump();
    });
    m.def("dims", &dims_json);
    m.def("stability", &stability_inequality);

    m.def("det", [](const std::string& matrix) {
        return form_to_json(det_of(matrix_from_json(parse(matrix)))).dump();
    });
    m.def("nu", [](const std::string& matrix) {
        return pair_to_json(nu(matrix_from_json(parse(matrix)))).dump();
    });
    m.def("is_singular", [](const std::string& matrix) {
        return is_singular_sheaf(matrix_from_json(parse(matrix)));
    });
    m.def("section", [](const std::string& curve, const std::string& point) {
        CurvePointPair pair =
            make_pair(curve_from_json(parse(curve)), point_from_json(parse(point)));
        return matrix_to_json(local_section(pair)).dump();
    });
    m.def("act", [](const std::string& group, const std::string& matrix) {
        return matrix_to_json(
                   act(group_from_json(parse(group)), matrix_from_json(parse(matrix))))
            .dump();
    });
    m.def("same_fiber",
          [](const std::string& m1, const std::string& m2) -> std::optional<std::string> {
              auto w = same_fiber(matrix_from_json(parse(m1)), matrix_from_json(parse(m2)));
              if (!w) return std::nullopt;
              return group_to_json(*w).dump();
          });
    m.def("normalize", [](const std::string& matrix) {
        return normalization_to_json(normalize(matrix_from_json(parse(matrix)))).dump();
    });
    m.def("tangent_contains", [](const std::string& matrix, const std::string& vector) {
        return tangent_contains(matrix_from_json(parse(matrix)),
                                tangent_from_json(parse(vector)));
    });
    m.def("phi", [](const std::string& matrix, const std::string& vector) {
        return phi_to_json(
                   phi(matrix_from_json(parse(matrix)), tangent_from_json(parse(vector))))
            .dump();
    });
    m.def("is_r_bundle", [](const std::string& matrix, const std::string& vector) {
        return is_r_bundle(matrix_from_json(parse(matrix)),
                           tangent_from_json(parse(vector)));
    });
    m.def("r_bundle_equivalent",
          [](const std::string& matrix, const std::string& v1,
             const std::string& v2) -> std::optional<std::string> {
              auto aut = r_bundle_equivalent(matrix_from_json(parse(matrix)),
                                             tangent_from_json(parse(v1)),
                                             tangent_from_json(parse(v2)));
              if (!aut) return std::nullopt;
              return automorphism_to_json(*aut).dump();
          });

    m.def("run_suite", [](const std::string& name, int degree, uint64_t seed, int trials) {
        return suite_report_to_json(run_suite(name, degree, seed, trials)).dump();
    });
    m.def("suite_names", []() { return suite_names(); });
    m.def("random_instances", [](const std::string& kind, int d, uint64_t seed, int n) {
        return random_instances(kind_from_name(kind), d, seed, n).dump();
    });
}
