#include "curvemoduli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "curvemoduli/errors.hpp"

namespace curvemoduli {

namespace {

std::vector<int> parse_exponents(const std::string& key, size_t count) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad exponent key: " + key);
        }
    }
    if (out.size() != count) throw ParseError("bad exponent key: " + key);
    return out;
}

int get_int(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("missing integer field: ") + field);
    return j[field].get<int>();
}

Scalar get_scalar(const Json& j) {
    if (!j.is_string()) throw ParseError("coefficient must be a rational string");
    return Scalar::from_string(j.get<std::string>());
}

const Json& get_member(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw ParseError(std::string("missing field: ") + field);
    return j[field];
}

} // namespace

Json form_to_json(const Form& f) {
    Json terms = Json::object();
    for (const auto& [e, c] : f.terms()) {
        std::ostringstream key;
        key << e[0] << "," << e[1] << "," << e[2];
        terms[key.str()] = c.str();
    }
    return Json{{"degree", f.degree()}, {"terms", terms}};
}

Form form_from_json(const Json& j) {
    int degree = get_int(j, "degree");
    if (degree < 0) throw ParseError("negative degree");
    Form f(degree);
    const Json& terms = get_member(j, "terms");
    if (!terms.is_object()) throw ParseError("terms must be an object");
    for (const auto& [key, val] : terms.items()) {
        auto e = parse_exponents(key, 3);
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw ParseError("negative exponent");
        try {
            f.add_term({e[0], e[1], e[2]}, get_scalar(val));
        } catch (const DegreeMismatch&) {
            throw ParseError("term degree does not match form degree");
        }
    }
    return f;
}

Json biform_to_json(const BiForm& b) {
    Json terms = Json::object();
    for (const auto& [e, c] : b.terms()) {
        std::ostringstream key;
        key << e[0] << "," << e[1] << "," << e[2] << "|" << e[3] << "," << e[4] << ","
            << e[5];
        terms[key.str()] = c.str();
    }
    auto [xd, ud] = b.bidegree();
    return Json{{"bidegree", Json::array({xd, ud})}, {"terms", terms}};
}

BiForm biform_from_json(const Json& j) {
    const Json& bd = get_member(j, "bidegree");
    if (!bd.is_array() || bd.size() != 2 || !bd[0].is_number_integer() ||
        !bd[1].is_number_integer())
        throw ParseError("bidegree must be a pair of integers");
    int xd = bd[0].get<int>(), ud = bd[1].get<int>();
    if (xd < 0 || ud < 0) throw ParseError("negative bidegree");
    BiForm b(xd, ud);
    const Json& terms = get_member(j, "terms");
    if (!terms.is_object()) throw ParseError("terms must be an object");
    for (const auto& [key, val] : terms.items()) {
        auto bar = key.find('|');
        if (bar == std::string::npos) throw ParseError("bad exponent key: " + key);
        auto xe = parse_exponents(key.substr(0, bar), 3);
        auto ue = parse_exponents(key.substr(bar + 1), 3);
        try {
            b.add_term({xe[0], xe[1], xe[2], ue[0], ue[1], ue[2]}, get_scalar(val));
        } catch (const DegreeMismatch&) {
            throw ParseError("term bidegree does not match");
        }
    }
    return b;
}

Json point_to_json(const Point& p) {
    return Json::array({p[0].str(), p[1].str(), p[2].str()});
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("point must be a 3-array");
    try {
        return Point(get_scalar(j[0]), get_scalar(j[1]), get_scalar(j[2]));
    } catch (const DomainError&) {
        throw ParseError("point coordinates must not all vanish");
    }
}

Json curve_to_json(const Curve& c) { return form_to_json(c.form()); }

Curve curve_from_json(const Json& j) {
    try {
        return Curve(form_from_json(j));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Json pair_to_json(const CurvePointPair& p) {
    return Json{{"curve", curve_to_json(p.curve())}, {"point", point_to_json(p.point())}};
}

CurvePointPair pair_from_json(const Json& j) {
    Curve c = curve_from_json(get_member(j, "curve"));
    Point p = point_from_json(get_member(j, "point"));
    return CurvePointPair(c, p);
}

Json matrix_to_json(const MatrixA& a) {
    return Json{{"d", a.d()},
                {"z1", form_to_json(a.z1())},
                {"z2", form_to_json(a.z2())},
                {"q1", form_to_json(a.q1())},
                {"q2", form_to_json(a.q2())}};
}

MatrixA matrix_from_json(const Json& j) {
    int d = get_int(j, "d");
    Form z1 = form_from_json(get_member(j, "z1"));
    Form z2 = form_from_json(get_member(j, "z2"));
    Form q1 = form_from_json(get_member(j, "q1"));
    Form q2 = form_from_json(get_member(j, "q2"));
    if (q1.degree() != d - 1) throw ParseError("q degree inconsistent with d");
    return MatrixA(z1, z2, q1, q2);
}

Json tangent_to_json(const TangentVector& b) {
    return Json{{"d", b.d()},
                {"z1", form_to_json(b.bz1())},
                {"z2", form_to_json(b.bz2())},
                {"q1", form_to_json(b.bq1())},
                {"q2", form_to_json(b.bq2())}};
}

TangentVector tangent_from_json(const Json& j) {
    int d = get_int(j, "d");
    Form z1 = form_from_json(get_member(j, "z1"));
    Form z2 = form_from_json(get_member(j, "z2"));
    Form q1 = form_from_json(get_member(j, "q1"));
    Form q2 = form_from_json(get_member(j, "q2"));
    if (q1.degree() != d - 1) throw ParseError("q degree inconsistent with d");
    return TangentVector(z1, z2, q1, q2);
}

Json group_to_json(const GroupElement& e) {
    Json g = Json::array({Json::array({e.g()[0][0].str(), e.g()[0][1].str()}),
                          Json::array({e.g()[1][0].str(), e.g()[1][1].str()})});
    return Json{{"g", g},
                {"lambda", e.h_lambda().str()},
                {"mu", e.h_mu().str()},
                {"q", form_to_json(e.h_q())}};
}

GroupElement group_from_json(const Json& j) {
    const Json& g = get_member(j, "g");
    if (!g.is_array() || g.size() != 2 || !g[0].is_array() || g[0].size() != 2 ||
        !g[1].is_array() || g[1].size() != 2)
        throw ParseError("g must be a 2x2 array");
    std::array<std::array<Scalar, 2>, 2> gm = {
        {{get_scalar(g[0][0]), get_scalar(g[0][1])},
         {get_scalar(g[1][0]), get_scalar(g[1][1])}}};
    return GroupElement(gm, get_scalar(get_member(j, "lambda")),
                        get_scalar(get_member(j, "mu")),
                        form_from_json(get_member(j, "q")));
}

Json normalization_to_json(const Normalization& n) {
    Json t = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 3; ++k) row.push_back(n.coord_change.at(i, k).str());
        t.push_back(row);
    }
    return Json{{"coord_change", t},
                {"group", group_to_json(n.group_part)},
                {"result", matrix_to_json(n.result)}};
}

Normalization normalization_from_json(const Json& j) {
    const Json& t = get_member(j, "coord_change");
    if (!t.is_array() || t.size() != 3) throw ParseError("coord_change must be 3x3");
    QMat m(3, 3);
    for (int i = 0; i < 3; ++i) {
        if (!t[i].is_array() || t[i].size() != 3)
            throw ParseError("coord_change must be 3x3");
        for (int k = 0; k < 3; ++k) m.at(i, k) = get_scalar(t[i][k]);
    }
    return Normalization{m, group_from_json(get_member(j, "group")),
                         matrix_from_json(get_member(j, "result"))};
}

Json phi_to_json(const PhiMatrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 2; ++k) row.push_back(biform_to_json(m.entries[i][k].value()));
        entries.push_back(row);
    }
    return Json{{"entries", entries},
                {"provenance", Json{{"matrix", matrix_to_json(m.provenance_matrix)},
                                    {"vector", tangent_to_json(m.provenance_vector)}}}};
}

PhiMatrix phi_from_json(const Json& j) {
    const Json& prov = get_member(j, "provenance");
    MatrixA a = matrix_from_json(get_member(prov, "matrix"));
    TangentVector b = tangent_from_json(get_member(prov, "vector"));
    const Json& entries = get_member(j, "entries");
    if (!entries.is_array() || entries.size() != 2 || !entries[0].is_array() ||
        entries[0].size() != 2 || !entries[1].is_array() || entries[1].size() != 2)
        throw ParseError("entries must be a 2x2 array");
    return PhiMatrix{{{{DElement(biform_from_json(entries[0][0])),
                        DElement(biform_from_json(entries[0][1]))},
                       {DElement(biform_from_json(entries[1][0])),
                        DElement(biform_from_json(entries[1][1]))}}},
                     a,
                     b};
}

Json automorphism_to_json(const Automorphism& a) {
    return Json{{"alpha", a.alpha.str()}, {"beta", a.beta.str()}, {"gamma", a.gamma.str()}};
}

Automorphism automorphism_from_json(const Json& j) {
    Automorphism a{get_scalar(get_member(j, "alpha")), get_scalar(get_member(j, "beta")),
                   get_scalar(get_member(j, "gamma"))};
    if (a.alpha.is_zero()) throw ParseError("automorphism scale must be nonzero");
    return a;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace curvemoduli
