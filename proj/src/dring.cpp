#include "curvemoduli/dring.hpp"

#include <algorithm>
#include <sstream>

#include "curvemoduli/errors.hpp"

namespace curvemoduli {

BiForm::BiForm(int xdeg, int udeg) : xdeg_(xdeg), udeg_(udeg) {
    if (xdeg < 0 || udeg < 0) throw DomainError("negative bidegree");
}

BiForm BiForm::x_embed(const Form& f) {
    BiForm out(f.degree(), 0);
    for (const auto& [e, c] : f.terms())
        out.terms_.emplace(Exp6{e[0], e[1], e[2], 0, 0, 0}, c);
    return out;
}

BiForm BiForm::u_embed(const Form& f) {
    BiForm out(0, f.degree());
    for (const auto& [e, c] : f.terms())
        out.terms_.emplace(Exp6{0, 0, 0, e[0], e[1], e[2]}, c);
    return out;
}

BiForm BiForm::monomial(const Exp6& e, const Scalar& c) {
    BiForm out(e[0] + e[1] + e[2], e[3] + e[4] + e[5]);
    out.add_term(e, c);
    return out;
}

Scalar BiForm::coeff(const Exp6& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

void BiForm::add_term(const Exp6& e, const Scalar& c) {
    for (int v : e)
        if (v < 0) throw DegreeMismatch("negative exponent");
    if (e[0] + e[1] + e[2] != xdeg_ || e[3] + e[4] + e[5] != udeg_)
        throw DegreeMismatch("term bidegree mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiForm BiForm::substitute_u(const std::array<Form, 3>& repl) const {
    for (const auto& r : repl)
        if (r.degree() != 1) throw DegreeMismatch("u substitution must be linear");
    BiForm out(xdeg_, udeg_);
    for (const auto& [e, c] : terms_) {
        BiForm acc = BiForm::monomial(Exp6{e[0], e[1], e[2], 0, 0, 0}, c);
        for (int j = 0; j < 3; ++j) {
            BiForm lin(0, 1);
            for (const auto& [le, lc] : repl[j].terms())
                lin.add_term(Exp6{0, 0, 0, le[0], le[1], le[2]}, lc);
            for (int k = 0; k < e[3 + j]; ++k) acc = acc * lin;
        }
        out += acc;
    }
    return out;
}

Form BiForm::restrict_d0() const {
    Form out(xdeg_ + udeg_);
    for (const auto& [e, c] : terms_) {
        if (e[3] > 0) continue;
        out.add_term(Exp3{e[0], e[1] + e[4], e[2] + e[5]}, c);
    }
    return out;
}

Form BiForm::restrict_d1() const {
    Form out(udeg_);
    for (const auto& [e, c] : terms_) {
        if (e[1] > 0 || e[2] > 0) continue;
        out.add_term(Exp3{e[3], e[4], e[5]}, c);
    }
    return out;
}

BiForm BiForm::operator-() const {
    BiForm out(xdeg_, udeg_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

BiForm& BiForm::operator+=(const BiForm& o) {
    if (xdeg_ != o.xdeg_ || udeg_ != o.udeg_)
        throw DegreeMismatch("bidegree mismatch in sum");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) {
    if (xdeg_ != o.xdeg_ || udeg_ != o.udeg_)
        throw DegreeMismatch("bidegree mismatch in difference");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiForm operator*(const BiForm& a, const BiForm& b) {
    BiForm out(a.xdeg_ + b.xdeg_, a.udeg_ + b.udeg_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exp6 e;
            for (int i = 0; i < 6; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

BiForm operator*(const Scalar& c, const BiForm& f) {
    BiForm out(f.xdeg_, f.udeg_);
    if (c.is_zero()) return out;
    for (const auto& [e, fc] : f.terms_) out.terms_.emplace(e, c * fc);
    return out;
}

std::string BiForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Scalar a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string xm = monomial_str(Exp3{e[0], e[1], e[2]}, "x");
        std::string um = monomial_str(Exp3{e[3], e[4], e[5]}, "u");
        std::string mono;
        if (xm == "1" && um == "1") mono = "";
        else if (xm == "1") mono = um;
        else if (um == "1") mono = xm;
        else mono = xm + "*" + um;
        if (mono.empty()) os << a.str();
        else if (a == Scalar(1)) os << mono;
        else os << a.str() << "*" << mono;
    }
    return os.str();
}

DElement dring_reduce(const BiForm& b) {
    auto [xd, ud] = b.bidegree();
    BiForm out(xd, ud);
    for (const auto& [e, c] : b.terms()) {
        // u0 only lives where x1 = x2 = 0.
        if (e[3] > 0 && (e[1] > 0 || e[2] > 0)) continue;
        // Trade u2*x1 pairs for u1*x2.
        int k = std::min(e[1], e[5]);
        out.add_term(Exp6{e[0], e[1] - k, e[2] + k, e[3], e[4] + k, e[5] - k}, c);
    }
    return DElement(out);
}

namespace {
bool is_normal_form(const BiForm& b) {
    for (const auto& [e, c] : b.terms()) {
        if (e[3] > 0 && (e[1] > 0 || e[2] > 0)) return false;
        if (e[1] > 0 && e[5] > 0) return false;
    }
    return true;
}
} // namespace

DElement::DElement(const BiForm& raw) : value_(raw.bidegree().first, raw.bidegree().second) {
    if (is_normal_form(raw)) {
        value_ = raw;
    } else {
        value_ = dring_reduce(raw).value();
    }
}

} // namespace curvemoduli
