#include "curvemoduli/form.hpp"

#include <sstream>

namespace curvemoduli {

std::vector<Exp3> monomials_of_degree(int degree) {
    std::vector<Exp3> out;
    if (degree < 0) return out;
    for (int i0 = degree; i0 >= 0; --i0)
        for (int i1 = degree - i0; i1 >= 0; --i1)
            out.push_back({i0, i1, degree - i0 - i1});
    return out;
}

int monomial_count(int degree) {
    return degree < 0 ? 0 : (degree + 2) * (degree + 1) / 2;
}

Form::Form(int degree) : degree_(degree) {
    if (degree < 0) throw DomainError("negative form degree");
}

Form Form::variable(int axis) {
    if (axis < 0 || axis > 2) throw DomainError("variable axis out of range");
    Exp3 e{0, 0, 0};
    e[axis] = 1;
    return monomial(e, Scalar(1));
}

Form Form::monomial(const Exp3& e, const Scalar& c) {
    Form f(e[0] + e[1] + e[2]);
    f.add_term(e, c);
    return f;
}

Form Form::constant(const Scalar& c) {
    Form f(0);
    f.add_term({0, 0, 0}, c);
    return f;
}

Scalar Form::coeff(const Exp3& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::add_term(const Exp3& e, const Scalar& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
        throw DegreeMismatch("term " + monomial_str(e, "x") + " does not have degree " +
                             std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::pair<Exp3, Scalar> Form::leading() const {
    if (terms_.empty()) throw DomainError("leading term of the zero form");
    return *terms_.begin();
}

Scalar Form::eval(const std::array<Scalar, 3>& p) const {
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int axis = 0; axis < 3; ++axis)
            for (int k = 0; k < e[axis]; ++k) t *= p[axis];
        acc += t;
    }
    return acc;
}

Form Form::partial(int axis) const {
    if (axis < 0 || axis > 2) throw DomainError("partial axis out of range");
    Form out(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        if (e[axis] == 0) continue;
        Exp3 e2 = e;
        e2[axis] -= 1;
        out.add_term(e2, Scalar(e[axis]) * c);
    }
    return out;
}

Form Form::substitute(const std::array<Form, 3>& repl) const {
    const int r = repl[0].degree();
    if (repl[1].degree() != r || repl[2].degree() != r)
        throw DegreeMismatch("substitution forms must share one degree");
    // powers[axis][k] = repl[axis]^k, built on demand
    std::array<std::vector<Form>, 3> powers;
    for (int axis = 0; axis < 3; ++axis) powers[axis].push_back(Form::constant(Scalar(1)));
    auto power = [&](int axis, int k) -> const Form& {
        while ((int)powers[axis].size() <= k)
            powers[axis].push_back(powers[axis].back() * repl[axis]);
        return powers[axis][k];
    };
    Form out(degree_ * r);
    for (const auto& [e, c] : terms_) {
        Form t = c * power(0, e[0]);
        t = t * power(1, e[1]);
        t = t * power(2, e[2]);
        out += t;
    }
    return out;
}

Form Form::operator-() const {
    Form out(degree_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Form& Form::operator+=(const Form& o) {
    if (degree_ != o.degree_)
        throw DegreeMismatch("adding forms of degrees " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (degree_ != o.degree_)
        throw DegreeMismatch("subtracting forms of degrees " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Form operator*(const Form& a, const Form& b) {
    Form out(a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

Form operator*(const Scalar& c, const Form& f) {
    Form out(f.degree_);
    if (c.is_zero()) return out;
    for (const auto& [e, fc] : f.terms_) out.terms_.emplace(e, c * fc);
    return out;
}

Form pow(const Form& f, int n) {
    if (n < 0) throw DomainError("negative form power");
    Form out = Form::constant(Scalar(1));
    for (int k = 0; k < n; ++k) out = out * f;
    return out;
}

std::string monomial_str(const Exp3& e, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (int axis = 0; axis < 3; ++axis) {
        if (e[axis] == 0) continue;
        if (!first) os << "*";
        os << var << axis;
        if (e[axis] > 1) os << "^" << e[axis];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Form::str(const char* var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Scalar mag = neg ? -c : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        const bool unit = mag == Scalar(1);
        const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
        if (!unit || constant) os << mag.str();
        if (!constant) {
            if (!unit) os << "*";
            os << monomial_str(e, var);
        }
        first = false;
    }
    return os.str();
}

} // namespace curvemoduli
