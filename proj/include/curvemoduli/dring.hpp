#ifndef CURVEMODULI_DRING_HPP
#define CURVEMODULI_DRING_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "curvemoduli/form.hpp"

namespace curvemoduli {

/// Exponent six-tuple (i0,i1,i2 | j0,j1,j2): x-part then u-part.
using Exp6 = std::array<int, 6>;

/// Sparse bihomogeneous form in (x0,x1,x2; u0,u1,u2): x-exponents sum to
/// bidegree().first in every term, u-exponents to bidegree().second.
class BiForm {
public:
    using TermMap = std::map<Exp6, Scalar, std::greater<Exp6>>;

    BiForm(int xdeg, int udeg);

    /// Embeds a form in x as bidegree (deg, 0); likewise for u.
    static BiForm x_embed(const Form& f);
    static BiForm u_embed(const Form& f);
    static BiForm monomial(const Exp6& e, const Scalar& c);

    std::pair<int, int> bidegree() const { return {xdeg_, udeg_}; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Scalar coeff(const Exp6& e) const;
    void add_term(const Exp6& e, const Scalar& c);

    /// Substitutes repl[j] (a linear form read in the u variables) for u_j.
    BiForm substitute_u(const std::array<Form, 3>& repl) const;

    /// Restriction to D0: u = (0, x1, x2). Result is an x-form of degree a+b.
    Form restrict_d0() const;

    /// Restriction to D1: x = (1, 0, 0). Result is a form of degree b,
    /// read in the u variables.
    Form restrict_d1() const;

    BiForm operator-() const;
    BiForm& operator+=(const BiForm& o);
    BiForm& operator-=(const BiForm& o);
    friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
    friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
    friend BiForm operator*(const BiForm& a, const BiForm& b);
    friend BiForm operator*(const Scalar& c, const BiForm& f);

    friend bool operator==(const BiForm& a, const BiForm& b) {
        return a.xdeg_ == b.xdeg_ && a.udeg_ == b.udeg_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiForm& a, const BiForm& b) { return !(a == b); }

    std::string str() const;

private:
    int xdeg_, udeg_;
    TermMap terms_;
};

/// A function on D(p): a BiForm in canonical normal form modulo the
/// rewrite ideal (u0*x1, u0*x2, u1*x2 - u2*x1). Normal-form terms never
/// pair u0 with x1 or x2 and never contain a u2*x1 factor (rewritten to
/// u1*x2).
class DElement {
public:
    explicit DElement(const BiForm& raw);

    const BiForm& value() const { return value_; }
    std::pair<int, int> bidegree() const { return value_.bidegree(); }
    bool is_zero() const { return value_.is_zero(); }

    DElement operator-() const { return DElement(-value_); }
    friend DElement operator+(const DElement& a, const DElement& b) {
        return DElement(a.value_ + b.value_);
    }
    friend DElement operator-(const DElement& a, const DElement& b) {
        return DElement(a.value_ - b.value_);
    }
    friend DElement operator*(const DElement& a, const DElement& b) {
        return DElement(a.value_ * b.value_);
    }

    friend bool operator==(const DElement& a, const DElement& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const DElement& a, const DElement& b) { return !(a == b); }

    std::string str() const { return value_.str(); }

private:
    BiForm value_;
};

/// Canonical normal form under the D(p) rewrite rules. Terms containing
/// u0*x1 or u0*x2 are deleted; every u2*x1 factor becomes u1*x2.
DElement dring_reduce(const BiForm& b);

} // namespace curvemoduli

#endif
