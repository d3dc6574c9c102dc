#ifndef CURVEMODULI_FORM_HPP
#define CURVEMODULI_FORM_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "curvemoduli/scalar.hpp"

namespace curvemoduli {

/// Exponent triple (i0, i1, i2) for monomials in x0, x1, x2.
using Exp3 = std::array<int, 3>;

/// All exponent triples of the given total degree, in descending
/// lexicographic order with x0 > x1 > x2 (the graded-lex order restricted
/// to one degree). x0^k comes first.
std::vector<Exp3> monomials_of_degree(int degree);

/// Number of monomials of the given degree in three variables.
int monomial_count(int degree);

/// Sparse homogeneous form in x0, x1, x2 over exact rationals. A form
/// carries its nominal degree even when zero, so degree bookkeeping
/// survives vanishing coefficients. Terms are kept in descending
/// graded-lex order; no zero coefficients are stored.
class Form {
public:
    using TermMap = std::map<Exp3, Scalar, std::greater<Exp3>>;

    /// The zero form of the given degree.
    explicit Form(int degree);

    static Form variable(int axis);
    static Form monomial(const Exp3& e, const Scalar& c);
    static Form constant(const Scalar& c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Scalar coeff(const Exp3& e) const;

    /// Accumulates c onto the coefficient of e; erases the term if it
    /// cancels to zero. Throws DegreeMismatch unless e sums to degree().
    void add_term(const Exp3& e, const Scalar& c);

    /// Leading (greatest graded-lex) term. Throws DomainError on zero.
    std::pair<Exp3, Scalar> leading() const;

    Scalar eval(const std::array<Scalar, 3>& p) const;
    Form partial(int axis) const;

    /// Substitutes repl[i] for x_i. All repl must share one degree r;
    /// the result is homogeneous of degree r * degree().
    Form substitute(const std::array<Form, 3>& repl) const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(const Scalar& c, const Form& f);

    friend bool operator==(const Form& a, const Form& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    /// Human-readable rendering, terms in graded-lex order, e.g.
    /// "x1*x2^2 - x0*x1*x2". Variables named var[0..2].
    std::string str(const char* var = "x") const;

private:
    int degree_;
    TermMap terms_;
};

Form pow(const Form& f, int n);

std::string monomial_str(const Exp3& e, const char* var);

} // namespace curvemoduli

#endif
