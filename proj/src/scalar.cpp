#include "curvemoduli/scalar.hpp"

#include <ostream>

namespace curvemoduli {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Scalar::Scalar(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar Scalar::from_string(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw ParseError("bad rational literal: '" + s + "'");
    Scalar r;
    r.v_ = mpq_class(mpz_class(num), mpz_class(den));
    if (sgn(r.v_.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
    r.v_.canonicalize();
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace curvemoduli
