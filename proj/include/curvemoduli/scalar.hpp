#ifndef CURVEMODULI_SCALAR_HPP
#define CURVEMODULI_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "curvemoduli/errors.hpp"

namespace curvemoduli {

/// Exact rational scalar. Always stored reduced with positive denominator;
/// zero is 0/1. Wraps GMP's mpq_class.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(long num, long den);

    /// Parses "num" or "num/den" in base 10. Throws ParseError on anything else.
    static Scalar from_string(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    /// Canonical decimal string: "3", "-1/2".
    std::string str() const { return v_.get_str(); }

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    Scalar operator-() const { Scalar r; r.v_ = -v_; return r; }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace curvemoduli

#endif
