#ifndef CURVEMODULI_TESTS_SUPPORT_HPP
#define CURVEMODULI_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "curvemoduli/form.hpp"

namespace testsupport {

using curvemoduli::Exp3;
using curvemoduli::Form;
using curvemoduli::Scalar;

inline Form form_of(int degree, std::initializer_list<std::pair<Exp3, long>> terms) {
    Form f(degree);
    for (const auto& [e, c] : terms) f.add_term(e, Scalar(c));
    return f;
}

/// Multiplication oracle independent of Form's convolution: plain map
/// accumulation with zero pruning.
inline std::map<Exp3, Scalar> naive_product(const Form& a, const Form& b) {
    std::map<Exp3, Scalar> out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            Scalar next = out.count(e) ? out[e] + ca * cb : ca * cb;
            if (next.is_zero())
                out.erase(e);
            else
                out[e] = next;
        }
    return out;
}

inline std::map<Exp3, Scalar> term_map(const Form& f) {
    std::map<Exp3, Scalar> out;
    for (const auto& [e, c] : f.terms()) out[e] = c;
    return out;
}

/// Dense univariate polynomial in a formal parameter t, for first-order
/// perturbation oracles.
struct UniPoly {
    std::vector<Scalar> c;

    UniPoly() = default;
    explicit UniPoly(const Scalar& c0) : c{c0} {}
    UniPoly(const Scalar& c0, const Scalar& c1) : c{c0, c1} {}

    Scalar coeff(size_t k) const { return k < c.size() ? c[k] : Scalar(0); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly out;
        out.c.resize(std::max(a.c.size(), b.c.size()), Scalar(0));
        for (size_t k = 0; k < out.c.size(); ++k) out.c[k] = a.coeff(k) + b.coeff(k);
        return out;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly out;
        out.c.resize(std::max(a.c.size(), b.c.size()), Scalar(0));
        for (size_t k = 0; k < out.c.size(); ++k) out.c[k] = a.coeff(k) - b.coeff(k);
        return out;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly out;
        if (a.c.empty() || b.c.empty()) return out;
        out.c.resize(a.c.size() + b.c.size() - 1, Scalar(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
        return out;
    }
};

inline UniPoly unipow(const UniPoly& p, int n) {
    UniPoly out(Scalar(1));
    for (int k = 0; k < n; ++k) out = out * p;
    return out;
}

/// f + t*bf evaluated at a vector of UniPoly coordinates.
inline UniPoly eval_perturbed(const Form& f, const Form& bf,
                              const std::array<UniPoly, 3>& at) {
    std::map<Exp3, UniPoly, std::greater<Exp3>> coeffs;
    for (const auto& [e, c] : f.terms()) coeffs[e] = coeffs[e] + UniPoly(c);
    for (const auto& [e, c] : bf.terms()) coeffs[e] = coeffs[e] + UniPoly(Scalar(0), c);
    UniPoly out;
    for (const auto& [e, p] : coeffs)
        out = out + p * unipow(at[0], e[0]) * unipow(at[1], e[1]) * unipow(at[2], e[2]);
    return out;
}

} // namespace testsupport

#endif
