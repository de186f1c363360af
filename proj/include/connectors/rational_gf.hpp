#pragma once

/**
 * Rational generating functions in x with q-polynomial coefficients, plus
 * the power-series and differentiation machinery used on them.
 *
 * A rational_gf is a numerator/denominator pair of bivariate polynomials,
 * kept normalized so the denominator's x^0 coefficient is the constant 1;
 * that makes the series expansion well-defined and lets coefficients be
 * extracted by the linear recurrence
 *
 *     c_n = num_n - sum_{m=1..n} den_m * c_{n-m}
 *
 * with exact arithmetic throughout.
 */

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "connectors/bigint.hpp"
#include "connectors/polynomial.hpp"

namespace connectors {

class rational_gf {
public:
    rational_gf() : num_(), den_(1) {}

    // Normalizes by the denominator's constant term, which must be the
    // constant polynomial 1 or -1; anything else has no series expansion
    // here and is rejected.
    rational_gf(bivariate_polynomial num, bivariate_polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {
        const q_polynomial& c0 = den_.coeff(0);
        if (c0 == q_polynomial(-1)) {
            num_ = -num_;
            den_ = -den_;
        } else if (!(c0 == q_polynomial(1))) {
            throw std::invalid_argument(
                "rational_gf: denominator constant term must be 1 or -1, got " + to_string(c0));
        }
    }

    const bivariate_polynomial& numerator() const { return num_; }
    const bivariate_polynomial& denominator() const { return den_; }

private:
    bivariate_polynomial num_;
    bivariate_polynomial den_;
};

// Series coefficients c_0..c_nmax of num/den over any coefficient ring.
// Requires den's constant term to be the ring's 1.
template <class Ring, class Tag>
std::vector<Ring> power_series(const polynomial<Ring, Tag>& num, const polynomial<Ring, Tag>& den,
                               std::size_t nmax) {
    if (!(den.coeff(0) == Ring(1)))
        throw std::invalid_argument("power_series: denominator constant term must be 1");
    std::vector<Ring> c(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) {
        Ring acc = num.coeff(n);
        for (std::size_t m = 1; m <= n && m < den.coefficients().size(); ++m)
            acc -= den.coeff(m) * c[n - m];
        c[n] = acc;
    }
    return c;
}

inline std::vector<q_polynomial> series_coefficients(const rational_gf& gf, std::size_t nmax) {
    return power_series(gf.numerator(), gf.denominator(), nmax);
}

// b^i  ->  x^i (q-1)^i, expanded exactly.
inline bivariate_polynomial substitute_b(const b_polynomial& p) {
    const q_polynomial q_minus_1{-1, 1};
    std::vector<q_polynomial> xc(p.coefficients().size());
    q_polynomial power(1);
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        xc[i] = power * q_polynomial(p.coefficients()[i]);
        power *= q_minus_1;
    }
    return bivariate_polynomial::from_coefficients(std::move(xc));
}

inline bivariate_polynomial to_bivariate(const x_polynomial& p) {
    std::vector<q_polynomial> xc(p.coefficients().size());
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) xc[i] = q_polynomial(p.coefficients()[i]);
    return bivariate_polynomial::from_coefficients(std::move(xc));
}

inline bivariate_polynomial derivative_q(const bivariate_polynomial& p) {
    std::vector<q_polynomial> xc(p.coefficients().size());
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) xc[i] = p.coefficients()[i].derivative();
    return bivariate_polynomial::from_coefficients(std::move(xc));
}

inline x_polynomial specialize_q1(const bivariate_polynomial& p) {
    std::vector<bigint> xc(p.coefficients().size());
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        xc[i] = p.coefficients()[i].evaluate(1);
    return x_polynomial::from_coefficients(std::move(xc));
}

// Numerator/denominator with q set to 1; the independent univariate route
// for series checks.
inline std::pair<x_polynomial, x_polynomial> specialize_q1(const rational_gf& gf) {
    return {specialize_q1(gf.numerator()), specialize_q1(gf.denominator())};
}

// d(num/den)/dq at q=1 by the quotient rule, exactly. The result is a
// rational function of x alone, returned with constant q-coefficients.
inline rational_gf derivative_q_at_1(const rational_gf& gf) {
    x_polynomial num1 = specialize_q1(gf.numerator());
    x_polynomial den1 = specialize_q1(gf.denominator());
    x_polynomial dnum1 = specialize_q1(derivative_q(gf.numerator()));
    x_polynomial dden1 = specialize_q1(derivative_q(gf.denominator()));
    return {to_bivariate(dnum1 * den1 - num1 * dden1), to_bivariate(den1 * den1)};
}

inline rational_gf operator*(const rational_gf& a, const rational_gf& b) {
    return {a.numerator() * b.numerator(), a.denominator() * b.denominator()};
}

inline rational_gf operator*(const bivariate_polynomial& p, const rational_gf& g) {
    return {p * g.numerator(), g.denominator()};
}

inline rational_gf operator+(const rational_gf& a, const rational_gf& b) {
    if (a.denominator() == b.denominator())
        return {a.numerator() + b.numerator(), a.denominator()};
    return {a.numerator() * b.denominator() + b.numerator() * a.denominator(),
            a.denominator() * b.denominator()};
}

inline rational_gf operator-(const rational_gf& a, const rational_gf& b) {
    if (a.denominator() == b.denominator())
        return {a.numerator() - b.numerator(), a.denominator()};
    return {a.numerator() * b.denominator() - b.numerator() * a.denominator(),
            a.denominator() * b.denominator()};
}

// Equality as rational functions, by cross-multiplication. Sound here
// because normalized denominators are never zero divisors.
inline bool rational_equal(const rational_gf& a, const rational_gf& b) {
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

}  // namespace connectors
