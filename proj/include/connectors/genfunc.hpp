#pragma once

/**
 * Closed-form generating functions for the connector statistics.
 *
 * kcon_gf(k) is
 *
 *     1 / (1 - x - (k-1) (x + x^2(q-1)) / (1 - x^2(q-1)^2))
 *
 * with the inner fraction cleared by multiplying numerator and denominator
 * through by 1 - x^2(q-1)^2, so series extraction never divides:
 *
 *     num = 1 - x^2(q-1)^2
 *     den = (1-x)(1 - x^2(q-1)^2) - (k-1)(x + x^2(q-1))
 *
 * gkcon_gf(k) is det(b) / (det(b) - x * termsum(b)) under b = x(q-1), with
 * det and termsum from closed_forms.hpp; the parity of k is dispatched there.
 *
 * kcon_total_gf(k) = (k-1) x^2 / (1-kx)^2 generates the total number of
 * k-connectors over all words of length n; it equals the q-derivative of
 * kcon_gf at q=1.
 */

#include <stdexcept>

#include "connectors/closed_forms.hpp"
#include "connectors/polynomial.hpp"
#include "connectors/rational_gf.hpp"

namespace connectors {

inline rational_gf kcon_gf(int k) {
    if (k < 1) throw std::invalid_argument("kcon_gf: k must be at least 1");
    const q_polynomial one(1), q_minus_1{-1, 1};
    const bivariate_polynomial x = bivariate_polynomial::monomial(1, one);
    const bivariate_polynomial x2 = bivariate_polynomial::monomial(2, one);

    bivariate_polynomial num = bivariate_polynomial(one) - x2 * bivariate_polynomial(q_minus_1 * q_minus_1);
    bivariate_polynomial den = (bivariate_polynomial(one) - x) * num -
                               bivariate_polynomial(q_polynomial(k - 1)) *
                                   (x + x2 * bivariate_polynomial(q_minus_1));
    return {num, den};
}

inline rational_gf kcon_total_gf(int k) {
    if (k < 1) throw std::invalid_argument("kcon_total_gf: k must be at least 1");
    bivariate_polynomial num = bivariate_polynomial::monomial(2, q_polynomial(k - 1));
    bivariate_polynomial one_minus_kx{q_polynomial(1), q_polynomial(-k)};
    return {num, one_minus_kx * one_minus_kx};
}

inline rational_gf gkcon_gf(int k) {
    if (k < 1) throw std::invalid_argument("gkcon_gf: k must be at least 1");
    bivariate_polynomial num = substitute_b(det_closed_form(k));
    bivariate_polynomial den =
        num - bivariate_polynomial::monomial(1, q_polynomial(1)) * substitute_b(denominator_term_sum(k));
    return {num, den};
}

}  // namespace connectors
