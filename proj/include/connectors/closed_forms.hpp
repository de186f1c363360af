#pragma once

// Closed forms in b for the gk-connector linear system: the system
// determinant and the per-column terms whose sum forms the generating
// function's denominator. The term formula depends on the parity of k.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "connectors/bigint.hpp"
#include "connectors/polynomial.hpp"

namespace connectors {

inline int parity_sign(long v) { return v % 2 ? -1 : 1; }

// det A(k) = sum_{i=0..k} (-1)^floor((i+1)/2) C(floor((k-i)/2)+i, i) b^i
inline b_polynomial det_closed_form(int k) {
    if (k < 1) throw std::invalid_argument("det_closed_form: k must be at least 1");
    std::vector<bigint> c(static_cast<std::size_t>(k) + 1);
    for (long i = 0; i <= k; ++i)
        c[i] = parity_sign((i + 1) / 2) * binomial((k - i) / 2 + i, i);
    return b_polynomial::from_coefficients(std::move(c));
}

// Terms t_0..t_{k-1}:
//   even k: t_j = 1 + (-1)^floor(j/2)     sum_{i=1..j} (-1)^floor((j-i)/2)   C(floor((j-i)/2)+i, i) b^i
//   odd k:  t_j = 1 + (-1)^floor((j+1)/2) sum_{i=1..j} (-1)^floor((j-i+1)/2) C(floor((j-i)/2)+i, i) b^i
inline std::vector<b_polynomial> denominator_terms(int k) {
    if (k < 1) throw std::invalid_argument("denominator_terms: k must be at least 1");
    const bool even = k % 2 == 0;
    std::vector<b_polynomial> terms;
    terms.reserve(k);
    for (long j = 0; j < k; ++j) {
        std::vector<bigint> c(static_cast<std::size_t>(j) + 1);
        c[0] = 1;
        int outer = even ? parity_sign(j / 2) : parity_sign((j + 1) / 2);
        for (long i = 1; i <= j; ++i) {
            int inner = even ? parity_sign((j - i) / 2) : parity_sign((j - i + 1) / 2);
            c[i] = outer * inner * binomial((j - i) / 2 + i, i);
        }
        terms.push_back(b_polynomial::from_coefficients(std::move(c)));
    }
    return terms;
}

inline b_polynomial denominator_term_sum(int k) {
    b_polynomial sum;
    for (const b_polynomial& t : denominator_terms(k)) sum += t;
    return sum;
}

}  // namespace connectors
