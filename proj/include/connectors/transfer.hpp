#pragma once

/**
 * Transfer-matrix dynamic program for connector-statistic distributions.
 *
 * Both statistics look only at adjacent pairs, so distribution polynomials
 * indexed by the last letter carry all the state one length step needs.
 * Appending letter i to a word ending in j multiplies its contribution by q
 * exactly when the pair (j, i) satisfies the statistic. Cost is O(n k^2)
 * polynomial operations, with no enumeration cap.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "connectors/polynomial.hpp"
#include "connectors/words.hpp"

namespace connectors {

struct conditional_distribution {
    int k = 1;
    std::size_t length = 1;
    // entry i-1 = sum of q^stat over words of the current length ending in i
    std::vector<q_polynomial> by_last_letter;
};

inline conditional_distribution initial_conditional(int k) {
    if (k < 1) throw std::invalid_argument("initial_conditional: k must be at least 1");
    return {k, 1, std::vector<q_polynomial>(k, q_polynomial(1))};
}

inline conditional_distribution transfer_step(const conditional_distribution& d,
                                              const connector_stat& s) {
    const q_polynomial q = q_polynomial::monomial(1);
    conditional_distribution next{d.k, d.length + 1, std::vector<q_polynomial>(d.k)};
    for (int i = 1; i <= d.k; ++i) {
        q_polynomial acc;
        for (int j = 1; j <= d.k; ++j) {
            const q_polynomial& prev = d.by_last_letter[j - 1];
            acc += s.matches(j, i) ? q * prev : prev;
        }
        next.by_last_letter[i - 1] = acc;
    }
    return next;
}

inline q_polynomial transfer_distribution(std::size_t n, int k, const connector_stat& s) {
    if (k < 1) throw std::invalid_argument("transfer_distribution: k must be at least 1");
    if (n == 0) return q_polynomial(1);
    conditional_distribution d = initial_conditional(k);
    for (std::size_t step = 1; step < n; ++step) d = transfer_step(d, s);
    q_polynomial total;
    for (const q_polynomial& entry : d.by_last_letter) total += entry;
    return total;
}

}  // namespace connectors
