#pragma once

// Closed-form totals of the connector statistics over all words of length n,
// and the alternating floor sums their derivations rest on. Lengths 0 and 1
// have no adjacent pairs; every total is 0 there.

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "connectors/bigint.hpp"

namespace connectors {

// (k-1)(n-1)k^(n-2)
inline bigint kcon_total(std::size_t n, int k) {
    if (k < 1) throw std::invalid_argument("kcon_total: k must be at least 1");
    if (n <= 1) return 0;
    return bigint(k - 1) * bigint(n - 1) * int_pow(bigint(k), n - 2);
}

// even k: (k+1)(n-1)k^(n-1) / 2   (the product is always even)
// odd k:  ((k+1)/2)(n-1)k^(n-1)
inline bigint gkcon_total(std::size_t n, int k) {
    if (k < 1) throw std::invalid_argument("gkcon_total: k must be at least 1");
    if (n <= 1) return 0;
    if (k % 2 == 0) {
        bigint product = bigint(k + 1) * bigint(n - 1) * int_pow(bigint(k), n - 1);
        if (product % 2 != 0) throw std::logic_error("gkcon_total: even-k product not divisible by 2");
        return product / 2;
    }
    return bigint((k + 1) / 2) * bigint(n - 1) * int_pow(bigint(k), n - 1);
}

// ( sum_{j=1..k-1} (-1)^(j-1) floor((j+1)/2),  sum_{j=1..k-1} (-1)^j floor((j+1)/2) )
// The first equals floor(k/2) for even k; the second equals 0 for odd k.
inline std::pair<long long, long long> floor_sum_identity(int k) {
    if (k < 1) throw std::invalid_argument("floor_sum_identity: k must be at least 1");
    long long alt = 0;
    for (int j = 1; j <= k - 1; ++j) {
        long long term = (j + 1) / 2;
        alt += j % 2 ? term : -term;
    }
    return {alt, -alt};
}

}  // namespace connectors
