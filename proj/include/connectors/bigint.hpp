#pragma once

#include <cstddef>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace connectors {

// Exact arbitrary-precision integer. Totals such as (k-1)(n-1)k^(n-2)
// leave the 64-bit range for modest n, so every count in this library
// is a bigint.
using bigint = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline bigint int_pow(bigint base, std::size_t exp) {
    bigint r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        exp >>= 1u;
        if (exp) base *= base;
    }
    return r;
}

// C(n, r) by the multiplicative formula; every intermediate division is exact.
inline bigint binomial(long n, long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (n - r < r) r = n - r;
    bigint acc = 1;
    for (long i = 1; i <= r; ++i) {
        acc *= n - r + i;
        acc /= i;
    }
    return acc;
}

// Quotient a/b when b exactly divides a; anything else is a caller bug.
inline bigint exact_quotient(const bigint& a, const bigint& b) {
    if (b == 0) throw std::logic_error("exact_quotient: division by zero");
    bigint q = a / b;
    if (q * b != a) throw std::logic_error("exact_quotient: inexact integer division");
    return q;
}

}  // namespace connectors
