#pragma once

/**
 * Words over the alphabet {1,...,k} and the two adjacent-pair statistics:
 *
 *   kcon(w)  = #{ i : w[i] + w[i+1] == k }
 *   gkcon(w) = #{ i : w[i] + w[i+1] >  k }
 *
 * Both are instances of connector_stat, a (predicate, threshold) pair; the
 * threshold is independent of the alphabet size, with threshold == k giving
 * the two statistics above.
 *
 * Exhaustive enumeration over [k]^n provides the brute-force distribution
 * oracle the rest of the library is checked against.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "connectors/bigint.hpp"
#include "connectors/polynomial.hpp"

namespace connectors {

struct word {
    std::vector<int> letters;  // each in 1..k
    int k = 1;
};

enum class stat_kind { sum_equals, sum_greater };

struct connector_stat {
    stat_kind kind = stat_kind::sum_equals;
    int threshold = 1;

    static connector_stat kcon(int k) { return {stat_kind::sum_equals, k}; }
    static connector_stat gkcon(int k) { return {stat_kind::sum_greater, k}; }

    bool matches(int a, int b) const {
        int s = a + b;
        return kind == stat_kind::sum_equals ? s == threshold : s > threshold;
    }
};

inline void validate(const word& w) {
    if (w.k < 1) throw std::invalid_argument("word: alphabet size must be at least 1");
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        if (w.letters[i] < 1 || w.letters[i] > w.k)
            throw std::invalid_argument("word: letter at position " + std::to_string(i + 1) +
                                        " is outside 1.." + std::to_string(w.k));
}

inline std::size_t stat_count(const word& w, const connector_stat& s) {
    validate(w);
    if (s.threshold < 1) throw std::invalid_argument("connector_stat: threshold must be at least 1");
    std::size_t count = 0;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (s.matches(w.letters[i], w.letters[i + 1])) ++count;
    return count;
}

inline word reversed(word w) {
    std::vector<int> rev(w.letters.rbegin(), w.letters.rend());
    w.letters = std::move(rev);
    return w;
}

// Cap on k^n for exhaustive enumeration, overridable per call (the CLI also
// honours the CONNECTOR_ENUM_CAP environment variable).
constexpr std::uint64_t default_enumeration_cap = 100'000'000;

class enumeration_cap_error : public std::runtime_error {
public:
    enumeration_cap_error(std::size_t n, int k, std::uint64_t cap)
        : std::runtime_error("enumeration too large: " + std::to_string(k) + "^" +
                             std::to_string(n) + " words exceed the cap of " +
                             std::to_string(cap)) {}
};

inline bigint word_count(std::size_t n, int k) { return int_pow(bigint(k), n); }

// Visits all k^n words of length n in lexicographic order. The visitor
// receives the letter vector of the current word; it must not hold on to it.
template <class Visitor>
void for_each_word(std::size_t n, int k, Visitor&& visit,
                   std::uint64_t cap = default_enumeration_cap) {
    if (k < 1) throw std::invalid_argument("for_each_word: alphabet size must be at least 1");
    if (word_count(n, k) > bigint(cap)) throw enumeration_cap_error(n, k, cap);
    std::vector<int> letters(n, 1);
    for (;;) {
        visit(static_cast<const std::vector<int>&>(letters));
        std::size_t i = n;
        while (i > 0 && letters[i - 1] == k) letters[--i] = 1;
        if (i == 0) break;
        ++letters[i - 1];
    }
}

inline std::vector<word> enumerate_words(std::size_t n, int k,
                                         std::uint64_t cap = default_enumeration_cap) {
    std::vector<word> out;
    for_each_word(n, k, [&](const std::vector<int>& letters) { out.push_back({letters, k}); }, cap);
    return out;
}

// Sum over all words in [k]^n of q^(statistic value), by exhaustive count.
inline q_polynomial brute_distribution(std::size_t n, int k, const connector_stat& s,
                                       std::uint64_t cap = default_enumeration_cap) {
    // Statistic values never exceed n-1, and per-value counts fit 64 bits
    // as long as k^n does, which the cap enforces.
    std::vector<std::uint64_t> counts(n > 0 ? n : 1, 0);
    for_each_word(
        n, k,
        [&](const std::vector<int>& letters) {
            std::size_t v = 0;
            for (std::size_t i = 0; i + 1 < letters.size(); ++i)
                if (s.matches(letters[i], letters[i + 1])) ++v;
            ++counts[v];
        },
        cap);
    std::vector<bigint> coeffs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = counts[i];
    return q_polynomial::from_coefficients(std::move(coeffs));
}

}  // namespace connectors
