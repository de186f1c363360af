#pragma once

/**
 * The linear system behind the gk-connector generating function, over the
 * polynomial ring Z[b].
 *
 * Summing the one-step recurrence over last letters yields a k x k system
 * A * (conditional gfs) = (a, ..., a)^T with a = x * gkcon_gf and
 *
 *     A[i][j] = delta_ij - b * [i + j >= k + 1]      (1-based indices)
 *
 * Determinants are computed by fraction-free (Bareiss) elimination, whose
 * interior divisions are exact over an integral domain; a naive cofactor
 * expansion is kept as a second route for small sizes. Cramer numerators
 * carry the right-hand side's scalar a factored out: each entry is the
 * determinant of A with one column replaced by all ones.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "connectors/closed_forms.hpp"
#include "connectors/genfunc.hpp"
#include "connectors/polynomial.hpp"
#include "connectors/rational_gf.hpp"

namespace connectors {

class poly_matrix {
public:
    explicit poly_matrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw std::invalid_argument("poly_matrix: size must be at least 1");
    }

    int size() const { return n_; }

    b_polynomial& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const b_polynomial& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    bool operator==(const poly_matrix&) const = default;

private:
    int n_;
    std::vector<b_polynomial> entries_;
};

inline poly_matrix build_system_matrix(int k) {
    poly_matrix a(k);
    const b_polynomial minus_b{0, -1};
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            b_polynomial entry = i + j >= k + 1 ? minus_b : b_polynomial();
            if (i == j) entry += b_polynomial(1);
            a.at(i - 1, j - 1) = std::move(entry);
        }
    return a;
}

// Fraction-free elimination; the matrix argument is consumed as workspace.
inline b_polynomial determinant(poly_matrix m) {
    const int n = m.size();
    b_polynomial prev(1);
    int sign = 1;
    for (int p = 0; p + 1 < n; ++p) {
        if (m.at(p, p).is_zero()) {
            int r = p + 1;
            while (r < n && m.at(r, p).is_zero()) ++r;
            if (r == n) return {};
            for (int j = p; j < n; ++j) std::swap(m.at(p, j), m.at(r, j));
            sign = -sign;
        }
        for (int i = p + 1; i < n; ++i) {
            for (int j = p + 1; j < n; ++j)
                m.at(i, j) = exact_quotient(m.at(p, p) * m.at(i, j) - m.at(i, p) * m.at(p, j), prev);
            m.at(i, p) = {};
        }
        prev = m.at(p, p);
    }
    return sign < 0 ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

// First-row cofactor expansion; exponential, for cross-checks on small k.
inline b_polynomial determinant_cofactor(const poly_matrix& m) {
    const int n = m.size();
    if (n == 1) return m.at(0, 0);
    b_polynomial det;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        poly_matrix minor(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        b_polynomial term = m.at(0, j) * determinant_cofactor(minor);
        det += j % 2 ? -term : term;
    }
    return det;
}

inline poly_matrix replace_column_with_ones(poly_matrix m, int col) {
    for (int i = 0; i < m.size(); ++i) m.at(i, col) = b_polynomial(1);
    return m;
}

// Entry l-1 is det of A(k) with column l replaced by all ones (the shared
// right-hand-side scalar divided out by column linearity).
inline std::vector<b_polynomial> cramer_numerators(int k) {
    const poly_matrix a = build_system_matrix(k);
    std::vector<b_polynomial> out;
    out.reserve(k);
    for (int col = 0; col < k; ++col) out.push_back(determinant(replace_column_with_ones(a, col)));
    return out;
}

// Matches cramer numerators against the closed-form terms as multisets.
// Returns, for each column l (0-based), the term index j with
// numerator[l] == t_j, smallest unused j first; nullopt on any mismatch.
inline std::optional<std::vector<int>> cramer_term_permutation(int k) {
    const std::vector<b_polynomial> nums = cramer_numerators(k);
    const std::vector<b_polynomial> terms = denominator_terms(k);
    std::vector<bool> used(terms.size(), false);
    std::vector<int> perm(nums.size(), -1);
    for (std::size_t l = 0; l < nums.size(); ++l) {
        bool found = false;
        for (std::size_t j = 0; j < terms.size(); ++j) {
            if (!used[j] && terms[j] == nums[l]) {
                used[j] = true;
                perm[l] = static_cast<int>(j);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return perm;
}

// Conditional generating functions by last letter:
//   gf(.|l) = x * gkcon_gf(k) * numerator_l(b) / det(b)   under b = x(q-1).
inline std::vector<rational_gf> conditional_gfs(int k) {
    const rational_gf gc = gkcon_gf(k);
    const bivariate_polynomial det = substitute_b(determinant(build_system_matrix(k)));
    const bivariate_polynomial x = bivariate_polynomial::monomial(1, q_polynomial(1));
    std::vector<rational_gf> out;
    out.reserve(k);
    for (const b_polynomial& num : cramer_numerators(k))
        out.emplace_back(x * gc.numerator() * substitute_b(num), gc.denominator() * det);
    return out;
}

}  // namespace connectors
