#pragma once

/**
 * Dense polynomials over an arbitrary commutative ring.
 *
 * One template covers every coefficient ring this library needs:
 *
 *   q_polynomial         = polynomial<bigint, q_tag>       distribution polynomials
 *   b_polynomial         = polynomial<bigint, b_tag>       matrix entries, b = x(q-1)
 *   x_polynomial         = polynomial<bigint, x_tag>       one-variable series work
 *   bivariate_polynomial = polynomial<q_polynomial, x_tag> powers of x, q-poly coefficients
 *
 * Coefficients are stored ascending by power. Canonical form: no trailing
 * zero coefficients, and the zero polynomial is the empty list. Every
 * operation is exact; there is no floating point anywhere in this module.
 *
 * The variable tag makes polynomials over different variables distinct
 * types, so a polynomial in q cannot be added to a polynomial in b by
 * accident.
 */

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "connectors/bigint.hpp"

namespace connectors {

struct q_tag { static constexpr const char* name = "q"; };
struct b_tag { static constexpr const char* name = "b"; };
struct x_tag { static constexpr const char* name = "x"; };

template <class Ring, class Tag>
class polynomial {
public:
    polynomial() = default;
    polynomial(int c) : coeffs_{Ring(c)} { normalize(); }
    polynomial(Ring c) : coeffs_{std::move(c)} { normalize(); }
    polynomial(std::initializer_list<Ring> cs) : coeffs_(cs) { normalize(); }

    static polynomial from_coefficients(std::vector<Ring> cs) {
        polynomial p;
        p.coeffs_ = std::move(cs);
        p.normalize();
        return p;
    }

    static polynomial monomial(std::size_t power, Ring c = Ring(1)) {
        std::vector<Ring> cs(power + 1, Ring());
        cs[power] = std::move(c);
        return from_coefficients(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

    const Ring& coeff(std::size_t i) const {
        static const Ring zero{};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const std::vector<Ring>& coefficients() const { return coeffs_; }

    bool operator==(const polynomial&) const = default;

    polynomial& operator+=(const polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Ring());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    polynomial& operator-=(const polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Ring());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }

    polynomial operator-() const {
        std::vector<Ring> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
        return from_coefficients(std::move(out));
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Ring> out(a.coeffs_.size() + b.coeffs_.size() - 1, Ring());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coefficients(std::move(out));
    }

    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    polynomial pow(std::size_t e) const {
        polynomial r(1);
        for (std::size_t i = 0; i < e; ++i) r *= *this;
        return r;
    }

    Ring evaluate(const Ring& at) const {
        Ring acc{};
        for (std::size_t i = coeffs_.size(); i > 0; --i) acc = acc * at + coeffs_[i - 1];
        return acc;
    }

    polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Ring> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            out[i - 1] = coeffs_[i] * Ring(static_cast<int>(i));
        return from_coefficients(std::move(out));
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == Ring()) coeffs_.pop_back();
    }

    std::vector<Ring> coeffs_;
};

using q_polynomial = polynomial<bigint, q_tag>;
using b_polynomial = polynomial<bigint, b_tag>;
using x_polynomial = polynomial<bigint, x_tag>;
using bivariate_polynomial = polynomial<q_polynomial, x_tag>;

// Long division that must come out exact; throws std::logic_error otherwise.
// Exactness over an integral domain guarantees every leading-coefficient
// division along the way is itself exact.
template <class Ring, class Tag>
polynomial<Ring, Tag> exact_quotient(const polynomial<Ring, Tag>& a, const polynomial<Ring, Tag>& b) {
    if (b.is_zero()) throw std::logic_error("exact_quotient: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("exact_quotient: inexact polynomial division");
    std::vector<Ring> rem(a.coefficients());
    std::vector<Ring> quot(a.coefficients().size() - b.coefficients().size() + 1, Ring());
    const auto& bc = b.coefficients();
    for (std::size_t top = rem.size(); top >= bc.size(); --top) {
        std::size_t shift = top - bc.size();
        if (rem[top - 1] == Ring()) continue;
        Ring q = exact_quotient(rem[top - 1], bc.back());
        quot[shift] = q;
        for (std::size_t i = 0; i < bc.size(); ++i) rem[shift + i] -= q * bc[i];
    }
    for (const Ring& r : rem)
        if (!(r == Ring())) throw std::logic_error("exact_quotient: inexact polynomial division");
    return polynomial<Ring, Tag>::from_coefficients(std::move(quot));
}

template <class Ring, class Tag>
std::string to_string(const polynomial<Ring, Tag>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const Ring& c = p.coefficients()[i];
        if (c == Ring()) continue;
        std::string body;
        if constexpr (std::is_same_v<Ring, bigint>) {
            bool neg = c < 0;
            bigint mag = neg ? bigint(-c) : c;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (i == 0 || mag != 1) body = mag.str();
        } else {
            out += out.empty() ? "" : " + ";
            body = "(" + to_string(c) + ")";
        }
        if (i >= 1) {
            body += Tag::name;
            if (i > 1) body += "^" + std::to_string(i);
        }
        out += body;
    }
    return out;
}

template <class Ring, class Tag>
std::ostream& operator<<(std::ostream& os, const polynomial<Ring, Tag>& p) {
    return os << to_string(p);
}

// Ascending decimal coefficient images, the CLI wire form of a polynomial.
template <class Tag>
std::vector<std::string> coefficient_strings(const polynomial<bigint, Tag>& p) {
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const bigint& c : p.coefficients()) out.push_back(c.str());
    return out;
}

}  // namespace connectors
