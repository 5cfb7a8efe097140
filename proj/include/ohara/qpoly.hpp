#pragma once

/**
 * @file qpoly.hpp
 * @brief Dense polynomials in one variable q over arbitrary-precision integers.
 *
 * Every generating function in the library is a QPoly: q-integers,
 * Gaussian binomials, principal specializations of Schur functions and the
 * per-tree terms q^(s/2) * prod [a+1]_q.
 *
 *   q_binomial(2, 2) = 1 + q + 2q^2 + q^3 + q^4
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ohara/error.hpp"

namespace ohara {

using BigInt = boost::multiprecision::cpp_int;

class QPoly {
public:
    QPoly() = default;

    explicit QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    QPoly(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static QPoly constant(BigInt c) { return QPoly(std::vector<BigInt>{std::move(c)}); }

    static QPoly monomial(BigInt c, int exponent) {
        if (exponent < 0) throw Error(Errc::precondition_violation, "negative exponent");
        std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1);
        v.back() = std::move(c);
        return QPoly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Lowest exponent with a nonzero coefficient; -1 for zero.
    int low_degree() const noexcept {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    BigInt operator[](int r) const {
        if (r < 0 || r > degree()) return BigInt(0);
        return coeffs_[static_cast<std::size_t>(r)];
    }

    BigInt at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    QPoly& operator+=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    QPoly& operator-=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return QPoly(std::move(out));
    }

    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// Multiplies by q^d.
inline QPoly shift(const QPoly& p, int d) {
    if (d < 0) throw Error(Errc::precondition_violation, "shift exponent must be nonnegative");
    if (p.is_zero()) return {};
    std::vector<BigInt> v(static_cast<std::size_t>(d));
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return QPoly(std::move(v));
}

inline BigInt coeff(const QPoly& p, int r) { return p[r]; }

/// [a+1]_q = 1 + q + ... + q^a.
inline QPoly q_int(int a) {
    if (a < 0) throw Error(Errc::precondition_violation, "q_int needs a >= 0");
    return QPoly(std::vector<BigInt>(static_cast<std::size_t>(a) + 1, BigInt(1)));
}

/// Gaussian binomial (n+k choose k)_q, the generating function of
/// partitions inside a k x n box. Built from the Pascal-type recurrence
/// G(n,k) = G(n,k-1) + q^k G(n-1,k); no division is performed.
inline QPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0) throw Error(Errc::precondition_violation, "q_binomial needs n, k >= 0");
    // row[m] holds G(m, kk) for the current kk.
    std::vector<QPoly> row(static_cast<std::size_t>(n) + 1, QPoly{1});
    for (int kk = 1; kk <= k; ++kk) {
        std::vector<QPoly> next(row.size());
        next[0] = QPoly{1};
        for (int m = 1; m <= n; ++m)
            next[static_cast<std::size_t>(m)] =
                row[static_cast<std::size_t>(m)] + shift(next[static_cast<std::size_t>(m) - 1], kk);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(n)];
}

/// Exact quotient p / d in Z[q]. Throws NON_EXACT_DIVISION on a nonzero
/// remainder or a non-integral quotient coefficient.
inline QPoly exact_div(const QPoly& p, const QPoly& d) {
    if (d.is_zero()) throw Error(Errc::non_exact_division, "division by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < d.degree()) throw Error(Errc::non_exact_division, "divisor degree exceeds dividend degree");
    std::vector<BigInt> rem = p.coeffs();
    const auto& dc = d.coeffs();
    const int dd = d.degree();
    const BigInt& lead = dc.back();
    std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - dd) + 1);
    for (int i = p.degree() - dd; i >= 0; --i) {
        BigInt& top = rem[static_cast<std::size_t>(i + dd)];
        if (top == 0) continue;
        if (top % lead != 0) throw Error(Errc::non_exact_division, "non-integral quotient coefficient");
        BigInt c = top / lead;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * dc[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(i)] = std::move(c);
    }
    for (const auto& r : rem)
        if (r != 0) throw Error(Errc::non_exact_division, "nonzero remainder");
    return QPoly(std::move(quot));
}

/// True when coeff(r) == coeff(center_times_two - r) for every r, i.e. the
/// coefficients are palindromic about center_times_two / 2.
inline bool is_symmetric(const QPoly& p, int center_times_two) {
    const int hi = std::max(p.degree(), center_times_two);
    for (int r = 0; r <= hi; ++r)
        if (p[r] != p[center_times_two - r]) return false;
    return true;
}

/// Weakly increasing then weakly decreasing over the stored coefficients.
inline bool is_unimodal(const QPoly& p) {
    const auto& c = p.coeffs();
    std::size_t i = 1;
    while (i < c.size() && c[i] >= c[i - 1]) ++i;
    while (i < c.size() && c[i] <= c[i - 1]) ++i;
    return i >= c.size();
}

inline std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int r = 0; r <= p.degree(); ++r) {
        BigInt c = p[r];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (r == 0 || a != 1) os << a;
        if (r >= 1) os << "q";
        if (r >= 2) os << "^" << r;
        first = false;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }

} // namespace ohara
