#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "tanrec/errors.hpp"
#include "tanrec/integer.hpp"
#include "tanrec/polynomial.hpp"

namespace tanrec {

namespace detail {

// Pseudo-remainder R with lc(b)^(deg a - deg b + 1) * a = q*b + R.
// The exponent is topped up so exactly delta+1 factors of lc(b) are applied;
// the subresultant bookkeeping depends on that.
inline Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b) {
    assert(!b.is_zero() && a.degree() >= b.degree());
    const Int& lead_b = b.leading();
    int scalings_left = a.degree() - b.degree() + 1;
    Polynomial r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        Polynomial t = Polynomial::monomial(r.leading(), shift) * b;
        r *= lead_b;
        r -= t;
        --scalings_left;
    }
    if (scalings_left > 0) r *= int_pow(lead_b, static_cast<std::uint64_t>(scalings_left));
    return r;
}

}  // namespace detail

/// Resultant Res(f, g) with the Sylvester-determinant sign convention,
/// computed by the subresultant polynomial remainder sequence.  All
/// intermediate divisions are exact, so no rational arithmetic appears.
inline Int resultant(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) throw invalid_input("resultant: first argument is the zero polynomial");
    if (g.is_zero()) return 0;
    if (f.degree() == 0) return int_pow(f.leading(), static_cast<std::uint64_t>(g.degree()));
    if (g.degree() == 0) return int_pow(g.leading(), static_cast<std::uint64_t>(f.degree()));

    Polynomial a = f;
    Polynomial b = g;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 != 0 && b.degree() % 2 != 0) sign = -sign;
    }
    Int g_coef = 1;
    Int h_coef = 1;
    while (b.degree() > 0) {
        const int delta = a.degree() - b.degree();
        if (a.degree() % 2 != 0 && b.degree() % 2 != 0) sign = -sign;
        Polynomial r = detail::pseudo_rem(a, b);
        a = std::move(b);
        const Int divisor = g_coef * int_pow(h_coef, static_cast<std::uint64_t>(delta));
        b = r.divided_exact(divisor);
        g_coef = a.leading();
        if (delta > 0) {
            h_coef = exact_div(int_pow(g_coef, static_cast<std::uint64_t>(delta)),
                               int_pow(h_coef, static_cast<std::uint64_t>(delta - 1)));
        }
    }
    if (b.is_zero()) return 0;  // nontrivial common factor
    const auto deg_a = static_cast<std::uint64_t>(a.degree());
    Int res = exact_div(int_pow(b.leading(), deg_a), int_pow(h_coef, deg_a - 1));
    return sign < 0 ? Int(-res) : res;
}

/// Sylvester matrix of f and g (deg f + deg g rows); det = Res(f, g).
inline std::vector<std::vector<Int>> sylvester_matrix(const Polynomial& f,
                                                      const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw invalid_input("sylvester_matrix: zero polynomial");
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    std::vector<std::vector<Int>> s(m + n, std::vector<Int>(m + n, Int(0)));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f.coeff(m - i);
    }
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t i = 0; i <= n; ++i) s[n + row][row + i] = g.coeff(n - i);
    }
    return s;
}

/// Fraction-free determinant (Bareiss one-step elimination with row pivoting).
inline Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m) assert(row.size() == n);
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

namespace detail {

inline void require_unit_leading(const Polynomial& f, const char* what) {
    if (f.leading() != 1 && f.leading() != -1) {
        throw unsupported_leading_coefficient(
            std::string(what) + ": leading coefficient must be +1 or -1");
    }
}

// Coefficient vector (length deg m) of g reduced modulo the monic m.
inline std::vector<Int> mod_monic(const Polynomial& g, const Polynomial& m) {
    assert(m.leading() == 1 && m.degree() >= 1);
    const auto d = static_cast<std::size_t>(m.degree());
    std::vector<Int> r(g.coeffs());
    for (std::size_t i = r.size(); i-- > d;) {
        if (r[i] == 0) continue;
        const Int c = std::move(r[i]);
        r[i] = 0;
        for (std::size_t j = 0; j < d; ++j) r[i - d + j] -= c * m.coeff(j);
    }
    r.resize(d, Int(0));
    return r;
}

}  // namespace detail

/// det(g(C)) with C the companion matrix of the monic normalization of f.
/// Column j of g(C) is the coefficient vector of X^j * g reduced mod f, so the
/// matrix is built by repeated reduction and the determinant by Bareiss
/// elimination.  Independent of the resultant route and must agree with
/// product_over_roots on every input.
inline Int companion_product(const Polynomial& f, const Polynomial& g) {
    detail::require_unit_leading(f, "companion_product");
    if (f.degree() < 1) throw invalid_input("companion_product: deg f must be >= 1");
    const Polynomial monic = f.leading() == 1 ? f : -f;  // same roots
    const auto d = static_cast<std::size_t>(monic.degree());

    std::vector<std::vector<Int>> mat(d, std::vector<Int>(d));
    std::vector<Int> col = detail::mod_monic(g, monic);
    for (std::size_t j = 0;; ++j) {
        for (std::size_t i = 0; i < d; ++i) mat[i][j] = col[i];
        if (j + 1 == d) break;
        // col <- X * col mod monic
        Int top = std::move(col[d - 1]);
        for (std::size_t i = d - 1; i > 0; --i) col[i] = std::move(col[i - 1]);
        col[0] = 0;
        if (top != 0) {
            for (std::size_t i = 0; i < d; ++i) col[i] -= top * monic.coeff(i);
        }
    }
    return bareiss_determinant(std::move(mat));
}

/// Product of g over the roots of f (with multiplicity), as an exact integer:
/// Res(f, g) / lc(f)^deg(g).  Requires lc(f) = +-1.
inline Int product_over_roots(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) throw invalid_input("product_over_roots: zero polynomial has no root set");
    detail::require_unit_leading(f, "product_over_roots");
    if (f.degree() == 0) return 1;  // empty product
    if (g.is_zero()) return 0;
    const Int res = resultant(f, g);
    if (f.leading() == 1 || g.degree() % 2 == 0) return res;
    return -res;
}

/// Power sums p_1..p_K of the roots of f, via Newton's identities on the
/// elementary symmetric functions read off the coefficients.
struct PowerSums {
    std::vector<Int> values;  // values[k-1] = p_k

    const Int& p(std::size_t k) const { return values.at(k - 1); }
};

inline PowerSums newton_power_sums(const Polynomial& f, std::size_t count) {
    detail::require_unit_leading(f, "newton_power_sums");
    assert(count >= 1);
    const Polynomial monic = f.leading() == 1 ? f : -f;
    const auto d = static_cast<std::size_t>(monic.degree());

    // e_k = (-1)^k * coeff(d-k) of the monic polynomial
    std::vector<Int> e(d + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        e[k] = (k % 2 == 0) ? monic.coeff(d - k) : Int(-monic.coeff(d - k));
    }

    PowerSums out;
    out.values.resize(count);
    for (std::size_t k = 1; k <= count; ++k) {
        Int acc = 0;
        const std::size_t upper = std::min(k - 1, d);
        for (std::size_t i = 1; i <= upper; ++i) {
            const Int term = e[i] * out.values[k - i - 1];
            if (i % 2 == 0) acc -= term; else acc += term;
        }
        if (k <= d) {
            Int tail = Int(k) * e[k];
            if (k % 2 == 0) acc -= tail; else acc += tail;
        }
        out.values[k - 1] = std::move(acc);
    }
    return out;
}

}  // namespace tanrec
