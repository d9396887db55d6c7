#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "tanrec/errors.hpp"
#include "tanrec/integer.hpp"
#include "tanrec/polynomial.hpp"

namespace tanrec {

/// tan(qx) as a rational function of t = tan x:
///
///   tan(qx) = num(t) / den(t),
///   num = sum_n (-1)^n C(q,2n+1) t^(2n+1)   (odd terms, degree q)
///   den = sum_n (-1)^n C(q,2n)   t^(2n)     (even terms, degree q-1, den(0)=1)
///
/// valid for every odd q >= 1.
struct TanRational {
    std::int64_t q = 1;
    Polynomial num;
    Polynomial den;
};

inline TanRational tan_multiple(std::int64_t q) {
    if (q < 1 || q % 2 == 0) {
        throw invalid_input("tan_multiple: q = " + std::to_string(q) +
                            " must be odd and >= 1");
    }
    const std::vector<Int> binom = binomial_row(q);
    std::vector<Int> num_c(static_cast<std::size_t>(q) + 1, Int(0));
    std::vector<Int> den_c(static_cast<std::size_t>(q), Int(0));
    int sign = 1;
    for (std::int64_t n = 0; 2 * n + 1 <= q; ++n) {
        num_c[static_cast<std::size_t>(2 * n + 1)] = sign * binom[static_cast<std::size_t>(2 * n + 1)];
        den_c[static_cast<std::size_t>(2 * n)] = sign * binom[static_cast<std::size_t>(2 * n)];
        sign = -sign;
    }
    return TanRational{q, Polynomial(std::move(num_c)), Polynomial(std::move(den_c))};
}

/// Prime normal form of the multiplication formula, for odd prime q:
///
///   num(t) = t * ( q*phi(t^2) + sigma * t^(q-1) ),    sigma = (-1)^((q-1)/2)
///   den(t) = 1 + q*psi(t^2)
///
/// phi and psi have integer coefficients precisely because q divides every
/// interior binomial coefficient C(q,k), 0 < k < q.  phi(0) = 1.
struct TangentForm {
    std::int64_t q = 3;
    Polynomial phi;  // in u = t^2, degree (q-3)/2
    Polynomial psi;  // in u = t^2, degree (q-1)/2, psi(0) = 0
    int sigma = -1;

    Polynomial reconstruct_num() const {
        Polynomial inner = Int(q) * phi.inflated();
        inner += Polynomial::monomial(sigma, static_cast<std::size_t>(q - 1));
        return inner * Polynomial::x();
    }

    Polynomial reconstruct_den() const {
        return Polynomial::constant(1) + Int(q) * psi.inflated();
    }
};

inline TangentForm eisenstein_form(std::int64_t q) {
    require_odd_prime(q, "eisenstein_form: q");

    const TanRational t = tan_multiple(q);
    const Int q_int = q;
    std::vector<Int> phi_c(static_cast<std::size_t>((q - 1) / 2), Int(0));
    std::vector<Int> psi_c(static_cast<std::size_t>((q + 1) / 2), Int(0));
    for (std::int64_t n = 0; 2 * n + 1 < q; ++n) {
        const Int& c = t.num.coeff(static_cast<std::size_t>(2 * n + 1));
        if (c % q_int != 0) {
            throw internal_inconsistency(
                "eisenstein_form: C(q," + std::to_string(2 * n + 1) +
                ") not divisible by prime q = " + std::to_string(q));
        }
        phi_c[static_cast<std::size_t>(n)] = c / q_int;
    }
    for (std::int64_t n = 1; 2 * n <= q - 1; ++n) {
        const Int& c = t.den.coeff(static_cast<std::size_t>(2 * n));
        if (c % q_int != 0) {
            throw internal_inconsistency(
                "eisenstein_form: C(q," + std::to_string(2 * n) +
                ") not divisible by prime q = " + std::to_string(q));
        }
        psi_c[static_cast<std::size_t>(n)] = c / q_int;
    }

    TangentForm form{q, Polynomial(std::move(phi_c)), Polynomial(std::move(psi_c)),
                     parity_sign((q - 1) / 2)};
    if (form.reconstruct_num() != t.num || form.reconstruct_den() != t.den) {
        throw internal_inconsistency("eisenstein_form: reconstruction mismatch for q = " +
                                     std::to_string(q));
    }
    return form;
}

/// Exact check of the composition law tan(mn x) = T_m(T_n(t)): substitutes
/// T_n into T_m, clears denominators, and compares cross products with T_mn.
/// No gcd is taken; equality of cross products already decides the identity.
inline bool compose_check(std::int64_t m, std::int64_t n) {
    const TanRational outer = tan_multiple(m);
    const TanRational inner = tan_multiple(n);
    const TanRational direct = tan_multiple(m * n);
    const auto clear_deg = static_cast<unsigned>(m);
    const Polynomial num_c = compose_cleared(outer.num, inner.num, inner.den, clear_deg);
    const Polynomial den_c = compose_cleared(outer.den, inner.num, inner.den, clear_deg);
    return num_c * direct.den == den_c * direct.num;
}

/// |num(tan x)/den(tan x) - tan(qx)| in double precision.  Smoke test only;
/// everything load-bearing in this library is exact.  The caller is expected
/// to stay away from poles of tan x, tan qx and of the rational form.
inline double float_sanity(std::int64_t q, double x) {
    const TanRational t = tan_multiple(q);
    const double tx = std::tan(x);
    const double tqx = std::tan(static_cast<double>(q) * x);
    if (!std::isfinite(tx) || !std::isfinite(tqx)) {
        throw pole_error("float_sanity: tan is not finite at x");
    }
    if (std::abs(tx) >= 1e12 || std::abs(tqx) >= 1e12) {
        throw pole_error("float_sanity: x is too close to a pole of tan x or tan qx");
    }
    double den_val = 0.0;
    double den_scale = 0.0;
    const double ax = std::abs(tx);
    for (std::size_t i = t.den.coeffs().size(); i-- > 0;) {
        const double c = t.den.coeffs()[i].convert_to<double>();
        den_val = den_val * tx + c;
        den_scale = den_scale * ax + std::abs(c);
    }
    if (std::abs(den_val) <= 1e-12 * den_scale) {
        throw pole_error("float_sanity: denominator vanishes at tan x");
    }
    const double num_val = t.num.eval_double(tx);
    return std::abs(num_val / den_val - tqx);
}

}  // namespace tanrec
