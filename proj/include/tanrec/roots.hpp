#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "tanrec/errors.hpp"
#include "tanrec/integer.hpp"
#include "tanrec/polynomial.hpp"
#include "tanrec/resultant.hpp"
#include "tanrec/tangent.hpp"

namespace tanrec {

/// Integer polynomials whose roots are the tangent values at the p-division
/// points of the full turn w = 2*pi:
///
///   F(Z): degree p-1, roots tan(r*w/p) for r running over the nonzero
///         residues mod p.  Only even powers appear; F(0) = p and the leading
///         coefficient is (-1)^((p-1)/2).
///   G(u): F with Z^2 replaced by u; degree (p-1)/2, roots tan(r*w/p)^2 for r
///         in the half-system 1..(p-1)/2.
///
/// F is num(Z)/Z from the multiplication formula: tan(pz) vanishes at the
/// division points, and stripping the root at Z = 0 leaves exactly these.
struct RootPolynomial {
    std::int64_t p = 3;
    Polynomial F;
    Polynomial G;
};

inline RootPolynomial root_poly(std::int64_t p) {
    require_odd_prime(p, "root_poly: p");
    const TanRational t = tan_multiple(p);
    Polynomial f = t.num.divided_by_x();
    Polynomial g = f.even_part_in_u();
    return RootPolynomial{p, std::move(f), std::move(g)};
}

/// Verifies the two product identities
///
///   prod_r tan(r*w/p)^2 = p           (half-system r)
///   prod_r tan(r*w/p)   = (-1)^((p-1)/2) * p   (all nonzero residues r)
///
/// by exact root products, and returns the half-system product (= p).
inline Int product_identity_check(std::int64_t p) {
    const RootPolynomial rp = root_poly(p);
    const Int squared = product_over_roots(rp.G, Polynomial::x());
    if (squared != p) {
        throw internal_inconsistency("product identity: squared-tangent product != p for p = " +
                                     std::to_string(p));
    }
    const Int full = product_over_roots(rp.F, Polynomial::x());
    if (full != Int(parity_sign((p - 1) / 2)) * p) {
        throw internal_inconsistency(
            "product identity: full tangent product != (-1)^((p-1)/2) * p for p = " +
            std::to_string(p));
    }
    return squared;
}

/// Residues 1..(p-1)/2; together with their negations they cover every
/// nonzero residue class mod p exactly once.
struct HalfSystem {
    std::int64_t p = 3;
    std::vector<std::int64_t> rs;
};

inline HalfSystem half_system(std::int64_t p) {
    require_odd_prime(p, "half_system: p");
    HalfSystem h{p, {}};
    h.rs.resize(static_cast<std::size_t>((p - 1) / 2));
    std::iota(h.rs.begin(), h.rs.end(), std::int64_t{1});
    return h;
}

/// Floating-point sanity: every tan(2*pi*r/p) nearly annihilates F, and the
/// half-system product of squares lands near p.  Residuals are measured
/// against the evaluation magnitude sum |a_i| |t|^i, the natural scale for
/// Horner round-off.  Limited to p <= 31 where doubles are adequate.
inline bool numeric_root_check(std::int64_t p, double tolerance) {
    require_odd_prime(p, "numeric_root_check: p");
    if (p > 31) throw invalid_input("numeric_root_check: p must be <= 31");
    const RootPolynomial rp = root_poly(p);

    std::vector<double> fc(rp.F.coeffs().size());
    for (std::size_t i = 0; i < fc.size(); ++i) fc[i] = rp.F.coeffs()[i].convert_to<double>();

    const double w = 2.0 * std::numbers::pi_v<double>;
    for (std::int64_t r = 1; r < p; ++r) {
        const double t = std::tan(w * static_cast<double>(r) / static_cast<double>(p));
        double value = 0.0;
        double scale = 0.0;
        const double at = std::abs(t);
        for (std::size_t i = fc.size(); i-- > 0;) {
            value = value * t + fc[i];
            scale = scale * at + std::abs(fc[i]);
        }
        if (std::abs(value) >= tolerance * scale) return false;
    }

    double prod = 1.0;
    for (std::int64_t r = 1; r <= (p - 1) / 2; ++r) {
        const double t = std::tan(w * static_cast<double>(r) / static_cast<double>(p));
        prod *= t * t;
    }
    return std::abs(prod - static_cast<double>(p)) < tolerance * static_cast<double>(p);
}

}  // namespace tanrec
