#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tanrec/errors.hpp"
#include "tanrec/integer.hpp"
#include "tanrec/polynomial.hpp"
#include "tanrec/resultant.hpp"
#include "tanrec/roots.hpp"
#include "tanrec/tangent.hpp"

namespace tanrec {

namespace detail {

inline void require_distinct_odd_primes(std::int64_t p, std::int64_t q) {
    require_odd_prime(p, "p");
    require_odd_prime(q, "q");
    if (p == q) {
        throw invalid_input("p = q = " + std::to_string(p) + "; the primes must be distinct");
    }
}

}  // namespace detail

// (-1)^( (p-1)/2 * (q-1)/2 ), the sign in the reciprocity law.  Computed by
// exponent parity, never by repeated multiplication.
inline int reciprocity_sign(std::int64_t p, std::int64_t q) {
    return (((p - 1) / 2) % 2 != 0 && ((q - 1) / 2) % 2 != 0) ? -1 : 1;
}

/// The integers P and Q of the closed form
///
///   (q/p) = ( qP + (-1)^((p-1)/2 (q-1)/2) p^((q-1)/2) ) / ( 1 + qQ ).
///
/// With G the squared-tangent root polynomial of p and (phi, psi, sigma) the
/// prime normal form of q, the two exact root products
///
///   s_raw = prod_r ( q*phi(u_r) + sigma * u_r^((q-1)/2) )
///   d_raw = prod_r ( 1 + q*psi(u_r) )
///
/// are integers (symmetric in the u_r), and stripping the known constant
/// leaves qP and qQ.  Both divisions by q are exact; a failure would mean a
/// bug, not bad input.
struct PQValues {
    Int P;
    Int Q;
};

inline PQValues compute_PQ(std::int64_t p, std::int64_t q) {
    detail::require_distinct_odd_primes(p, q);
    const RootPolynomial rp = root_poly(p);
    const TangentForm form = eisenstein_form(q);

    Polynomial numerator_poly = Int(q) * form.phi;
    numerator_poly += Polynomial::monomial(form.sigma, static_cast<std::size_t>((q - 1) / 2));
    const Polynomial denominator_poly = Polynomial::constant(1) + Int(q) * form.psi;

    const Int s_raw = product_over_roots(rp.G, numerator_poly);
    const Int d_raw = product_over_roots(rp.G, denominator_poly);

    const Int sigma_pq = reciprocity_sign(p, q);
    const Int p_power = int_pow(Int(p), static_cast<std::uint64_t>((q - 1) / 2));

    Int ps, pr;
    boost::multiprecision::divide_qr(Int(s_raw - sigma_pq * p_power), Int(q), ps, pr);
    if (pr != 0) {
        throw internal_inconsistency("compute_PQ: qP + sigma*p^((q-1)/2) split is not exact");
    }
    Int qs, qr;
    boost::multiprecision::divide_qr(Int(d_raw - 1), Int(q), qs, qr);
    if (qr != 0) {
        throw internal_inconsistency("compute_PQ: 1 + qQ split is not exact");
    }
    return PQValues{std::move(ps), std::move(qs)};
}

namespace detail {

struct TangentSymbolData {
    Int s;
    Int d;
    int sym;
};

// Forms s = qP + sigma*p^((q-1)/2) and d = 1 + qQ and extracts the symbol.
// Two readings are checked: the exact one, s = +-d (the tangent ratios are a
// signed permutation product), and the congruence one, q^((p-1)/2) * d = s
// (mod p), which is the statement before the half-system product cancels.
inline TangentSymbolData tangent_symbol_from_pq(const PQValues& pq, std::int64_t p,
                                                std::int64_t q) {
    TangentSymbolData out;
    out.s = Int(q) * pq.P +
            Int(reciprocity_sign(p, q)) * int_pow(Int(p), static_cast<std::uint64_t>((q - 1) / 2));
    out.d = 1 + Int(q) * pq.Q;
    if (out.d == 0) throw internal_inconsistency("tangent symbol: denominator 1 + qQ vanished");
    if (out.s != out.d && out.s != -out.d) {
        throw internal_inconsistency("tangent symbol: |s/d| != 1 for (q, p) = (" +
                                     std::to_string(q) + ", " + std::to_string(p) + ")");
    }
    out.sym = (out.s == out.d) ? 1 : -1;
    const Int euler_residue = mod_pow(Int(q), Int((p - 1) / 2), Int(p));
    if ((out.s - euler_residue * out.d) % p != 0) {
        throw internal_inconsistency("tangent symbol: congruence reading mod p failed");
    }
    return out;
}

}  // namespace detail

/// Legendre symbol (q/p) through the exact tangent-product formula.
inline int legendre_tangent(std::int64_t q, std::int64_t p) {
    return detail::tangent_symbol_from_pq(compute_PQ(p, q), p, q).sym;
}

/// Independent oracle: Euler's criterion q^((p-1)/2) mod p.
inline int legendre_euler(std::int64_t q, std::int64_t p) {
    detail::require_distinct_odd_primes(p, q);
    const Int value = mod_pow(Int(q), Int((p - 1) / 2), Int(p));
    if (value == 1) return 1;
    if (value == p - 1) return -1;
    throw internal_inconsistency("legendre_euler: q^((p-1)/2) mod p is not +-1");
}

/// Multiplication by q permutes the half-system of p up to signs:
/// q*r = eps * r' (mod p) with r' again in 1..(p-1)/2 and eps = +-1.
struct SignedPermutation {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> image;  // image[r-1] = r'
    std::vector<int> eps;             // eps[r-1]  = +-1

    int flip_count() const {
        return static_cast<int>(std::count(eps.begin(), eps.end(), -1));
    }
};

/// Gauss's lemma: (q/p) = (-1)^(number of sign flips).  Builds the signed
/// permutation, checks it is a bijection of the half-system, and checks
/// gcd(prod r, p) = 1 so the permutation argument may cancel prod r mod p.
inline std::pair<SignedPermutation, int> gauss_lemma_sign(std::int64_t q, std::int64_t p) {
    detail::require_distinct_odd_primes(p, q);
    const std::int64_t half = (p - 1) / 2;
    SignedPermutation perm{p, q, {}, {}};
    perm.image.resize(static_cast<std::size_t>(half));
    perm.eps.resize(static_cast<std::size_t>(half));
    std::vector<bool> seen(static_cast<std::size_t>(half), false);
    std::int64_t r_product_mod_p = 1;
    for (std::int64_t r = 1; r <= half; ++r) {
        std::int64_t v = (q % p) * r % p;
        if (v == 0 || 2 * v == p) {
            throw internal_inconsistency("gauss_lemma_sign: q*r hit a forbidden residue");
        }
        const bool flip = v > half;
        const std::int64_t rp = flip ? p - v : v;
        perm.image[static_cast<std::size_t>(r - 1)] = rp;
        perm.eps[static_cast<std::size_t>(r - 1)] = flip ? -1 : 1;
        if (seen[static_cast<std::size_t>(rp - 1)]) {
            throw internal_inconsistency("gauss_lemma_sign: image is not a bijection");
        }
        seen[static_cast<std::size_t>(rp - 1)] = true;
        r_product_mod_p = r_product_mod_p * r % p;
    }
    if (std::gcd(r_product_mod_p, p) != 1) {
        throw internal_inconsistency("gauss_lemma_sign: gcd(prod r, p) != 1");
    }
    return {std::move(perm), parity_sign(perm.flip_count())};
}

/// Everything computed for one ordered pair: the closed-form data for (q/p),
/// the symbol by all three methods, and the reciprocity check against the
/// mirrored pair.
struct ReciprocityReport {
    std::int64_t p = 0;
    std::int64_t q = 0;
    Int P;
    Int Q;
    Int s;  // q*P + sigma * p^((q-1)/2); equals sym_tangent * d exactly
    Int d;  // 1 + q*Q
    int sym_tangent = 0;
    int sym_euler = 0;
    int sym_gauss = 0;
    int sigma = 0;  // (-1)^((p-1)/2 (q-1)/2)
    bool reciprocity_ok = false;

    bool symbols_agree() const {
        return sym_tangent == sym_euler && sym_euler == sym_gauss;
    }
};

inline ReciprocityReport verify_pair(std::int64_t p, std::int64_t q) {
    detail::require_distinct_odd_primes(p, q);
    ReciprocityReport rep;
    rep.p = p;
    rep.q = q;
    rep.sigma = reciprocity_sign(p, q);

    PQValues pq = compute_PQ(p, q);
    detail::TangentSymbolData sym = detail::tangent_symbol_from_pq(pq, p, q);
    rep.P = std::move(pq.P);
    rep.Q = std::move(pq.Q);
    rep.s = std::move(sym.s);
    rep.d = std::move(sym.d);
    rep.sym_tangent = sym.sym;
    rep.sym_euler = legendre_euler(q, p);
    rep.sym_gauss = gauss_lemma_sign(q, p).second;

    const int mirrored = legendre_tangent(p, q);
    rep.reciprocity_ok = (rep.sym_tangent * mirrored == rep.sigma);
    return rep;
}

inline std::vector<std::int64_t> odd_primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> primes;
    for (std::int64_t k = 3; k <= n; k += 2) {
        if (is_prime(static_cast<std::uint64_t>(k))) primes.push_back(k);
    }
    return primes;
}

/// Reports for every unordered pair of distinct odd primes <= p_max, in
/// sorted (p, q) order.  Pairs may be evaluated on several threads; the
/// output order and content never depend on the schedule.
inline std::vector<ReciprocityReport> sweep(std::int64_t p_max, unsigned threads = 1) {
    if (p_max < 5) {
        throw invalid_input("sweep: p_max = " + std::to_string(p_max) + " must be >= 5");
    }
    const std::vector<std::int64_t> primes = odd_primes_up_to(p_max);
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            pairs.emplace_back(primes[i], primes[j]);
        }
    }

    std::vector<ReciprocityReport> reports(pairs.size());
    if (threads <= 1 || pairs.size() <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            reports[i] = verify_pair(pairs[i].first, pairs[i].second);
        }
        return reports;
    }

    const unsigned worker_count = std::min<unsigned>(threads, static_cast<unsigned>(pairs.size()));
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < pairs.size(); i += worker_count) {
                    reports[i] = verify_pair(pairs[i].first, pairs[i].second);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return reports;
}

}  // namespace tanrec
