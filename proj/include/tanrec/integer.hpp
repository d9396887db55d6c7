#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tanrec/errors.hpp"

namespace tanrec {

// Arbitrary-precision signed integer.  Every coefficient-path computation in
// this library runs on Int; fixed-width arithmetic never touches it.
using Int = boost::multiprecision::cpp_int;

// (-1)^k
inline int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

inline Int int_pow(Int base, std::uint64_t exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

inline Int mod_pow(Int base, Int exp, const Int& mod) {
    assert(mod > 0);
    Int result = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// Quotient a/b for exactly divisible operands.
inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    assert(r == 0);
    return q;
}

// Deterministic trial division with a 6k+-1 wheel.  The proof machinery only
// ever sees desk-scale primes, so no probabilistic test is warranted.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

inline bool is_odd_prime(std::int64_t n) {
    return n > 2 && n % 2 == 1 && is_prime(static_cast<std::uint64_t>(n));
}

inline void require_odd_prime(std::int64_t n, const char* what) {
    if (!is_odd_prime(n)) {
        throw not_a_prime(std::string(what) + " = " + std::to_string(n) +
                          " is not an odd prime");
    }
}

// Row n of Pascal's triangle, C(n,0)..C(n,n), by the descending product
// C(n,k) = C(n,k-1)*(n-k+1)/k.  Each division is exact.
inline std::vector<Int> binomial_row(std::int64_t n) {
    assert(n >= 0);
    std::vector<Int> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        row[static_cast<std::size_t>(k)] =
            exact_div(row[static_cast<std::size_t>(k - 1)] * (n - k + 1), Int(k));
    }
    return row;
}

}  // namespace tanrec
