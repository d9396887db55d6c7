#pragma once

#include <random>
#include <vector>

#include "tanrec/polynomial.hpp"

namespace test_util {

// Random polynomial of degree exactly `deg` with coefficients in [-bound, bound].
inline tanrec::Polynomial random_poly(std::mt19937& rng, int deg, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<tanrec::Int> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = coeff(rng);
    while (c.back() == 0) c.back() = coeff(rng);
    return tanrec::Polynomial(std::move(c));
}

// Same, but with leading coefficient forced to +1 or -1.
inline tanrec::Polynomial random_unit_lead_poly(std::mt19937& rng, int deg, int bound) {
    tanrec::Polynomial p = random_poly(rng, deg, bound);
    std::vector<tanrec::Int> c = p.coeffs();
    c.back() = (rng() % 2 == 0) ? 1 : -1;
    return tanrec::Polynomial(std::move(c));
}

// prod (X - a_i) expanded
inline tanrec::Polynomial from_roots(const std::vector<int>& roots) {
    tanrec::Polynomial p = tanrec::Polynomial::constant(1);
    for (int a : roots) p *= tanrec::Polynomial{-a, 1};
    return p;
}

}  // namespace test_util
