#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tanrec/errors.hpp"
#include "tanrec/integer.hpp"

namespace tanrec {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored lowest degree first and kept canonical: no trailing
/// zero coefficients, and the zero polynomial is the empty sequence.  degree()
/// returns -1 for the zero polynomial; that value is the "minus infinity"
/// marker and never a real degree.
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(std::initializer_list<Int> low_to_high)
        : coeffs_(low_to_high) {
        normalize();
    }

    explicit Polynomial(std::vector<Int> low_to_high)
        : coeffs_(std::move(low_to_high)) {
        normalize();
    }

    static Polynomial constant(Int c) {
        Polynomial p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static Polynomial monomial(Int c, std::size_t k) {
        Polynomial p;
        if (c != 0) {
            p.coeffs_.assign(k + 1, Int(0));
            p.coeffs_[k] = std::move(c);
        }
        return p;
    }

    /// The variable X itself.
    static Polynomial x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    const Int& coeff(std::size_t i) const {
        static const Int kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const Int& leading() const {
        static const Int kZero = 0;
        return coeffs_.empty() ? kZero : coeffs_.back();
    }

    bool operator==(const Polynomial& rhs) const = default;

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    Polynomial& operator*=(const Int& s) {
        if (s == 0) {
            coeffs_.clear();
        } else {
            for (auto& c : coeffs_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        // product of nonzero polynomials over Z is nonzero; no trailing zeros
        return r;
    }

    friend Polynomial operator*(Polynomial a, const Int& s) { return a *= s; }
    friend Polynomial operator*(const Int& s, Polynomial a) { return a *= s; }

    /// Horner evaluation at an integer point.
    Int operator()(const Int& c) const {
        Int acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * c + coeffs_[i];
        }
        return acc;
    }

    double eval_double(double t) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * t + coeffs_[i].convert_to<double>();
        }
        return acc;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            if ((e >>= 1) != 0) base *= base;
        }
        return result;
    }

    /// Exact division by X; the constant term must vanish.
    Polynomial divided_by_x() const {
        if (is_zero()) return {};
        if (coeffs_[0] != 0) throw invalid_input("division by X: constant term is nonzero");
        Polynomial r;
        r.coeffs_.assign(coeffs_.begin() + 1, coeffs_.end());
        return r;
    }

    /// For a polynomial in X touching only even powers, the polynomial in
    /// u = X^2 with the same values.
    Polynomial even_part_in_u() const {
        Polynomial r;
        r.coeffs_.reserve(coeffs_.size() / 2 + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i % 2 == 0) {
                r.coeffs_.push_back(coeffs_[i]);
            } else if (coeffs_[i] != 0) {
                throw invalid_input("even_part_in_u: polynomial has an odd-power term");
            }
        }
        r.normalize();
        return r;
    }

    /// Substitute X -> X^2 (inverse of even_part_in_u).
    Polynomial inflated() const {
        Polynomial r;
        if (is_zero()) return r;
        r.coeffs_.assign(2 * coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[2 * i] = coeffs_[i];
        return r;
    }

    bool has_only_even_terms() const {
        for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
            if (coeffs_[i] != 0) return false;
        }
        return true;
    }

    bool has_only_odd_terms() const {
        for (std::size_t i = 0; i < coeffs_.size(); i += 2) {
            if (coeffs_[i] != 0) return false;
        }
        return true;
    }

    bool divisible_by(const Int& k) const {
        for (const auto& c : coeffs_) {
            if (c % k != 0) return false;
        }
        return true;
    }

    Polynomial divided_exact(const Int& k) const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = exact_div(c, k);
        return r;
    }

    /// Display form, highest-degree term first: "-t^3 + 3t".
    std::string to_string(std::string_view var) const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            const bool first = out.empty();
            const bool negative = c < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            Int mag = negative ? Int(-c) : c;
            if (mag != 1 || i == 0) out += mag.str();
            if (i >= 1) {
                out += var;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string("X");
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;  // index i = coefficient of X^i
};

/// Denominator-cleared composition: with f of degree at most `total_degree`,
/// returns den^total_degree * f(num/den), i.e. sum a_i num^i den^(total_degree - i).
inline Polynomial compose_cleared(const Polynomial& f, const Polynomial& num,
                                  const Polynomial& den, unsigned total_degree) {
    assert(f.degree() <= static_cast<int>(total_degree));
    std::vector<Polynomial> den_pow(total_degree + 1);
    den_pow[0] = Polynomial::constant(1);
    for (unsigned k = 1; k <= total_degree; ++k) den_pow[k] = den_pow[k - 1] * den;
    Polynomial acc;
    Polynomial num_pow = Polynomial::constant(1);
    for (unsigned i = 0; i <= total_degree; ++i) {
        if (f.coeff(i) != 0) acc += f.coeff(i) * num_pow * den_pow[total_degree - i];
        if (i < total_degree) num_pow *= num;
    }
    return acc;
}

}  // namespace tanrec
