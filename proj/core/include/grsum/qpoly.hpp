#pragma once

/**
 * @file qpoly.hpp
 * @brief Exact polynomials over Q and their residues modulo 1 - q^k.
 *
 * DensePoly is an ordinary polynomial indexed by exponent. CyclicPoly is the
 * unique representative of degree < k of a class in Q[q]/(1 - q^k); reduction
 * folds exponents modulo k, which is exactly remainder division by 1 - q^k.
 */

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grsum/rational.hpp"

namespace grsum {

class DensePoly {
public:
    /// The zero polynomial.
    DensePoly() = default;
    explicit DensePoly(std::vector<Rational> coeffs);
    static DensePoly from_integers(std::span<const long long> coeffs);
    static DensePoly one() { return DensePoly({Rational(1)}); }

    /// Degree of the polynomial; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of q^n, zero past the degree.
    Rational coeff(std::size_t n) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Value at q = 1.
    Rational eval_at_one() const;

    /// Multiplies in place by (1 + sign * q^l).
    void mul_binomial(std::size_t l, int sign);

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
    void trim();

    // Highest stored coefficient is non-zero; the zero polynomial is empty.
    std::vector<Rational> coeffs_;
};

class CyclicPoly {
public:
    /// Zero class modulo 1 - q^order. Rejects order < 1.
    explicit CyclicPoly(std::size_t order);
    /// Takes coefficients of q^0..q^{k-1}; the length fixes the order.
    explicit CyclicPoly(std::vector<Rational> coeffs);

    std::size_t order() const { return coeffs_.size(); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Coefficient of q^(t mod order).
    const Rational& coeff(std::int64_t t) const;

    /// Multiplies in place by (1 + sign * q^l), folding q^order to 1.
    void mul_binomial(std::int64_t l, int sign);

    CyclicPoly& operator/=(const Rational& d);

    /// Product in Q[q]/(1 - q^k); both operands must share the order.
    friend CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b);
    friend bool operator==(const CyclicPoly&, const CyclicPoly&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// (q)_m = (1 - q)(1 - q^2)...(1 - q^m), with (q)_0 = 1.
DensePoly restricted_qproduct(unsigned m);

/// (1 + q)(1 + q^2)...(1 + q^m); coefficient of q^t counts subsets of {1..m} summing to t.
DensePoly parity_product(unsigned m);

/// Remainder of p modulo 1 - q^k. Rejects k < 1.
CyclicPoly cyclic_reduce(const DensePoly& p, std::size_t k);

/// (q)_m mod 1 - q^k, multiplied factor by factor in the quotient ring (O(mk)).
CyclicPoly cyclic_qproduct(unsigned m, std::size_t k);

/// parity_product(m) mod 1 - q^k, multiplied factor by factor (O(mk)).
CyclicPoly cyclic_parity_product(unsigned m, std::size_t k);

/**
 * R^(b)_{k,s}(q) = k^{-b} (q)_{k-1}^b (q)_{s-1} mod 1 - q^k.
 *
 * Coefficient t is the generalized Ramanujan sum sigma^(b)_k(t; s).
 * Requires 1 <= s <= k.
 */
CyclicPoly remainder_poly(std::size_t k, std::size_t s, unsigned b);

/// Coefficient of q^(t mod order).
Rational coeff(const CyclicPoly& p, std::int64_t t);

/// {"k": K, "coeffs": [{"num": "...", "den": "..."}, ...]}
std::string to_json(const CyclicPoly& p);
CyclicPoly cyclic_poly_from_json(std::string_view json);

} // namespace grsum
