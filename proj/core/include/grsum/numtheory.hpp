#pragma once

/**
 * @file numtheory.hpp
 * @brief Elementary arithmetic functions: divisors, Moebius, Euler phi,
 *        Ramanujan sums, divisor sums and binary weight.
 *
 * All functions are pure. Factorization is trial division, which is ample
 * for the moduli used here (k up to about 10^6).
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "grsum/rational.hpp"

namespace grsum {

/// Prime factorization as ascending (prime, exponent) pairs. Rejects n < 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Ascending list of the positive divisors of k. Rejects k < 1.
std::vector<std::int64_t> divisors(std::int64_t k);

int moebius(std::int64_t k);

std::int64_t euler_phi(std::int64_t k);

/// Smallest prime dividing k (k itself when k is prime). Rejects k < 2.
std::int64_t smallest_prime_factor(std::int64_t k);

bool is_prime(std::int64_t n);

/// Non-negative residue of t modulo k (k >= 1).
constexpr std::int64_t mod_floor(std::int64_t t, std::int64_t k) {
    std::int64_t r = t % k;
    return r < 0 ? r + k : r;
}

/// gcd(k, t mod k), with gcd(k, 0) = k.
std::int64_t gcd_mod(std::int64_t k, std::int64_t t);

/// Ramanujan sum c_k(t) = sum over d | (k, t) of mu(k/d) d.
/// t may be any integer; it is reduced modulo k first.
std::int64_t ramanujan_c(std::int64_t k, std::int64_t t);

/// sigma_r(n) = sum over d | n of d^r, exact.
Integer divisor_sigma(unsigned r, std::int64_t n);

/// Number of one bits of d.
int binary_weight(std::uint64_t d);

} // namespace grsum
